#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

namespace htw {

/// Sorted, duplicate-free set of vertex ids. Every algorithm in this library
/// iterates vertex sets in ascending id order, which keeps all outputs
/// reproducible across runs.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<int> ids);
  explicit VertexSet(std::vector<int> ids);

  /// {0, 1, ..., n-1}
  static VertexSet range(int n);

  bool contains(int v) const;
  bool empty() const { return ids_.empty(); }
  int size() const { return static_cast<int>(ids_.size()); }

  void add(int v);
  void remove(int v);

  bool subset_of(const VertexSet& other) const;

  const std::vector<int>& ids() const { return ids_; }
  std::vector<int>::const_iterator begin() const { return ids_.begin(); }
  std::vector<int>::const_iterator end() const { return ids_.end(); }

  bool operator==(const VertexSet&) const = default;

 private:
  std::vector<int> ids_;  // sorted ascending, unique
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);

/// Immutable simple undirected graph on vertex ids 0..n-1.
/// Adjacency lists are kept sorted; self-loops and parallel edges are
/// rejected at construction time.
class Graph {
 public:
  Graph() = default;
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int n() const { return n_; }
  int m() const { return m_; }

  const std::vector<int>& neighbors(int v) const;
  bool adjacent(int u, int v) const;

  std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> adj_;
};

/// Induced subgraph together with the id translation in both directions.
/// New ids are assigned in ascending order of the old ids, so `to_old` is
/// sorted and `to_new` can binary-search it.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_old;  // new id -> old id

  int to_new(int old_id) const;  // -1 if old_id is not part of the subgraph
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vertices);

/// Connected components, ordered by their smallest contained vertex id.
std::vector<VertexSet> components(const Graph& g);

/// Open neighborhood N(s): vertices outside s with a neighbor inside s.
VertexSet neighborhood(const Graph& g, const VertexSet& s);

/// A separation (A, B): A and B cover V(g) and no edge joins A\B to B\A.
/// Its order is |A inter B|.
struct Separation {
  VertexSet a;
  VertexSet b;

  int order() const { return set_intersection(a, b).size(); }
};

bool is_separation(const Graph& g, const Separation& sep);

// Small builders used by tests, presets and the docs.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph star_graph(int leaves);
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace htw
