#include "htw/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace htw {

VertexSet::VertexSet(std::initializer_list<int> ids) : ids_(ids) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet::VertexSet(std::vector<int> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet VertexSet::range(int n) {
  VertexSet s;
  s.ids_.resize(n > 0 ? n : 0);
  for (int i = 0; i < n; ++i) s.ids_[i] = i;
  return s;
}

bool VertexSet::contains(int v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

void VertexSet::add(int v) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it == ids_.end() || *it != v) ids_.insert(it, v);
}

void VertexSet::remove(int v) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it != ids_.end() && *it == v) ids_.erase(it);
}

bool VertexSet::subset_of(const VertexSet& other) const {
  return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(),
                       ids_.end());
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  std::vector<int> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return VertexSet(std::move(out));
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  adj_.assign(n, {});
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("graph: edge endpoint " +
                                  std::to_string(u < 0 || u >= n ? u : v) +
                                  " out of range");
    if (u == v)
      throw std::invalid_argument("graph: self-loop at vertex " +
                                  std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  m_ = static_cast<int>(edges.size());
  for (int v = 0; v < n; ++v) {
    std::sort(adj_[v].begin(), adj_[v].end());
    if (std::adjacent_find(adj_[v].begin(), adj_[v].end()) != adj_[v].end())
      throw std::invalid_argument("graph: duplicate edge at vertex " +
                                  std::to_string(v));
  }
}

const std::vector<int>& Graph::neighbors(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("graph: vertex out of range");
  return adj_[v];
}

bool Graph::adjacent(int u, int v) const {
  const auto& a = neighbors(u);
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

int InducedSubgraph::to_new(int old_id) const {
  auto it = std::lower_bound(to_old.begin(), to_old.end(), old_id);
  if (it == to_old.end() || *it != old_id) return -1;
  return static_cast<int>(it - to_old.begin());
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vertices) {
  InducedSubgraph sub;
  sub.to_old = vertices.ids();
  for (int v : sub.to_old)
    if (v < 0 || v >= g.n())
      throw std::invalid_argument("induced_subgraph: vertex out of range");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < static_cast<int>(sub.to_old.size()); ++i) {
    for (int w : g.neighbors(sub.to_old[i])) {
      if (w <= sub.to_old[i]) continue;
      int j = sub.to_new(w);
      if (j >= 0) edges.emplace_back(i, j);
    }
  }
  sub.graph = Graph(static_cast<int>(sub.to_old.size()), edges);
  return sub;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<char> seen(g.n(), 0);
  std::vector<int> queue;
  for (int s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    queue.assign(1, s);
    seen[s] = 1;
    std::vector<int> comp;
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      comp.push_back(v);
      for (int w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
    }
    out.push_back(VertexSet(std::move(comp)));
  }
  return out;
}

VertexSet neighborhood(const Graph& g, const VertexSet& s) {
  VertexSet out;
  for (int v : s) {
    for (int w : g.neighbors(v))
      if (!s.contains(w)) out.add(w);
  }
  return out;
}

bool is_separation(const Graph& g, const Separation& sep) {
  if (set_union(sep.a, sep.b).size() != g.n()) return false;
  for (int v : sep.a) {
    if (v < 0 || v >= g.n()) return false;
    if (sep.b.contains(v)) continue;
    for (int w : g.neighbors(v))
      if (sep.b.contains(w) && !sep.a.contains(w)) return false;
  }
  for (int v : sep.b)
    if (v < 0 || v >= g.n()) return false;
  return true;
}

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: need at least 3 vertices");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph(a + b, e);
}

Graph star_graph(int leaves) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, e);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto e = a.edges();
  for (auto [u, v] : b.edges()) e.emplace_back(u + a.n(), v + a.n());
  return Graph(a.n() + b.n(), e);
}

}  // namespace htw
