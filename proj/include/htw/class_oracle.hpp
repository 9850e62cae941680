#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "htw/graph.hpp"

namespace htw {

/// Answer of a budgeted minimum deletion query. An engaged set is a
/// minimum-size deletion set (its size is at most the budget); disengaged
/// means every deletion set is larger than the budget.
struct DeletionAnswer {
  std::optional<VertexSet> deletion_set;

  bool found() const { return deletion_set.has_value(); }
  static DeletionAnswer exceeds_budget() { return {}; }
  static DeletionAnswer of(VertexSet s) { return {std::move(s)}; }
};

/// A hereditary, union-closed graph class, packaged as a membership test and
/// a budgeted minimum vertex-deletion solver. Both must be deterministic.
struct ClassOracle {
  std::string name;
  std::function<bool(const Graph&)> is_member;
  std::function<DeletionAnswer(const Graph&, int budget)> min_deletion;
};

/// Proper 2-coloring (colors 0/1, BFS from the smallest id of each component,
/// which gets color 0), or nullopt when the graph has an odd cycle.
std::optional<std::vector<int>> two_coloring(const Graph& g);

bool bipartite_membership(const Graph& g);

/// Exact minimum odd-cycle transversal within the budget, via iterative
/// compression; each compression step enumerates 3-way splits of the current
/// transversal and reduces to vertex cut computations.
DeletionAnswer bipartite_min_deletion(const Graph& g, int budget);

/// Classes defined by a finite family of forbidden induced subgraphs, each on
/// at most 5 vertices. Membership scans for an obstruction; deletion runs a
/// bounded branching search over the first obstruction found.
bool forbidden_family_membership(const Graph& g, const std::vector<Graph>& family);
DeletionAnswer forbidden_family_min_deletion(const Graph& g,
                                             const std::vector<Graph>& family,
                                             int budget);

/// Lexicographically smallest vertex set inducing a forbidden subgraph, or
/// nullopt if the graph is in the class.
std::optional<VertexSet> find_obstruction(const Graph& g,
                                          const std::vector<Graph>& family);

ClassOracle bipartite_oracle();
ClassOracle forbidden_family_oracle(std::string name, std::vector<Graph> family);

/// Presets: "bipartite", "edgeless" (forbidden K2), "triangle-free"
/// (forbidden K3), "cluster" (forbidden P3). Unknown names throw.
ClassOracle preset_oracle(const std::string& name);
const std::vector<std::string>& preset_names();

}  // namespace htw
