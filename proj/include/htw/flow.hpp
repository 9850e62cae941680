#pragma once

#include <variant>
#include <vector>

#include "htw/graph.hpp"

namespace htw {

/// Vertex-disjoint x-y paths. Paths are vertex sequences with consecutive
/// vertices adjacent; a single vertex of x inter y forms a length-0 path.
/// Paths are pairwise disjoint including their endpoints.
struct PathFamily {
  std::vector<std::vector<int>> paths;
};

struct SmallCut {
  Separation separation;  // x subset a, y subset b, |a inter b| minimum
};

struct ManyPaths {
  PathFamily family;  // exactly budget+1 disjoint paths
};

using FlowResult = std::variant<SmallCut, ManyPaths>;

inline const Separation* small_cut(const FlowResult& r) {
  auto* c = std::get_if<SmallCut>(&r);
  return c ? &c->separation : nullptr;
}

inline const PathFamily* many_paths(const FlowResult& r) {
  auto* p = std::get_if<ManyPaths>(&r);
  return p ? &p->family : nullptr;
}

struct FlowStats {
  int augmentation_rounds = 0;  // never exceeds budget+1
};

/// Budgeted minimum vertex (x,y)-separator via unit-vertex-capacity
/// augmentation. Either certifies lambda(x, y) <= budget with a minimum-order
/// separation (SmallCut), or returns budget+1 vertex-disjoint (x,y)-paths
/// (ManyPaths). Separators may contain vertices of x and y; every vertex of
/// x inter y is a forced cut vertex and its own trivial path.
///
/// x and y must be nonempty subsets of V(g), budget >= 0. Deterministic:
/// augmenting paths come from breadth-first search with lowest-id
/// tie-breaking.
FlowResult min_vertex_separator(const Graph& g, const VertexSet& x,
                                const VertexSet& y, int budget,
                                FlowStats* stats = nullptr);

}  // namespace htw
