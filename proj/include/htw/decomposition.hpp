#pragma once

#include <array>
#include <string>
#include <vector>

#include "htw/class_oracle.hpp"
#include "htw/graph.hpp"

namespace htw {

struct DecompositionNode {
  int id = -1;
  int parent = -1;  // -1 for the root
  VertexSet bag;
};

/// Rooted tree of bags plus a base set. Vertices of the base set live in
/// exactly one bag each, at a leaf, and only contribute to the leaf's base
/// part; all other vertices behave as in an ordinary tree decomposition.
/// Node ids always equal their index in `nodes`.
struct TreeHDecomposition {
  std::vector<DecompositionNode> nodes;
  int root = -1;
  VertexSet base_set;
};

inline TreeHDecomposition single_node_decomposition(VertexSet bag) {
  TreeHDecomposition d;
  d.nodes.push_back({0, -1, std::move(bag)});
  d.root = 0;
  return d;
}

/// max over nodes of |bag minus base_set| - 1, clamped at 0.
int width(const TreeHDecomposition& d);

/// The four structural rules a decomposition must satisfy against a graph
/// and a class oracle.
enum class DecompositionRule {
  VertexTrace = 1,     // every vertex appears, in a connected subtree
  EdgeCoverage = 2,    // every edge inside some bag
  BaseUniqueness = 3,  // base vertices in exactly one bag, at a leaf
  BaseMembership = 4,  // each bag's base part induces a class member
};

std::string rule_name(DecompositionRule rule);

struct Violation {
  DecompositionRule rule;
  int vertex = -1;              // witness for rules 1 and 3
  int node = -1;                // witness for rule 4
  std::array<int, 2> edge{-1, -1};  // witness for rule 2
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
};

/// Checks all four rules and reports every violation with a witness.
/// Structurally broken inputs (ids out of range, parent links that do not
/// form a rooted tree, bags or base set outside V(g)) throw
/// std::invalid_argument instead.
ValidationReport validate(const Graph& g, const TreeHDecomposition& d,
                          const ClassOracle& h);

/// New decomposition: a fresh root with the given bag whose children are the
/// roots of a and b. Node ids are renumbered contiguously with the root at 0;
/// base sets are united.
TreeHDecomposition merge(const TreeHDecomposition& a, const TreeHDecomposition& b,
                         const VertexSet& root_bag);

/// Graphviz rendering; base-set vertices are starred.
std::string to_dot(const TreeHDecomposition& d);

}  // namespace htw
