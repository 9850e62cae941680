#include "htw/decomposition.hpp"

#include <algorithm>
#include <stdexcept>

namespace htw {

int width(const TreeHDecomposition& d) {
  int w = 0;
  for (const auto& node : d.nodes)
    w = std::max(w, set_difference(node.bag, d.base_set).size() - 1);
  return w;
}

std::string rule_name(DecompositionRule rule) {
  switch (rule) {
    case DecompositionRule::VertexTrace: return "vertex-trace";
    case DecompositionRule::EdgeCoverage: return "edge-coverage";
    case DecompositionRule::BaseUniqueness: return "base-uniqueness";
    case DecompositionRule::BaseMembership: return "base-membership";
  }
  return "unknown";
}

namespace {

void check_structure(const Graph& g, const TreeHDecomposition& d) {
  int count = static_cast<int>(d.nodes.size());
  if (count == 0) throw std::invalid_argument("decomposition has no nodes");
  if (d.root < 0 || d.root >= count)
    throw std::invalid_argument("decomposition root out of range");
  for (int i = 0; i < count; ++i) {
    const auto& node = d.nodes[i];
    if (node.id != i)
      throw std::invalid_argument("decomposition node ids must be 0..N-1 in order");
    if (i == d.root) {
      if (node.parent != -1)
        throw std::invalid_argument("root node must have parent -1");
    } else if (node.parent < 0 || node.parent >= count || node.parent == i) {
      throw std::invalid_argument("node parent out of range");
    }
    for (int v : node.bag)
      if (v < 0 || v >= g.n())
        throw std::invalid_argument("bag contains vertex outside the graph");
  }
  for (int v : d.base_set)
    if (v < 0 || v >= g.n())
      throw std::invalid_argument("base set contains vertex outside the graph");
  // Walking up from every node must reach the root without cycling.
  for (int i = 0; i < count; ++i) {
    int cur = i, steps = 0;
    while (cur != d.root) {
      cur = d.nodes[cur].parent;
      if (++steps > count)
        throw std::invalid_argument("parent links contain a cycle");
    }
  }
}

}  // namespace

ValidationReport validate(const Graph& g, const TreeHDecomposition& d,
                          const ClassOracle& h) {
  check_structure(g, d);
  ValidationReport report;
  int count = static_cast<int>(d.nodes.size());

  std::vector<int> child_count(count, 0);
  for (const auto& node : d.nodes)
    if (node.id != d.root) ++child_count[node.parent];

  // Rule 1: nonempty, connected traces. A trace is connected exactly when a
  // single one of its nodes has its parent outside the trace.
  std::vector<std::vector<int>> trace(g.n());
  for (const auto& node : d.nodes)
    for (int v : node.bag) trace[v].push_back(node.id);
  std::vector<char> in_trace(count, 0);
  for (int v = 0; v < g.n(); ++v) {
    if (trace[v].empty()) {
      report.violations.push_back({DecompositionRule::VertexTrace, v, -1,
                                   {-1, -1},
                                   "vertex " + std::to_string(v) +
                                       " appears in no bag"});
      continue;
    }
    for (int t : trace[v]) in_trace[t] = 1;
    int tops = 0;
    for (int t : trace[v]) {
      int p = d.nodes[t].parent;
      if (t == d.root || !in_trace[p]) ++tops;
    }
    for (int t : trace[v]) in_trace[t] = 0;
    if (tops != 1)
      report.violations.push_back({DecompositionRule::VertexTrace, v, -1,
                                   {-1, -1},
                                   "bags containing vertex " + std::to_string(v) +
                                       " are disconnected in the tree"});
  }

  // Rule 2: every edge inside some bag.
  for (auto [u, v] : g.edges()) {
    bool covered = false;
    for (const auto& node : d.nodes)
      if (node.bag.contains(u) && node.bag.contains(v)) {
        covered = true;
        break;
      }
    if (!covered)
      report.violations.push_back({DecompositionRule::EdgeCoverage, -1, -1,
                                   {u, v},
                                   "edge {" + std::to_string(u) + "," +
                                       std::to_string(v) + "} not inside any bag"});
  }

  // Rule 3: base vertices occur exactly once, at a leaf.
  for (int v : d.base_set) {
    if (trace[v].size() != 1) {
      report.violations.push_back({DecompositionRule::BaseUniqueness, v, -1,
                                   {-1, -1},
                                   "base vertex " + std::to_string(v) +
                                       " appears in " +
                                       std::to_string(trace[v].size()) + " bags"});
    } else if (child_count[trace[v][0]] != 0) {
      report.violations.push_back({DecompositionRule::BaseUniqueness, v, -1,
                                   {-1, -1},
                                   "base vertex " + std::to_string(v) +
                                       " lives in a non-leaf bag"});
    }
  }

  // Rule 4: the base part of each bag induces a class member.
  for (const auto& node : d.nodes) {
    VertexSet base_part = set_intersection(node.bag, d.base_set);
    InducedSubgraph sub = induced_subgraph(g, base_part);
    if (!h.is_member(sub.graph))
      report.violations.push_back({DecompositionRule::BaseMembership, -1,
                                   node.id,
                                   {-1, -1},
                                   "base part of bag " + std::to_string(node.id) +
                                       " induces a graph outside the class"});
  }
  return report;
}

TreeHDecomposition merge(const TreeHDecomposition& a, const TreeHDecomposition& b,
                         const VertexSet& root_bag) {
  if (a.nodes.empty() || b.nodes.empty())
    throw std::invalid_argument("merge: decompositions must be nonempty");
  TreeHDecomposition out;
  out.root = 0;
  out.nodes.push_back({0, -1, root_bag});
  int offset_a = 1;
  int offset_b = 1 + static_cast<int>(a.nodes.size());
  for (const auto& node : a.nodes) {
    int parent = node.id == a.root ? 0 : node.parent + offset_a;
    out.nodes.push_back({node.id + offset_a, parent, node.bag});
  }
  for (const auto& node : b.nodes) {
    int parent = node.id == b.root ? 0 : node.parent + offset_b;
    out.nodes.push_back({node.id + offset_b, parent, node.bag});
  }
  out.base_set = set_union(a.base_set, b.base_set);
  return out;
}

std::string to_dot(const TreeHDecomposition& d) {
  std::string out = "graph decomposition {\n  node [shape=box];\n";
  for (const auto& node : d.nodes) {
    out += "  n" + std::to_string(node.id) + " [label=\"";
    bool first = true;
    for (int v : node.bag) {
      if (!first) out += ",";
      first = false;
      out += std::to_string(v);
      if (d.base_set.contains(v)) out += "*";
    }
    out += "\"";
    if (node.id == d.root) out += ", peripheries=2";
    out += "];\n";
  }
  for (const auto& node : d.nodes)
    if (node.id != d.root)
      out += "  n" + std::to_string(node.parent) + " -- n" +
             std::to_string(node.id) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace htw
