#include "htw/exact.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace htw {

namespace {

void enforce_cap(const Graph& g, int cap, const char* who) {
  if (g.n() > cap)
    throw std::invalid_argument(std::string(who) + ": graph too large (n <= " +
                                std::to_string(cap) + ")");
}

// Vertices outside mask|bit(v) reachable from v through eliminated = mask.
std::uint32_t reach_through(const Graph& g, int v, std::uint32_t mask) {
  std::uint32_t seen = 1u << v;
  std::vector<int> stack{v};
  std::uint32_t out = 0;
  while (!stack.empty()) {
    int w = stack.back();
    stack.pop_back();
    for (int u : g.neighbors(w)) {
      if (seen >> u & 1) continue;
      seen |= 1u << u;
      if (mask >> u & 1) stack.push_back(u);  // walk on through eliminations
      else out |= 1u << u;
    }
  }
  return out;
}

// prefix_cost[mask] = least achievable maximum back-degree over orders that
// eliminate exactly the vertices of mask first.
std::vector<std::int8_t> elimination_table(const Graph& g) {
  int n = g.n();
  std::vector<std::int8_t> cost(std::size_t(1) << n, 0);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    int best = 127;
    for (int v = 0; v < n; ++v) {
      if (!(mask >> v & 1)) continue;
      std::uint32_t rest = mask & ~(1u << v);
      int degree = std::popcount(reach_through(g, v, rest));
      best = std::min(best, std::max<int>(cost[rest], degree));
    }
    cost[mask] = static_cast<std::int8_t>(best);
  }
  return cost;
}

std::vector<int> minimum_elimination_order(const Graph& g) {
  int n = g.n();
  std::vector<std::int8_t> cost = elimination_table(g);
  std::vector<int> order(n);
  std::uint32_t mask = (n == 0) ? 0 : (1u << n) - 1;
  for (int i = n - 1; i >= 0; --i) {
    for (int v = 0; v < n; ++v) {  // smallest achieving vertex goes last
      if (!(mask >> v & 1)) continue;
      std::uint32_t rest = mask & ~(1u << v);
      int degree = std::popcount(reach_through(g, v, rest));
      if (std::max<int>(cost[rest], degree) == cost[mask]) {
        order[i] = v;
        mask = rest;
        break;
      }
    }
  }
  return order;
}

TreeHDecomposition decomposition_from_elimination(const Graph& g,
                                                  const std::vector<int>& order) {
  int n = g.n();
  if (n == 0) {
    TreeHDecomposition d;
    d.nodes.push_back({0, -1, VertexSet{}});
    d.root = 0;
    return d;
  }
  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[order[i]] = i;

  std::vector<std::uint32_t> fill(n);  // adjacency in the fill graph
  for (int v = 0; v < n; ++v)
    for (int u : g.neighbors(v)) fill[v] |= 1u << u;

  // Bag of order[i] = the vertex plus its later fill-neighbors; the first of
  // those (by elimination time) hosts the parent bag.
  TreeHDecomposition d;
  d.nodes.resize(n);
  d.root = n - 1;
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    std::uint32_t later = 0;
    for (int u = 0; u < n; ++u)
      if ((fill[v] >> u & 1) && position[u] > i) later |= 1u << u;

    VertexSet bag{v};
    int parent = -1;
    for (int u = 0; u < n; ++u)
      if (later >> u & 1) {
        bag.add(u);
        if (parent == -1 || position[u] < position[parent]) parent = u;
      }
    d.nodes[i] = {i, parent == -1 ? (i == n - 1 ? -1 : i + 1) : position[parent],
                  std::move(bag)};

    for (int a = 0; a < n; ++a)  // complete the later neighborhood
      if (later >> a & 1) fill[a] |= later & ~(1u << a);
  }
  return d;
}

}  // namespace

int exact_treewidth(const Graph& g) {
  enforce_cap(g, 10, "exact_treewidth");
  if (g.n() == 0) return 0;
  return elimination_table(g).back();
}

TreeHDecomposition exact_treewidth_witness(const Graph& g) {
  enforce_cap(g, 10, "exact_treewidth_witness");
  return decomposition_from_elimination(g, minimum_elimination_order(g));
}

namespace {

bool components_are_members(const Graph& g, std::uint32_t base_mask,
                            const ClassOracle& h,
                            std::vector<std::int8_t>& memo) {
  std::uint32_t left = base_mask;
  while (left) {
    int v = std::countr_zero(left);
    std::uint32_t comp = 1u << v;  // flood-fill v's component within base_mask
    std::vector<int> stack{v};
    while (!stack.empty()) {
      int w = stack.back();
      stack.pop_back();
      for (int u : g.neighbors(w))
        if ((base_mask >> u & 1) && !(comp >> u & 1)) {
          comp |= 1u << u;
          stack.push_back(u);
        }
    }
    if (memo[comp] == -1) {
      std::vector<int> ids;
      for (int u = 0; u < g.n(); ++u)
        if (comp >> u & 1) ids.push_back(u);
      memo[comp] = h.is_member(induced_subgraph(g, VertexSet(ids)).graph);
    }
    if (!memo[comp]) return false;
    left &= ~comp;
  }
  return true;
}

Graph torso_graph(const Graph& g, std::uint32_t base_mask,
                  std::vector<int>& to_old) {
  int n = g.n();
  to_old.clear();
  std::vector<int> to_new(n, -1);
  for (int v = 0; v < n; ++v)
    if (!(base_mask >> v & 1)) {
      to_new[v] = static_cast<int>(to_old.size());
      to_old.push_back(v);
    }

  std::vector<std::uint32_t> adj(to_old.size());
  for (auto [u, v] : g.edges())
    if (to_new[u] != -1 && to_new[v] != -1) {
      adj[to_new[u]] |= 1u << to_new[v];
      adj[to_new[v]] |= 1u << to_new[u];
    }

  std::uint32_t left = base_mask;
  while (left) {  // clique each base component's neighborhood
    int v = std::countr_zero(left);
    std::uint32_t comp = 1u << v;
    std::vector<int> stack{v};
    while (!stack.empty()) {
      int w = stack.back();
      stack.pop_back();
      for (int u : g.neighbors(w))
        if ((base_mask >> u & 1) && !(comp >> u & 1)) {
          comp |= 1u << u;
          stack.push_back(u);
        }
    }
    std::uint32_t boundary = 0;
    for (int w = 0; w < n; ++w)
      if (comp >> w & 1)
        for (int u : g.neighbors(w))
          if (to_new[u] != -1) boundary |= 1u << to_new[u];
    for (int a = 0; a < static_cast<int>(to_old.size()); ++a)
      if (boundary >> a & 1) adj[a] |= boundary & ~(1u << a);
    left &= ~comp;
  }

  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < static_cast<int>(to_old.size()); ++a)
    for (int b = a + 1; b < static_cast<int>(to_old.size()); ++b)
      if (adj[a] >> b & 1) edges.push_back({a, b});
  return Graph(static_cast<int>(to_old.size()), edges);
}

std::uint32_t best_base_mask(const Graph& g, const ClassOracle& h, int* value) {
  int n = g.n();
  std::vector<std::int8_t> member_memo(std::size_t(1) << n, -1);
  int best = 127;
  std::uint32_t best_mask = 0;
  std::vector<int> to_old;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (!components_are_members(g, mask, h, member_memo)) continue;
    int tw = exact_treewidth(torso_graph(g, mask, to_old));
    if (tw < best) {
      best = tw;
      best_mask = mask;
    }
  }
  if (value) *value = best;
  return best_mask;
}

}  // namespace

int exact_htw(const Graph& g, const ClassOracle& h) {
  enforce_cap(g, 8, "exact_htw");
  if (g.n() == 0) return 0;
  int value = 0;
  best_base_mask(g, h, &value);
  return value;
}

TreeHDecomposition exact_htw_witness(const Graph& g, const ClassOracle& h) {
  enforce_cap(g, 8, "exact_htw_witness");
  if (g.n() == 0) return exact_treewidth_witness(g);
  std::uint32_t base_mask = best_base_mask(g, h, nullptr);

  std::vector<int> to_old;
  Graph torso = torso_graph(g, base_mask, to_old);

  TreeHDecomposition d;
  if (torso.n() == 0) {
    d.nodes.push_back({0, -1, VertexSet{}});
    d.root = 0;
  } else {
    TreeHDecomposition inner = exact_treewidth_witness(torso);
    d = inner;
    d.root = inner.root;
    for (auto& node : d.nodes) {  // back to original vertex ids
      std::vector<int> ids;
      for (int v : node.bag) ids.push_back(to_old[v]);
      node.bag = VertexSet(std::move(ids));
    }
  }

  std::uint32_t left = base_mask;
  while (left) {
    int v = std::countr_zero(left);
    VertexSet comp{v};
    std::vector<int> stack{v};
    while (!stack.empty()) {
      int w = stack.back();
      stack.pop_back();
      for (int u : g.neighbors(w))
        if ((base_mask >> u & 1) && !comp.contains(u)) {
          comp.add(u);
          stack.push_back(u);
        }
    }
    VertexSet boundary = neighborhood(g, comp);
    int host = -1;  // some torso bag contains the whole (cliqued) boundary
    for (const auto& node : d.nodes)
      if (boundary.subset_of(node.bag)) {
        host = node.id;
        break;
      }
    if (host == -1)
      throw std::logic_error("exact_htw_witness: no bag hosts a boundary clique");
    int id = static_cast<int>(d.nodes.size());
    d.nodes.push_back({id, host, set_union(comp, boundary)});
    for (int w : comp) {
      d.base_set.add(w);
      left &= ~(1u << w);
    }
  }
  return d;
}

int exact_min_deletion(const Graph& g, const ClassOracle& h) {
  enforce_cap(g, 12, "exact_min_deletion");
  int n = g.n();
  VertexSet all = VertexSet::range(n);
  for (int size = 0; size <= n; ++size) {
    std::uint32_t mask = (1u << size) - 1;
    do {
      std::vector<int> ids;
      for (int v = 0; v < n; ++v)
        if (mask >> v & 1) ids.push_back(v);
      VertexSet x(std::move(ids));
      if (h.is_member(induced_subgraph(g, set_difference(all, x)).graph))
        return size;
      if (size == 0) break;
      std::uint32_t low = mask & -mask;
      std::uint32_t ripple = mask + low;
      mask = ripple | ((mask ^ ripple) >> 2) / low;
    } while (mask < (1u << n));
  }
  throw std::logic_error("exact_min_deletion: class rejects the empty graph");
}

bool exists_weak_coverage(const Graph& g, const VertexSet& z, int k,
                          const ClassOracle& h) {
  enforce_cap(g, 7, "exists_weak_coverage");
  if (z.empty()) throw std::invalid_argument("exists_weak_coverage: empty z");
  int n = g.n();
  VertexSet all = VertexSet::range(n);
  for (std::uint32_t s_mask = 0; s_mask < (1u << n); ++s_mask) {
    if (std::popcount(s_mask) > k) continue;
    std::vector<int> s_ids;
    for (int v = 0; v < n; ++v)
      if (s_mask >> v & 1) s_ids.push_back(v);
    VertexSet s(std::move(s_ids));

    InducedSubgraph rest = induced_subgraph(g, set_difference(all, s));
    std::vector<VertexSet> comps = components(rest.graph);
    int t = static_cast<int>(comps.size());
    for (std::uint32_t pick = 0; pick < (1u << t); ++pick) {
      VertexSet c;
      for (int i = 0; i < t; ++i)
        if (pick >> i & 1)
          for (int v : comps[i]) c.add(rest.to_old[v]);
      bool covers = true;
      for (int v : z)
        if (!s.contains(v) && !c.contains(v)) {
          covers = false;
          break;
        }
      if (!covers) continue;
      if (h.is_member(induced_subgraph(g, c).graph)) return true;
    }
  }
  return false;
}

}  // namespace htw
