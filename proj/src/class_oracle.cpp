#include "htw/class_oracle.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

#include "htw/flow.hpp"

namespace htw {

std::optional<std::vector<int>> two_coloring(const Graph& g) {
  std::vector<int> color(g.n(), -1);
  std::vector<int> queue;
  for (int s = 0; s < g.n(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    queue.assign(1, s);
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (int w : g.neighbors(v)) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

bool bipartite_membership(const Graph& g) { return two_coloring(g).has_value(); }

namespace {

// Minimum vertex set meeting every component of h that contains both a
// "keep" and a "flip" terminal. Separators may contain terminals; empty
// terminal sides need no deletion at all.
std::optional<VertexSet> annotated_conflict_cut(const Graph& h,
                                                const VertexSet& keep,
                                                const VertexSet& flip,
                                                int budget) {
  if (budget < 0) return std::nullopt;
  if (keep.empty() || flip.empty()) return VertexSet{};
  FlowResult r = min_vertex_separator(h, keep, flip, budget);
  if (const Separation* sep = small_cut(r))
    return set_intersection(sep->a, sep->b);
  return std::nullopt;
}

// Exact minimum odd-cycle transversal of g, given a valid transversal to
// compress. Enumerates all delete/left/right assignments of the current
// transversal; kept vertices pin the final 2-coloring on their neighbors,
// and the leftover conflicts reduce to a vertex cut in g minus the
// transversal.
VertexSet compress_transversal(const Graph& g, const VertexSet& oct) {
  VertexSet best = oct;
  int s = oct.size();
  if (s == 0) return best;

  VertexSet rest = set_difference(VertexSet::range(g.n()), oct);
  InducedSubgraph h = induced_subgraph(g, rest);
  auto coloring = two_coloring(h.graph);
  if (!coloring)
    throw std::logic_error("compress_transversal: input is not a transversal");

  std::vector<int> roles(s, 0);  // 0 = delete, 1 = left, 2 = right
  long long total = 1;
  for (int i = 0; i < s; ++i) total *= 3;

  for (long long code = 0; code < total; ++code) {
    long long c = code;
    for (int i = 0; i < s; ++i) {
      roles[i] = static_cast<int>(c % 3);
      c /= 3;
    }

    VertexSet del, left, right;
    for (int i = 0; i < s; ++i) {
      int v = oct.ids()[i];
      if (roles[i] == 0) del.add(v);
      else if (roles[i] == 1) left.add(v);
      else right.add(v);
    }
    bool ok = true;
    for (int v : left)
      for (int w : g.neighbors(v))
        if (left.contains(w)) { ok = false; break; }
    for (int v : right)
      for (int w : g.neighbors(v))
        if (right.contains(w)) { ok = false; break; }
    if (!ok) continue;

    // Forced orientations for the kept 2-coloring: a neighbor of `left`
    // must land on the right side and vice versa; "keep" means the fixed
    // coloring already agrees, "flip" that its component must swap sides.
    VertexSet keep, flip;
    for (int i = 0; i < h.graph.n(); ++i) {
      int old_id = h.to_old[i];
      bool needs_right = false, needs_left = false;
      for (int w : g.neighbors(old_id)) {
        if (left.contains(w)) needs_right = true;
        if (right.contains(w)) needs_left = true;
      }
      int col = (*coloring)[i];  // 0 = left side of the fixed coloring
      if (needs_right) ((col == 1) ? keep : flip).add(i);
      if (needs_left) ((col == 0) ? keep : flip).add(i);
    }

    int cut_budget = best.size() - del.size() - 1;
    auto cut = annotated_conflict_cut(h.graph, keep, flip, cut_budget);
    if (!cut) continue;
    VertexSet candidate = del;
    for (int v : *cut) candidate.add(h.to_old[v]);
    if (candidate.size() < best.size()) best = candidate;
  }
  return best;
}

}  // namespace

DeletionAnswer bipartite_min_deletion(const Graph& g, int budget) {
  if (budget < 0)
    throw std::invalid_argument("bipartite_min_deletion: negative budget");

  // Iterative compression over the vertex prefix order. The prefix-induced
  // subgraph keeps vertex ids, so the transversal needs no translation.
  VertexSet oct;
  for (int i = 0; i < g.n(); ++i) {
    InducedSubgraph prefix = induced_subgraph(g, VertexSet::range(i + 1));
    oct.add(i);
    oct = compress_transversal(prefix.graph, oct);
    if (oct.size() > budget) return DeletionAnswer::exceeds_budget();
  }
  return DeletionAnswer::of(oct);
}

namespace {

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.m() != b.m()) return false;
  int n = a.n();
  std::vector<int> da(n), db(n);
  for (int v = 0; v < n; ++v) {
    da[v] = static_cast<int>(a.neighbors(v).size());
    db[v] = static_cast<int>(b.neighbors(v).size());
  }
  auto sa = da, sb = db;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;

  std::vector<int> map_to(n, -1);
  std::vector<char> used(n, 0);
  // Backtracking on vertex images; graphs here have at most 5 vertices.
  std::function<bool(int)> place = [&](int v) {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[w] || da[v] != db[w]) continue;
      bool ok = true;
      for (int u = 0; u < v; ++u)
        if (a.adjacent(u, v) != b.adjacent(map_to[u], w)) { ok = false; break; }
      if (!ok) continue;
      map_to[v] = w;
      used[w] = 1;
      if (place(v + 1)) return true;
      used[w] = 0;
      map_to[v] = -1;
    }
    return false;
  };
  return place(0);
}

struct ObstructionFinder {
  const Graph& g;
  const std::vector<Graph>& family;
  const std::vector<char>* deleted;  // optional mask of removed vertices
  std::vector<int> sizes;            // distinct family sizes
  int max_size = 0;
  int max_degree = 0;

  ObstructionFinder(const Graph& g_, const std::vector<Graph>& family_,
                    const std::vector<char>* deleted_)
      : g(g_), family(family_), deleted(deleted_) {
    for (const Graph& f : family) {
      if (f.n() < 1 || f.n() > 5)
        throw std::invalid_argument(
            "forbidden family members must have 1..5 vertices");
      max_size = std::max(max_size, f.n());
      for (int v = 0; v < f.n(); ++v)
        max_degree =
            std::max(max_degree, static_cast<int>(f.neighbors(v).size()));
      if (std::find(sizes.begin(), sizes.end(), f.n()) == sizes.end())
        sizes.push_back(f.n());
    }
  }

  bool alive(int v) const { return !deleted || !(*deleted)[v]; }

  std::vector<int> chosen;

  bool matches_family() const {
    InducedSubgraph sub = induced_subgraph(g, VertexSet(chosen));
    for (const Graph& f : family)
      if (f.n() == static_cast<int>(chosen.size()) && isomorphic(sub.graph, f))
        return true;
    return false;
  }

  // Depth-first extension by ascending vertex id visits candidate sets in
  // lexicographic order, so the first hit is the smallest obstruction.
  std::optional<VertexSet> search(int next) {
    if (!chosen.empty() &&
        std::find(sizes.begin(), sizes.end(),
                  static_cast<int>(chosen.size())) != sizes.end() &&
        matches_family())
      return VertexSet(chosen);
    if (static_cast<int>(chosen.size()) == max_size) return std::nullopt;
    for (int v = next; v < g.n(); ++v) {
      if (!alive(v)) continue;
      // Degree pruning: inside the final obstruction no vertex exceeds the
      // family's maximum degree, and that holds for every subset of it.
      int dv = 0;
      bool ok = true;
      for (int u : chosen) {
        if (!g.adjacent(u, v)) continue;
        ++dv;
        int du = 0;
        for (int w : chosen)
          if (g.adjacent(u, w)) ++du;
        if (du + 1 > max_degree) { ok = false; break; }
      }
      if (!ok || dv > max_degree) continue;
      chosen.push_back(v);
      if (auto hit = search(v + 1)) return hit;
      chosen.pop_back();
    }
    return std::nullopt;
  }
};

std::optional<VertexSet> first_obstruction(const Graph& g,
                                           const std::vector<Graph>& family,
                                           const std::vector<char>* deleted) {
  if (family.empty())
    throw std::invalid_argument("forbidden family must be nonempty");
  ObstructionFinder finder(g, family, deleted);
  return finder.search(0);
}

// Bounded branching: some vertex of the first obstruction must be deleted.
bool branch_delete(const Graph& g, const std::vector<Graph>& family,
                   std::vector<char>& deleted, int budget,
                   std::vector<int>& out) {
  auto obs = first_obstruction(g, family, &deleted);
  if (!obs) return true;
  if (budget == 0) return false;
  for (int v : *obs) {
    deleted[v] = 1;
    out.push_back(v);
    if (branch_delete(g, family, deleted, budget - 1, out)) return true;
    out.pop_back();
    deleted[v] = 0;
  }
  return false;
}

}  // namespace

std::optional<VertexSet> find_obstruction(const Graph& g,
                                          const std::vector<Graph>& family) {
  return first_obstruction(g, family, nullptr);
}

bool forbidden_family_membership(const Graph& g,
                                 const std::vector<Graph>& family) {
  return !first_obstruction(g, family, nullptr).has_value();
}

DeletionAnswer forbidden_family_min_deletion(const Graph& g,
                                             const std::vector<Graph>& family,
                                             int budget) {
  if (budget < 0)
    throw std::invalid_argument("forbidden_family_min_deletion: negative budget");
  std::vector<char> deleted(g.n(), 0);
  std::vector<int> out;
  // The first target hit is the exact minimum: a budget-t search succeeds
  // exactly when a deletion set of size <= t exists.
  for (int target = 0; target <= budget; ++target) {
    out.clear();
    std::fill(deleted.begin(), deleted.end(), 0);
    if (branch_delete(g, family, deleted, target, out))
      return DeletionAnswer::of(VertexSet(out));
  }
  return DeletionAnswer::exceeds_budget();
}

ClassOracle bipartite_oracle() {
  return ClassOracle{
      "bipartite",
      [](const Graph& g) { return bipartite_membership(g); },
      [](const Graph& g, int budget) { return bipartite_min_deletion(g, budget); }};
}

ClassOracle forbidden_family_oracle(std::string name, std::vector<Graph> family) {
  if (family.empty())
    throw std::invalid_argument("forbidden family must be nonempty");
  for (const Graph& f : family)
    if (f.n() < 1 || f.n() > 5)
      throw std::invalid_argument("forbidden family members must have 1..5 vertices");
  auto shared = std::make_shared<std::vector<Graph>>(std::move(family));
  return ClassOracle{
      std::move(name),
      [shared](const Graph& g) { return forbidden_family_membership(g, *shared); },
      [shared](const Graph& g, int budget) {
        return forbidden_family_min_deletion(g, *shared, budget);
      }};
}

ClassOracle preset_oracle(const std::string& name) {
  if (name == "bipartite") return bipartite_oracle();
  if (name == "edgeless") return forbidden_family_oracle("edgeless", {complete_graph(2)});
  if (name == "triangle-free")
    return forbidden_family_oracle("triangle-free", {complete_graph(3)});
  if (name == "cluster") return forbidden_family_oracle("cluster", {path_graph(3)});
  throw std::invalid_argument("unknown class preset: " + name);
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"bipartite", "edgeless",
                                                 "triangle-free", "cluster"};
  return names;
}

}  // namespace htw
