#include "htw/weak_coverage.hpp"

#include <stdexcept>

#include "htw/decompose.hpp"
#include "htw/flow.hpp"

namespace htw {

namespace {

// Vertices reachable from `from` in g - removed (including `from` itself).
VertexSet reachable_avoiding(const Graph& g, const VertexSet& from,
                             const VertexSet& removed) {
  std::vector<char> seen(g.n(), 0);
  std::vector<int> stack;
  for (int v : from)
    if (!removed.contains(v)) {
      seen[v] = 1;
      stack.push_back(v);
    }
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : g.neighbors(v))
      if (!seen[u] && !removed.contains(u)) {
        seen[u] = 1;
        stack.push_back(u);
      }
  }
  std::vector<int> out;
  for (int v = 0; v < g.n(); ++v)
    if (seen[v]) out.push_back(v);
  return VertexSet(std::move(out));
}

}  // namespace

CoverageAnswer weak_coverage(const Graph& g, const VertexSet& z, int k,
                             const ClassOracle& h, WeakCoverageStats* stats) {
  if (z.empty()) throw std::invalid_argument("weak_coverage: z must be nonempty");
  if (k < 0) throw std::invalid_argument("weak_coverage: negative k");

  WeakCoverageStats local;
  WeakCoverageStats& st = stats ? *stats : local;
  st.oracle_budget = 2 * k;

  VertexSet x = VertexSet::range(g.n());  // g - x is always a class member
  while (true) {
    if (++st.iterations > g.n() + 1)
      throw std::logic_error("weak_coverage: loop failed to make progress");

    if (x.empty())
      return Covered{{reachable_avoiding(g, z, {}), VertexSet{}, 2 * k}};

    FlowResult r = min_vertex_separator(g, z, x, 2 * k);
    if (const Separation* sep = small_cut(r)) {
      VertexSet s = set_intersection(sep->a, sep->b);
      return Covered{{reachable_avoiding(g, z, s), s, 2 * k}};
    }

    // 2k+1 disjoint paths from z into x: their x-endpoints are redundant
    // enough that the oracle may replace them by at most 2k vertices.
    VertexSet endpoints;
    for (const auto& path : many_paths(r)->paths) endpoints.add(path.back());
    ++st.oracle_calls;
    std::optional<VertexSet> improved =
        improve_deletion_set(g, x, endpoints, h, 2 * k);
    if (!improved) return NoCoverage{};
    x = std::move(*improved);
    ++st.improvements;
  }
}

}  // namespace htw
