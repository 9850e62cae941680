#include "htw/decompose.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace htw {

std::optional<VertexSet> improve_deletion_set(const Graph& g, const VertexSet& x,
                                              const VertexSet& x_prime,
                                              const ClassOracle& h, int budget) {
  if (!x_prime.subset_of(x))
    throw std::invalid_argument("improve_deletion_set: x_prime must lie in x");
  if (x_prime.empty()) return std::nullopt;  // no set beats size 0

  VertexSet kept = set_difference(x, x_prime);
  InducedSubgraph sub =
      induced_subgraph(g, set_difference(VertexSet::range(g.n()), kept));
  DeletionAnswer answer = h.min_deletion(sub.graph, budget);
  if (!answer.found()) return std::nullopt;
  if (answer.deletion_set->size() >= x_prime.size()) return std::nullopt;

  VertexSet replacement = kept;
  for (int v : *answer.deletion_set) replacement.add(sub.to_old[v]);
  return replacement;
}

namespace {

VertexSet subset_of_mask(const std::vector<int>& ids, std::uint64_t mask) {
  std::vector<int> out;
  out.reserve(std::popcount(mask));
  for (int i = 0; i < static_cast<int>(ids.size()); ++i)
    if (mask >> i & 1) out.push_back(ids[i]);
  return VertexSet(std::move(out));
}

// Next bitmask with the same popcount (Gosper); enumerates fixed-size
// subsets in ascending characteristic-vector order.
std::uint64_t next_combination(std::uint64_t mask) {
  std::uint64_t low = mask & -mask;
  std::uint64_t ripple = mask + low;
  return ripple | ((mask ^ ripple) >> 2) / low;
}

}  // namespace

SubroutineOutcome four_outcome_subroutine(const Graph& g, int k,
                                          const VertexSet& x, const VertexSet& s,
                                          const ClassOracle& h,
                                          SubroutineCounters* counters) {
  if (k < 0) throw std::invalid_argument("four_outcome_subroutine: negative k");
  if (s.size() != 3 * k + 4)
    throw std::invalid_argument("four_outcome_subroutine: |s| must equal 3k+4");
  if (s.size() > 62)
    throw std::invalid_argument("four_outcome_subroutine: boundary too large");

  SubroutineCounters local;
  SubroutineCounters& ctr = counters ? *counters : local;
  ctr.phase_reached = 1;
  ctr.oracle_budget = 2 * k + 2;

  const std::vector<int>& ids = s.ids();
  int len = s.size();

  // Phase 1: a partition of s with both sides small and a cut of order
  // <= k+1 between them.
  std::uint64_t full = (len == 64) ? ~0ull : (1ull << len) - 1;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    int nb = std::popcount(mask);
    if (nb > 2 * k + 2 || len - nb > 2 * k + 2) continue;
    VertexSet side_b = subset_of_mask(ids, mask);
    VertexSet side_a = subset_of_mask(ids, full & ~mask);
    FlowResult r = min_vertex_separator(g, side_a, side_b, k + 1);
    if (const Separation* sep = small_cut(r))
      return BalancedSplit{std::move(side_a), std::move(side_b), *sep};
  }

  // Phase 2: a size-(2k+3) piece of s separated from the deletion set by a
  // cut of order <= 2k+2. With nothing left to separate from, the whole
  // graph is that piece's side.
  ctr.phase_reached = 2;
  std::uint64_t first = (1ull << (2 * k + 3)) - 1;
  if (x.empty())
    return BaseSplit{subset_of_mask(ids, first),
                     Separation{VertexSet::range(g.n()), VertexSet{}}};
  for (std::uint64_t mask = first; mask <= full; mask = next_combination(mask)) {
    FlowResult r = min_vertex_separator(g, subset_of_mask(ids, mask), x, 2 * k + 2);
    if (const Separation* sep = small_cut(r))
      return BaseSplit{subset_of_mask(ids, mask), *sep};
  }

  // Phase 3: every piece is joined to x by 2k+3 disjoint paths; their
  // endpoints inside x are candidates for an exchange.
  ctr.phase_reached = 3;
  for (std::uint64_t mask = first; mask <= full; mask = next_combination(mask)) {
    VertexSet piece = subset_of_mask(ids, mask);
    FlowResult r = min_vertex_separator(g, piece, x, 2 * k + 2);
    const PathFamily* fam = many_paths(r);
    if (!fam)
      throw std::logic_error("four_outcome_subroutine: phase 2 missed a cut");
    VertexSet endpoints;
    for (const auto& path : fam->paths) endpoints.add(path.back());
    ++ctr.oracle_calls;
    if (auto improved = improve_deletion_set(g, x, endpoints, h, 2 * k + 2))
      return ImprovedDeletionSet{std::move(*improved)};
  }
  return RejectWidth{};
}

namespace {

VertexSet region_boundary(const Graph& g, const VertexSet& w) {
  VertexSet out;
  for (int v : w)
    for (int u : g.neighbors(v))
      if (!w.contains(u)) {
        out.add(v);
        break;
      }
  return out;
}

struct Engine {
  const Graph& g;
  int k;
  const ClassOracle& h;
  DecomposeOptions options;
  VertexSet deletion_set;
  DecomposeStats stats;

  std::optional<TreeHDecomposition> solve(const VertexSet& s, const VertexSet& w) {
    ++stats.subproblems;
    if (!s.subset_of(w) || s.size() > 3 * k + 3 ||
        !region_boundary(g, w).subset_of(s))
      throw std::logic_error("decompose: subproblem precondition violated");

    if (w.size() <= 5 * k + 6) {
      TreeHDecomposition leaf = single_node_decomposition(w);
      record_recursion(s, w, leaf);
      return leaf;
    }

    // Extend the boundary to exactly 3k+4 vertices with the smallest ids of
    // the region's interior.
    VertexSet s_hat = s;
    for (int v : set_difference(w, s)) {
      if (s_hat.size() == 3 * k + 4) break;
      s_hat.add(v);
    }

    while (true) {
      ++stats.subroutine_invocations;
      SubroutineCounters ctr;
      int x_before = deletion_set.size();
      SubroutineOutcome outcome =
          four_outcome_subroutine(g, k, deletion_set, s_hat, h, &ctr);
      stats.oracle_calls += ctr.oracle_calls;
      stats.oracle_budget = ctr.oracle_budget;
      record_subroutine(ctr, outcome, x_before);

      if (std::holds_alternative<RejectWidth>(outcome)) return std::nullopt;

      if (auto* improved = std::get_if<ImprovedDeletionSet>(&outcome)) {
        if (improved->deletion_set.size() >= deletion_set.size())
          throw std::logic_error("decompose: improvement did not shrink x");
        if (options.check_invariants) {
          InducedSubgraph rest = induced_subgraph(
              g, set_difference(VertexSet::range(g.n()), improved->deletion_set));
          if (!h.is_member(rest.graph))
            throw std::logic_error("decompose: improved set is not a deletion set");
        }
        deletion_set = std::move(improved->deletion_set);
        ++stats.improvements;
        continue;
      }

      if (auto* split = std::get_if<BalancedSplit>(&outcome)) {
        VertexSet aw = set_intersection(split->separation.a, w);
        VertexSet bw = set_intersection(split->separation.b, w);
        VertexSet crossing = set_intersection(aw, bw);
        auto left = solve(set_union(split->side_a, crossing), aw);
        if (!left) return std::nullopt;
        auto right = solve(set_union(split->side_b, crossing), bw);
        if (!right) return std::nullopt;
        auto merged = merge(*left, *right, set_union(s_hat, crossing));
        record_recursion(s, w, merged);
        return merged;
      }

      auto& base = std::get<BaseSplit>(outcome);
      VertexSet aw = set_intersection(base.separation.a, w);
      VertexSet bw = set_intersection(base.separation.b, w);
      VertexSet crossing = set_intersection(aw, bw);
      // The separated side is finished directly: its interior avoids the
      // deletion set, so it goes to the base set under a connecting bag.
      VertexSet root_a = set_union(set_intersection(s_hat, aw), crossing);
      TreeHDecomposition left;
      left.root = 0;
      left.nodes.push_back({0, -1, root_a});
      left.nodes.push_back({1, 0, aw});
      left.base_set = set_difference(aw, root_a);
      if (bw.empty()) {  // the whole region sits on the chosen side
        record_recursion(s, w, left);
        return left;
      }
      auto right = solve(set_union(set_difference(s_hat, aw), crossing), bw);
      if (!right) return std::nullopt;
      auto merged = merge(left, *right, set_union(s_hat, crossing));
      record_recursion(s, w, merged);
      return merged;
    }
  }

  void record_subroutine(const SubroutineCounters& ctr,
                         const SubroutineOutcome& outcome, int x_size) {
    if (!options.trace) return;
    SubroutineTraceRecord rec;
    rec.phase_reached = ctr.phase_reached;
    rec.oracle_calls = ctr.oracle_calls;
    rec.deletion_set_size = x_size;
    if (std::holds_alternative<BalancedSplit>(outcome)) rec.outcome = "balanced-split";
    else if (std::holds_alternative<BaseSplit>(outcome)) rec.outcome = "base-split";
    else if (std::holds_alternative<ImprovedDeletionSet>(outcome))
      rec.outcome = "improved-deletion-set";
    else rec.outcome = "reject-width";
    options.trace->subroutine_records.push_back(std::move(rec));
  }

  void record_recursion(const VertexSet& s, const VertexSet& w,
                        const TreeHDecomposition& result) {
    if (!options.trace) return;
    RecursionTraceRecord rec;
    rec.boundary_size = s.size();
    rec.region_size = w.size();
    const VertexSet& root_bag = result.nodes[result.root].bag;
    rec.root_bag_size = root_bag.size();
    rec.boundary_in_root_bag = s.subset_of(root_bag);
    rec.boundary_disjoint_from_base = set_intersection(s, result.base_set).empty();
    options.trace->recursion_records.push_back(rec);
  }
};

}  // namespace

DecomposeResult decompose(const Graph& g, int k, const ClassOracle& h,
                          const DecomposeOptions& options) {
  if (k < 0) throw std::invalid_argument("decompose: negative k");
  Engine engine{g, k, h, options, VertexSet::range(g.n()), {}};
  DecomposeResult result;
  result.decomposition = engine.solve(VertexSet{}, VertexSet::range(g.n()));
  result.stats = engine.stats;
  result.stats.final_deletion_set_size = engine.deletion_set.size();
  if (result.stats.oracle_budget < 0) result.stats.oracle_budget = 2 * k + 2;
  return result;
}

}  // namespace htw
