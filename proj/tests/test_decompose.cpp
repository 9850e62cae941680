#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_util.hpp"

#include <optional>
#include <random>
#include <stdexcept>
#include <variant>

#include "corpus.hpp"
#include "htw/decompose.hpp"
#include "htw/exact.hpp"

using namespace htw;
using namespace htw::testing;

namespace {

bool is_deletion_set(const Graph& g, const VertexSet& x, const ClassOracle& h) {
  VertexSet rest = set_difference(VertexSet::range(g.n()), x);
  return h.is_member(induced_subgraph(g, rest).graph);
}

// Invariants each subroutine outcome promises, given the inputs.
void check_outcome(const Graph& g, int k, const VertexSet& x, const VertexSet& s,
                   const ClassOracle& h, const SubroutineOutcome& outcome) {
  if (const auto* bal = std::get_if<BalancedSplit>(&outcome)) {
    CHECK(set_union(bal->side_a, bal->side_b) == s);
    CHECK(set_intersection(bal->side_a, bal->side_b).empty());
    CHECK(bal->side_a.size() <= 2 * k + 2);
    CHECK(bal->side_b.size() <= 2 * k + 2);
    CHECK(is_separation(g, bal->separation));
    CHECK(bal->separation.order() <= k + 1);
    CHECK(bal->side_a.subset_of(bal->separation.a));
    CHECK(bal->side_b.subset_of(bal->separation.b));
  } else if (const auto* base = std::get_if<BaseSplit>(&outcome)) {
    CHECK(base->chosen.size() == 2 * k + 3);
    CHECK(base->chosen.subset_of(s));
    CHECK(is_separation(g, base->separation));
    CHECK(base->separation.order() <= 2 * k + 2);
    CHECK(base->chosen.subset_of(base->separation.a));
    CHECK(x.subset_of(base->separation.b));
  } else if (const auto* imp = std::get_if<ImprovedDeletionSet>(&outcome)) {
    CHECK(imp->deletion_set.size() < x.size());
    CHECK(is_deletion_set(g, imp->deletion_set, h));
  }
}

}  // namespace

TEST_CASE("the boundary must have exactly 3k+4 vertices") {
  ClassOracle h = preset_oracle("bipartite");
  Graph g = path_graph(6);
  CHECK_THROWS_AS(four_outcome_subroutine(g, 0, {}, {0, 1, 2}, h),
                  std::invalid_argument);
  CHECK_THROWS_AS(four_outcome_subroutine(g, 0, {}, {0, 1, 2, 3, 4}, h),
                  std::invalid_argument);
  CHECK_THROWS_AS(four_outcome_subroutine(g, -1, {}, {0, 1}, h),
                  std::invalid_argument);
}

TEST_CASE("an empty deletion set finishes the lowest boundary piece") {
  // Phase 1 cannot split a clique boundary, and with x empty phase 2
  // immediately hands the whole graph over as the chosen side.
  Graph g = complete_graph(4);
  ClassOracle h = preset_oracle("cluster");
  SubroutineCounters ctr;
  SubroutineOutcome out = four_outcome_subroutine(g, 0, {}, {0, 1, 2, 3}, h, &ctr);
  const auto* base = std::get_if<BaseSplit>(&out);
  REQUIRE(base != nullptr);
  CHECK(base->chosen == VertexSet{0, 1, 2});
  CHECK(base->separation.a == VertexSet::range(4));
  CHECK(base->separation.b.empty());
  CHECK(ctr.phase_reached == 2);
  CHECK(ctr.oracle_calls == 0);
}

TEST_CASE("a star splits its leaves around the center") {
  Graph g = star_graph(7);  // center 0, leaves 1..7
  ClassOracle h = preset_oracle("bipartite");
  SubroutineCounters ctr;
  SubroutineOutcome out =
      four_outcome_subroutine(g, 1, {}, {1, 2, 3, 4, 5, 6, 7}, h, &ctr);
  const auto* bal = std::get_if<BalancedSplit>(&out);
  REQUIRE(bal != nullptr);
  CHECK(bal->side_b == VertexSet{1, 2, 3});
  CHECK(bal->side_a == VertexSet{4, 5, 6, 7});
  CHECK(bal->separation.order() == 1);
  CHECK(set_intersection(bal->separation.a, bal->separation.b) == VertexSet{0});
  CHECK(ctr.phase_reached == 1);
}

TEST_CASE("a cycle boundary is pushed away from the deletion set") {
  Graph g = cycle_graph(4);
  ClassOracle h = preset_oracle("edgeless");
  VertexSet x{0, 2};
  SubroutineCounters ctr;
  SubroutineOutcome out = four_outcome_subroutine(g, 0, x, {0, 1, 2, 3}, h, &ctr);
  const auto* base = std::get_if<BaseSplit>(&out);
  REQUIRE(base != nullptr);
  CHECK(base->chosen == VertexSet{0, 1, 2});
  CHECK(base->separation.order() == 2);
  check_outcome(g, 0, x, {0, 1, 2, 3}, h, out);
  CHECK(ctr.phase_reached == 2);
}

TEST_CASE("a wasteful deletion set on a clique gets exchanged") {
  Graph g = complete_graph(4);
  ClassOracle h = preset_oracle("triangle-free");
  VertexSet x{0, 1, 2};
  REQUIRE(is_deletion_set(g, x, h));
  SubroutineCounters ctr;
  SubroutineOutcome out = four_outcome_subroutine(g, 0, x, {0, 1, 2, 3}, h, &ctr);
  const auto* imp = std::get_if<ImprovedDeletionSet>(&out);
  REQUIRE(imp != nullptr);
  CHECK(imp->deletion_set == VertexSet{0, 1});
  CHECK(ctr.phase_reached == 3);
  CHECK(ctr.oracle_calls == 1);
  CHECK(ctr.oracle_budget == 2);
}

TEST_CASE("a clique too dense for the class is rejected") {
  Graph g = complete_graph(4);
  ClassOracle h = preset_oracle("edgeless");
  SubroutineCounters ctr;
  SubroutineOutcome out =
      four_outcome_subroutine(g, 0, {0, 1, 2}, {0, 1, 2, 3}, h, &ctr);
  CHECK(std::holds_alternative<RejectWidth>(out));
  CHECK(ctr.phase_reached == 3);
  CHECK(ctr.oracle_calls == 4);  // one exchange attempt per boundary piece
  CHECK(exact_htw(g, h) > 0);
}

TEST_CASE("outcome invariants hold across random inputs") {
  std::mt19937 rng(20260816);
  auto presets = all_presets();
  std::vector<Graph> graphs = random_corpus(6, 40, 5);
  for (const Graph& more : random_corpus(7, 40, 6)) graphs.push_back(more);

  int rejects = 0, improvements = 0, balanced = 0, based = 0;
  for (const Graph& g : graphs) {
    int n = g.n();
    for (int k : {0, 1}) {
      if (n < 3 * k + 4) continue;
      for (const auto& h : presets) {
        // A random valid deletion set: random subset, validity checked.
        VertexSet x;
        for (int tries = 0; tries < 40; ++tries) {
          std::uint32_t mask = rng() & ((1u << n) - 1);
          VertexSet candidate;
          for (int v = 0; v < n; ++v)
            if (mask >> v & 1) candidate.add(v);
          if (is_deletion_set(g, candidate, h)) {
            x = candidate;
            break;
          }
          x = VertexSet::range(n);
        }
        // A random boundary of exactly 3k+4 vertices.
        std::vector<int> order(n);
        for (int v = 0; v < n; ++v) order[v] = v;
        std::shuffle(order.begin(), order.end(), rng);
        order.resize(3 * k + 4);
        VertexSet s{std::vector<int>(order)};

        SubroutineCounters ctr;
        SubroutineOutcome out = four_outcome_subroutine(g, k, x, s, h, &ctr);
        check_outcome(g, k, x, s, h, out);
        CHECK(ctr.phase_reached >= 1);
        CHECK(ctr.phase_reached <= 3);
        if (std::holds_alternative<RejectWidth>(out)) {
          ++rejects;
          if (n <= 7) CHECK(exact_htw(g, h) > k);
        }
        improvements += std::holds_alternative<ImprovedDeletionSet>(out);
        balanced += std::holds_alternative<BalancedSplit>(out);
        based += std::holds_alternative<BaseSplit>(out);
      }
    }
  }
  // The sweep must exercise every outcome.
  CHECK(rejects > 0);
  CHECK(improvements > 0);
  CHECK(balanced > 0);
  CHECK(based > 0);
}

TEST_CASE("exchange steps shrink strictly or not at all") {
  ClassOracle tf = preset_oracle("triangle-free");
  Graph two = disjoint_union(complete_graph(3), complete_graph(3));

  CHECK_THROWS_AS(improve_deletion_set(two, {0, 1}, {2}, tf, 2),
                  std::invalid_argument);
  CHECK(!improve_deletion_set(two, {0, 3}, {}, tf, 2).has_value());

  auto swap_pair = improve_deletion_set(two, {0, 1, 3}, {0, 1}, tf, 2);
  REQUIRE(swap_pair.has_value());
  CHECK(*swap_pair == VertexSet{0, 3});

  auto drop_one = improve_deletion_set(two, {0, 1, 3}, {0}, tf, 2);
  REQUIRE(drop_one.has_value());
  CHECK(*drop_one == VertexSet{1, 3});

  // A minimum set cannot improve.
  CHECK(!improve_deletion_set(two, {0, 3}, {0}, tf, 2).has_value());
  CHECK(!improve_deletion_set(two, {0, 3}, {0, 3}, tf, 2).has_value());

  // The whole set of a bipartite graph collapses to the empty set.
  ClassOracle bip = preset_oracle("bipartite");
  Graph c4 = cycle_graph(4);
  auto all = improve_deletion_set(c4, VertexSet::range(4), VertexSet::range(4),
                                  bip, 2);
  REQUIRE(all.has_value());
  CHECK(all->empty());
}

TEST_CASE("small graphs become a single bag") {
  ClassOracle h = preset_oracle("bipartite");
  DecomposeResult r = decompose(complete_graph(3), 0, h);
  REQUIRE(!r.rejected());
  CHECK(r.decomposition->nodes.size() == 1);
  CHECK(width(*r.decomposition) == 2);
  CHECK(decomposition_ok(complete_graph(3), *r.decomposition, h));
  CHECK(r.stats.subroutine_invocations == 0);
  CHECK(r.stats.oracle_calls == 0);
  CHECK(r.stats.oracle_budget == 2);
  CHECK(r.stats.final_deletion_set_size == 3);

  DecomposeResult nothing = decompose(Graph(), 0, h);
  REQUIRE(!nothing.rejected());
  CHECK(nothing.decomposition->nodes.size() == 1);
  CHECK(width(*nothing.decomposition) == 0);

  CHECK_THROWS_AS(decompose(complete_graph(3), -1, h), std::invalid_argument);
}

TEST_CASE("long paths decompose with small bags") {
  ClassOracle h = preset_oracle("bipartite");
  Graph g = path_graph(10);
  DecomposeTrace trace;
  DecomposeOptions opt;
  opt.trace = &trace;
  opt.check_invariants = true;
  DecomposeResult r = decompose(g, 0, h, opt);
  REQUIRE(!r.rejected());
  CHECK(decomposition_ok(g, *r.decomposition, h));
  CHECK(width(*r.decomposition) <= 5);
  CHECK(static_cast<int>(r.decomposition->nodes.size()) <= 5 * g.n() + 1);

  REQUIRE(!trace.recursion_records.empty());
  for (const auto& rec : trace.recursion_records) {
    CHECK(rec.boundary_size <= 3);  // 3k+3
    CHECK(rec.boundary_in_root_bag);
    CHECK(rec.boundary_disjoint_from_base);
    CHECK(rec.root_bag_size <= 6);  // 5k+6
  }
  for (const auto& rec : trace.subroutine_records) {
    CHECK(rec.phase_reached >= 1);
    CHECK(rec.phase_reached <= 3);
    CHECK(!rec.outcome.empty());
  }
  CHECK(r.stats.improvements <= g.n());
  CHECK(r.stats.subproblems >= 1);
}

TEST_CASE("an edgeless target rejects a large clique deterministically") {
  ClassOracle h = preset_oracle("edgeless");
  DecomposeResult r = decompose(complete_graph(8), 0, h);
  CHECK(r.rejected());
  CHECK(r.stats.improvements == 1);
  CHECK(r.stats.oracle_calls == 5);
  CHECK(r.stats.subroutine_invocations == 2);
  CHECK(r.stats.oracle_budget == 2);
}

TEST_CASE("decompose is deterministic") {
  ClassOracle h = preset_oracle("triangle-free");
  std::mt19937 rng(77);
  Graph g = random_connected_graph(rng, 12, 0.3);
  DecomposeResult a = decompose(g, 0, h);
  DecomposeResult b = decompose(g, 0, h);
  REQUIRE(a.rejected() == b.rejected());
  if (!a.rejected()) {
    REQUIRE(a.decomposition->nodes.size() == b.decomposition->nodes.size());
    for (std::size_t i = 0; i < a.decomposition->nodes.size(); ++i) {
      CHECK(a.decomposition->nodes[i].parent == b.decomposition->nodes[i].parent);
      CHECK(a.decomposition->nodes[i].bag == b.decomposition->nodes[i].bag);
    }
    CHECK(a.decomposition->base_set == b.decomposition->base_set);
  }
  CHECK(a.stats.oracle_calls == b.stats.oracle_calls);
  CHECK(a.stats.improvements == b.stats.improvements);
}

TEST_CASE("answers agree with the exact optimum on small graphs") {
  auto presets = all_presets();
  std::vector<Graph> graphs = random_corpus(7, 25, 11);
  for (const Graph& more : random_corpus(8, 15, 12)) graphs.push_back(more);

  int engine_runs = 0, observed_rejects = 0;
  for (const Graph& g : graphs)
    for (const auto& h : presets) {
      int exact = exact_htw(g, h);
      DecomposeResult r = decompose(g, 0, h);
      if (exact == 0) CHECK(!r.rejected());
      if (r.rejected()) {
        ++observed_rejects;
        CHECK(exact > 0);
      } else {
        CHECK(decomposition_ok(g, *r.decomposition, h));
        CHECK(width(*r.decomposition) <= 5);
      }
      engine_runs += r.stats.subroutine_invocations > 0;
    }
  CHECK(engine_runs > 0);
  CHECK(observed_rejects > 0);
}
