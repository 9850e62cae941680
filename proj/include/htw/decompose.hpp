#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "htw/class_oracle.hpp"
#include "htw/decomposition.hpp"
#include "htw/flow.hpp"
#include "htw/graph.hpp"

namespace htw {

// Outcomes of the boundary subroutine. With |s| = 3k+4 and a deletion set x
// (g - x in the class), exactly one of the four applies; RejectWidth
// certifies that no width-k decomposition exists at all.
struct BalancedSplit {
  VertexSet side_a, side_b;  // partition of s, both sides <= 2k+2
  Separation separation;     // side_a in a, side_b in b, order <= k+1
};
struct BaseSplit {
  VertexSet chosen;       // subset of s of size 2k+3, inside a
  Separation separation;  // x in b, order <= 2k+2
};
struct ImprovedDeletionSet {
  VertexSet deletion_set;  // strictly smaller replacement for x
};
struct RejectWidth {};

using SubroutineOutcome =
    std::variant<BalancedSplit, BaseSplit, ImprovedDeletionSet, RejectWidth>;

struct SubroutineCounters {
  int phase_reached = 0;  // 1, 2 or 3
  int oracle_calls = 0;
  int oracle_budget = -1;  // always 2k+2 when oracle_calls > 0
};

/// Tries an exchange step: removes x_prime from the protected part of x and
/// asks the oracle for a minimum deletion set of g - (x minus x_prime) within
/// the budget. Returns the strictly smaller replacement set
/// (x minus x_prime) union Y when |Y| < |x_prime|, otherwise nullopt.
/// Requires x_prime subset of x; expects g - x to be a class member.
std::optional<VertexSet> improve_deletion_set(const Graph& g, const VertexSet& x,
                                              const VertexSet& x_prime,
                                              const ClassOracle& h, int budget);

/// One round of the decomposition engine. Phase 1 looks for a balanced
/// separation of s, phase 2 for a separation pushing x away from a small
/// part of s, phase 3 for a deletion-set improvement; if all fail the
/// instance is rejected. Enumeration is lexicographic by characteristic
/// vector over the sorted ids of s, first feasible hit wins. Requires
/// |s| == 3k+4.
SubroutineOutcome four_outcome_subroutine(const Graph& g, int k,
                                          const VertexSet& x, const VertexSet& s,
                                          const ClassOracle& h,
                                          SubroutineCounters* counters = nullptr);

struct DecomposeStats {
  long long oracle_calls = 0;
  int oracle_budget = -1;  // parameter of every oracle call (2k+2)
  int improvements = 0;
  int subroutine_invocations = 0;
  int subproblems = 0;  // recursion-tree nodes
  int final_deletion_set_size = -1;
};

struct SubroutineTraceRecord {
  int phase_reached = 0;
  std::string outcome;
  int deletion_set_size = 0;  // |x| when the subroutine was invoked
  int oracle_calls = 0;
};

struct RecursionTraceRecord {
  int boundary_size = 0;  // |s|
  int region_size = 0;    // |w|
  int root_bag_size = 0;
  bool boundary_in_root_bag = false;
  bool boundary_disjoint_from_base = false;
};

struct DecomposeTrace {
  std::vector<SubroutineTraceRecord> subroutine_records;
  std::vector<RecursionTraceRecord> recursion_records;
};

struct DecomposeOptions {
  DecomposeTrace* trace = nullptr;
  bool check_invariants = false;  // re-verify membership after improvements
};

struct DecomposeResult {
  std::optional<TreeHDecomposition> decomposition;
  DecomposeStats stats;

  bool rejected() const { return !decomposition.has_value(); }
};

/// Computes a tree decomposition with base parts in the class, of width at
/// most 5k+5 (every bag has at most 5k+6 vertices), or rejects, certifying
/// that width <= k is impossible. Success output always satisfies validate().
DecomposeResult decompose(const Graph& g, int k, const ClassOracle& h,
                          const DecomposeOptions& options = {});

}  // namespace htw
