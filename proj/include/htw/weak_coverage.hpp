#pragma once

#include <optional>
#include <variant>

#include "htw/class_oracle.hpp"
#include "htw/graph.hpp"

namespace htw {

/// A separation (C, S) of bounded order: C and S are disjoint, G[C] is a
/// class member, N(C) lies in S, and |S| <= ell.
struct HSeparation {
  VertexSet c;
  VertexSet s;
  int ell = 0;
};

struct Covered {
  HSeparation separation;
};
struct NoCoverage {};

using CoverageAnswer = std::variant<Covered, NoCoverage>;

inline const HSeparation* covered(const CoverageAnswer& r) {
  auto* c = std::get_if<Covered>(&r);
  return c ? &c->separation : nullptr;
}

struct WeakCoverageStats {
  int iterations = 0;
  int improvements = 0;
  int oracle_calls = 0;
  int oracle_budget = -1;  // always 2k when oracle_calls > 0
};

/// Either finds a separation of order <= 2k that weakly covers z
/// (z inside C union S), or certifies that no separation of order <= k
/// weakly covers z. Makes at most n oracle calls, each with budget 2k.
CoverageAnswer weak_coverage(const Graph& g, const VertexSet& z, int k,
                             const ClassOracle& h,
                             WeakCoverageStats* stats = nullptr);

}  // namespace htw
