#pragma once

#include "htw/class_oracle.hpp"
#include "htw/decomposition.hpp"
#include "htw/graph.hpp"

namespace htw {

/// Exact treewidth by dynamic programming over elimination prefixes.
/// Hard-capped at n <= 10 (throws std::invalid_argument beyond).
int exact_treewidth(const Graph& g);

/// Optimal-width tree decomposition (empty base set) from a minimum
/// elimination order. Same cap as exact_treewidth.
TreeHDecomposition exact_treewidth_witness(const Graph& g);

/// Exact class-restricted treewidth: minimum over all base candidates L
/// whose components each induce class members of the treewidth of the torso
/// (g - L with every component neighborhood completed into a clique).
/// Hard-capped at n <= 8.
int exact_htw(const Graph& g, const ClassOracle& h);

/// Decomposition realizing exact_htw: the torso's optimal decomposition with
/// one leaf bag C union N(C) per base component C. Always validates.
TreeHDecomposition exact_htw_witness(const Graph& g, const ClassOracle& h);

/// Minimum |X| with g - X a class member, by subset enumeration in
/// increasing size. Hard-capped at n <= 12.
int exact_min_deletion(const Graph& g, const ClassOracle& h);

/// True iff some disjoint pair (C, S) with |S| <= k, G[C] a class member and
/// N(C) inside S has z inside C union S; exhaustive over separators S and
/// unions of components of g - S. Hard-capped at n <= 7.
bool exists_weak_coverage(const Graph& g, const VertexSet& z, int k,
                          const ClassOracle& h);

}  // namespace htw
