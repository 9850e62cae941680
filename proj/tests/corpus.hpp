#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "htw/graph.hpp"

namespace htw::testing {

/// Every labeled graph on n vertices (2^(n(n-1)/2) of them), in mask order.
inline std::vector<Graph> all_labeled_graphs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (1ull << pairs.size()); ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) edges.push_back(pairs[i]);
    out.push_back(Graph(n, edges));
  }
  return out;
}

inline bool is_connected(const Graph& g) {
  return g.n() <= 1 || components(g).size() == 1;
}

/// Erdos-Renyi draw; each pair is an edge with probability p.
inline Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return Graph(n, edges);
}

/// Random spanning tree (random permutation, each vertex attached to a
/// random earlier one) plus Erdos-Renyi extras.
inline Graph random_connected_graph(std::mt19937& rng, int n, double p) {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::vector<char>> has(n, std::vector<char>(n, 0));
  std::vector<std::pair<int, int>> edges;
  auto put = [&](int u, int v) {
    if (u > v) std::swap(u, v);
    if (!has[u][v]) {
      has[u][v] = 1;
      edges.push_back({u, v});
    }
  };
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    put(order[i], order[pick(rng)]);
  }
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) put(u, v);
  return Graph(n, edges);
}

/// Deterministic corpus of connected graphs with n <= 7: every connected
/// labeled graph with n <= 5, then random connected graphs on 6 and 7
/// vertices across a density sweep, until `target` graphs are collected.
inline std::vector<Graph> connected_corpus(int target, unsigned seed) {
  std::vector<Graph> out;
  for (int n = 1; n <= 5; ++n)
    for (Graph& g : all_labeled_graphs(n))
      if (is_connected(g)) {
        out.push_back(std::move(g));
        if (static_cast<int>(out.size()) == target) return out;
      }
  std::mt19937 rng(seed);
  const double densities[] = {0.2, 0.35, 0.5, 0.65, 0.8};
  int i = 0;
  while (static_cast<int>(out.size()) < target) {
    int n = 6 + i % 2;
    out.push_back(random_connected_graph(rng, n, densities[(i / 2) % 5]));
    ++i;
  }
  return out;
}

/// Mixed-density random graphs (not necessarily connected) on exactly n
/// vertices.
inline std::vector<Graph> random_corpus(int n, int count, unsigned seed) {
  std::mt19937 rng(seed);
  const double densities[] = {0.15, 0.3, 0.5, 0.7, 0.85};
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i)
    out.push_back(random_graph(rng, n, densities[i % 5]));
  return out;
}

}  // namespace htw::testing
