#include "htw/flow.hpp"

#include <algorithm>
#include <stdexcept>

namespace htw {

namespace {

constexpr int kInf = 1 << 29;

// Scratch buffers reused across calls; the separator sits in tight
// enumeration loops, so per-call allocation is worth avoiding. thread_local
// keeps concurrent callers independent.
struct Workspace {
  // Paired arcs: arc i and i^1 are a residual pair, even ids are forward.
  // arc_cap holds the remaining capacity, so flow(i) == arc_cap[i ^ 1] for
  // arcs created with reverse capacity 0.
  std::vector<int> arc_to;
  std::vector<int> arc_cap;
  std::vector<std::vector<int>> adj;  // node -> arc ids, insertion order
  std::vector<int> parent_arc;
  std::vector<int> queue;
  std::vector<int> mark;  // BFS visit stamps
  int stamp = 0;

  void reset(int nodes) {
    arc_to.clear();
    arc_cap.clear();
    if (static_cast<int>(adj.size()) < nodes) adj.resize(nodes);
    for (int i = 0; i < nodes; ++i) adj[i].clear();
    if (static_cast<int>(mark.size()) < nodes) {
      mark.resize(nodes, 0);
      parent_arc.resize(nodes, -1);
    }
  }

  int add_arc(int u, int v, int cap) {
    int id = static_cast<int>(arc_to.size());
    arc_to.push_back(v);
    arc_cap.push_back(cap);
    arc_to.push_back(u);
    arc_cap.push_back(0);
    adj[u].push_back(id);
    adj[v].push_back(id + 1);
    return id;
  }
};

thread_local Workspace ws;

// Vertex v's unit capacity arc is created first, one per vertex, in id order.
inline int cap_arc(int v) { return 2 * v; }

bool augment(int source, int sink) {
  ++ws.stamp;
  ws.queue.clear();
  ws.queue.push_back(source);
  ws.mark[source] = ws.stamp;
  for (size_t qi = 0; qi < ws.queue.size(); ++qi) {
    int u = ws.queue[qi];
    for (int a : ws.adj[u]) {
      if (ws.arc_cap[a] <= 0) continue;
      int w = ws.arc_to[a];
      if (ws.mark[w] == ws.stamp) continue;
      ws.mark[w] = ws.stamp;
      ws.parent_arc[w] = a;
      if (w == sink) {
        for (int cur = sink; cur != source;) {
          int arc = ws.parent_arc[cur];
          --ws.arc_cap[arc];
          ++ws.arc_cap[arc ^ 1];
          cur = ws.arc_to[arc ^ 1];
        }
        return true;
      }
      ws.queue.push_back(w);
    }
  }
  return false;
}

// Cancels one unit of flow on a forward arc while walking a path.
inline void consume(int arc) {
  ++ws.arc_cap[arc];
  --ws.arc_cap[arc ^ 1];
}

}  // namespace

FlowResult min_vertex_separator(const Graph& g, const VertexSet& x,
                                const VertexSet& y, int budget,
                                FlowStats* stats) {
  if (x.empty() || y.empty())
    throw std::invalid_argument("min_vertex_separator: empty terminal set");
  if (budget < 0)
    throw std::invalid_argument("min_vertex_separator: negative budget");
  for (int v : x)
    if (v < 0 || v >= g.n())
      throw std::invalid_argument("min_vertex_separator: x outside V(g)");
  for (int v : y)
    if (v < 0 || v >= g.n())
      throw std::invalid_argument("min_vertex_separator: y outside V(g)");

  VertexSet shared = set_intersection(x, y);
  if (shared.size() >= budget + 1) {
    // Each shared terminal is a trivial path on its own.
    PathFamily fam;
    for (int v : shared) {
      if (static_cast<int>(fam.paths.size()) == budget + 1) break;
      fam.paths.push_back({v});
    }
    return ManyPaths{std::move(fam)};
  }

  int n = g.n();
  int source = 2 * n, sink = 2 * n + 1;
  ws.reset(2 * n + 2);

  for (int v = 0; v < n; ++v) ws.add_arc(2 * v, 2 * v + 1, 1);
  for (int u = 0; u < n; ++u)
    for (int w : g.neighbors(u)) ws.add_arc(2 * u + 1, 2 * w, kInf);
  std::vector<int> source_arc(x.size()), sink_arc_of;
  sink_arc_of.assign(n, -1);
  for (int i = 0; i < x.size(); ++i)
    source_arc[i] = ws.add_arc(source, 2 * x.ids()[i], kInf);
  for (int v : y) sink_arc_of[v] = ws.add_arc(2 * v + 1, sink, kInf);

  // Terminals in both x and y are forced: pre-route their unit of flow.
  int flow = 0;
  for (int v : shared) {
    int sa = source_arc[static_cast<int>(
        std::lower_bound(x.begin(), x.end(), v) - x.begin())];
    for (int arc : {sa, cap_arc(v), sink_arc_of[v]}) {
      --ws.arc_cap[arc];
      ++ws.arc_cap[arc ^ 1];
    }
    ++flow;
  }

  int rounds = 0;
  while (flow <= budget && augment(source, sink)) {
    ++flow;
    ++rounds;
  }
  if (stats) stats->augmentation_rounds = rounds;

  if (flow > budget) {
    // Decompose the integral flow into budget+1 disjoint paths, scanning
    // source arcs (and each out-node's arcs) in construction order.
    PathFamily fam;
    for (int a : ws.adj[source]) {
      if (ws.arc_cap[a ^ 1] <= 0) continue;
      consume(a);
      int cur = ws.arc_to[a] / 2;
      std::vector<int> path{cur};
      while (true) {
        consume(cap_arc(cur));
        int chosen = -1;
        for (int b : ws.adj[2 * cur + 1]) {
          if ((b & 1) == 0 && ws.arc_cap[b ^ 1] > 0) {
            chosen = b;
            break;
          }
        }
        if (chosen < 0)
          throw std::logic_error("min_vertex_separator: broken flow path");
        consume(chosen);
        if (ws.arc_to[chosen] == sink) break;
        cur = ws.arc_to[chosen] / 2;
        path.push_back(cur);
      }
      fam.paths.push_back(std::move(path));
    }
    if (static_cast<int>(fam.paths.size()) != budget + 1)
      throw std::logic_error("min_vertex_separator: path count mismatch");
    return ManyPaths{std::move(fam)};
  }

  // No augmenting path left: the saturated vertex arcs crossing the residual
  // reachability frontier form a minimum separator.
  ++ws.stamp;
  ws.queue.clear();
  ws.queue.push_back(source);
  ws.mark[source] = ws.stamp;
  for (size_t qi = 0; qi < ws.queue.size(); ++qi) {
    int u = ws.queue[qi];
    for (int a : ws.adj[u]) {
      if (ws.arc_cap[a] <= 0) continue;
      int w = ws.arc_to[a];
      if (ws.mark[w] == ws.stamp) continue;
      ws.mark[w] = ws.stamp;
      ws.queue.push_back(w);
    }
  }

  std::vector<int> a_side, cut;
  for (int v = 0; v < n; ++v) {
    if (ws.mark[2 * v] == ws.stamp) {
      a_side.push_back(v);
      if (ws.mark[2 * v + 1] != ws.stamp) cut.push_back(v);
    }
  }
  if (static_cast<int>(cut.size()) != flow)
    throw std::logic_error("min_vertex_separator: cut does not match flow");

  Separation sep;
  sep.a = VertexSet(std::move(a_side));
  std::vector<int> b_side = cut;
  for (int v = 0; v < n; ++v)
    if (!sep.a.contains(v)) b_side.push_back(v);
  sep.b = VertexSet(std::move(b_side));
  return SmallCut{std::move(sep)};
}

}  // namespace htw
