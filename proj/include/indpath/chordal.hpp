#pragma once

#include <indpath/graph.hpp>

#include <algorithm>
#include <optional>
#include <vector>

namespace indpath {

// Perfect elimination data for a chordal graph. `order[0]` is eliminated
// first; for every vertex, its neighbors later in the order form a clique.
// omega is the clique number, read off the elimination order.
struct ChordalElimination {
  std::vector<int> order;
  std::vector<int> rank;  // rank[v] = position of v in order
  int omega = 0;
};

// Maximum-cardinality search followed by a perfect-elimination check.
// Returns nullopt iff the graph is not chordal. Disconnected graphs are fine.
inline std::optional<ChordalElimination> chordal_elimination(const Graph& g) {
  const int n = g.n;
  ChordalElimination out;
  out.order.resize(static_cast<size_t>(n));
  out.rank.assign(static_cast<size_t>(n), -1);
  if (n == 0) return out;

  // MCS with bucket lists: repeatedly visit an unvisited vertex with the
  // most visited neighbors. Visit order reversed is the candidate
  // elimination order.
  std::vector<int> score(static_cast<size_t>(n), 0);
  std::vector<char> visited(static_cast<size_t>(n), 0);
  std::vector<std::vector<int>> bucket(static_cast<size_t>(n) + 1);
  for (int v = n - 1; v >= 0; --v) bucket[0].push_back(v);
  int top = 0;
  for (int step = n - 1; step >= 0; --step) {
    int v = -1;
    while (true) {
      while (top > 0 && bucket[static_cast<size_t>(top)].empty()) --top;
      auto& b = bucket[static_cast<size_t>(top)];
      while (!b.empty() && visited[static_cast<size_t>(b.back())]) b.pop_back();
      if (!b.empty()) {
        v = b.back();
        b.pop_back();
        break;
      }
      if (top == 0) break;
    }
    visited[static_cast<size_t>(v)] = 1;
    out.order[static_cast<size_t>(step)] = v;
    out.rank[static_cast<size_t>(v)] = step;
    for (int u : g.adj[v])
      if (!visited[static_cast<size_t>(u)]) {
        int s = ++score[static_cast<size_t>(u)];
        bucket[static_cast<size_t>(s)].push_back(u);
        if (s > top) top = s;
      }
  }

  // Perfect elimination check: the later neighborhood of v must be a clique.
  // It is enough to check that all of it except the earliest member u is
  // again adjacent to u.
  int max_back = 0;
  for (int i = 0; i < n; ++i) {
    int v = out.order[static_cast<size_t>(i)];
    int u = -1, u_rank = n;
    int back = 0;
    for (int w : g.adj[v])
      if (out.rank[static_cast<size_t>(w)] > i) {
        ++back;
        if (out.rank[static_cast<size_t>(w)] < u_rank) {
          u_rank = out.rank[static_cast<size_t>(w)];
          u = w;
        }
      }
    max_back = std::max(max_back, back);
    if (u < 0) continue;
    for (int w : g.adj[v])
      if (out.rank[static_cast<size_t>(w)] > i && w != u && !g.has_edge(u, w))
        return std::nullopt;
  }
  out.omega = (n == 0 ? 0 : max_back + 1);
  return out;
}

// Clique number of a chordal graph; nullopt if not chordal.
inline std::optional<int> chordal_omega(const Graph& g) {
  auto e = chordal_elimination(g);
  if (!e) return std::nullopt;
  return e->omega;
}

}  // namespace indpath
