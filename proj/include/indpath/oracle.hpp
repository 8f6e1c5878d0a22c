#pragma once

#include <indpath/graph.hpp>

#include <bit>
#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace indpath {

struct SearchBudget {
  long long max_nodes = 10'000'000;
  long long max_millis = 60'000;
};

struct OracleResult {
  PathWitness best;
  bool optimal = false;  // search ran to completion within budget
  long long nodes = 0;
  long long millis = 0;
};

namespace detail {

// Fixed-width bitset scratch shared across one search.
struct BitScratch {
  int words;
  std::vector<uint64_t> nbr;     // adjacency rows, n * words
  std::vector<uint64_t> levels;  // one row per search depth

  BitScratch(const Graph& g)
      : words((g.n + 63) / 64),
        nbr(static_cast<size_t>(g.n) * static_cast<size_t>(words), 0),
        levels(static_cast<size_t>(g.n + 1) * static_cast<size_t>(words), 0) {
    for (int v = 0; v < g.n; ++v)
      for (int u : g.adj[v])
        row(v)[u >> 6] |= uint64_t{1} << (u & 63);
  }

  uint64_t* row(int v) { return nbr.data() + static_cast<size_t>(v) * words; }
  uint64_t* level(int d) { return levels.data() + static_cast<size_t>(d) * words; }
};

}  // namespace detail

// Exact longest induced path by depth-first search over induced paths.
// State per depth: the set A of vertices that are non-adjacent to every path
// vertex except possibly the head. Extensions are A intersect N(head), and
// extending by v shrinks A to A minus N(old head). Prune when even adding
// one head neighbor plus everything else in A cannot beat the incumbent.
inline OracleResult longest_induced_path_exact(const Graph& g,
                                               SearchBudget budget = {}) {
  if (g.n == 0) throw std::invalid_argument("longest_induced_path_exact: empty graph");
  if (g.n > 8192)
    throw std::invalid_argument(
        "longest_induced_path_exact: instance too large");
  auto t0 = std::chrono::steady_clock::now();
  OracleResult res;
  if (g.n == 0) {
    res.optimal = true;
    return res;
  }

  detail::BitScratch bits(g);
  const int W = bits.words;
  std::vector<int> path;
  path.reserve(static_cast<size_t>(g.n));
  bool out_of_budget = false;

  auto elapsed_ms = [&] {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
  };

  auto consider = [&] {
    if (static_cast<int>(path.size()) > res.best.size()) {
      res.best.vertices = path;
      res.best.induced = true;
    }
  };

  // Returns false when the budget ran out.
  auto dfs = [&](auto&& self, int head, int depth) -> bool {
    ++res.nodes;
    if (res.nodes > budget.max_nodes ||
        ((res.nodes & 1023) == 0 && elapsed_ms() > budget.max_millis)) {
      out_of_budget = true;
      return false;
    }
    consider();
    const uint64_t* a = bits.level(depth);
    const uint64_t* hn = bits.row(head);
    int candidates = 0, rest = 0;
    for (int w = 0; w < W; ++w) {
      candidates += std::popcount(a[w] & hn[w]);
      rest += std::popcount(a[w] & ~hn[w]);
    }
    if (candidates == 0) return true;
    if (static_cast<int>(path.size()) + 1 + rest <= res.best.size())
      return true;
    uint64_t* next = bits.level(depth + 1);
    for (int x = 0; x < W; ++x) next[x] = a[x] & ~hn[x];
    for (int w = 0; w < W; ++w) {
      uint64_t ext = a[w] & hn[w];
      while (ext) {
        int v = (w << 6) + std::countr_zero(ext);
        ext &= ext - 1;
        path.push_back(v);
        bool ok = self(self, v, depth + 1);
        path.pop_back();
        if (!ok) return false;
      }
    }
    return true;
  };

  // Deterministic root order: descending degree, then ascending id. The
  // first deep run tightens the incumbent, which the bound prunes against.
  std::vector<int> roots(static_cast<size_t>(g.n));
  for (int v = 0; v < g.n; ++v) roots[static_cast<size_t>(v)] = v;
  std::stable_sort(roots.begin(), roots.end(), [&](int x, int y) {
    if (g.degree(x) != g.degree(y)) return g.degree(x) > g.degree(y);
    return x < y;
  });

  bool complete = true;
  for (int r : roots) {
    uint64_t* a0 = bits.level(0);
    for (int w = 0; w < W; ++w) a0[w] = ~uint64_t{0};
    if (g.n & 63) a0[W - 1] = (uint64_t{1} << (g.n & 63)) - 1;
    a0[r >> 6] &= ~(uint64_t{1} << (r & 63));
    path.assign(1, r);
    if (!dfs(dfs, r, 0)) {
      complete = false;
      break;
    }
  }
  res.optimal = complete && !out_of_budget;
  res.millis = elapsed_ms();
  return res;
}

// Exact longest (not necessarily induced) path, same search shell. The
// bound is head-reachability through unused vertices.
inline OracleResult longest_path_exact(const Graph& g, SearchBudget budget = {}) {
  if (g.n == 0) throw std::invalid_argument("longest_path_exact: empty graph");
  if (g.n > 8192)
    throw std::invalid_argument("longest_path_exact: instance too large");
  auto t0 = std::chrono::steady_clock::now();
  OracleResult res;
  if (g.n == 0) {
    res.optimal = true;
    return res;
  }

  std::vector<char> used(static_cast<size_t>(g.n), 0);
  std::vector<int> path, queue_buf(static_cast<size_t>(g.n));
  std::vector<char> seen(static_cast<size_t>(g.n), 0);
  bool out_of_budget = false;

  auto elapsed_ms = [&] {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
  };

  auto reachable_unused = [&](int head) {
    int cnt = 0, qh = 0, qt = 0;
    std::fill(seen.begin(), seen.end(), 0);
    seen[static_cast<size_t>(head)] = 1;
    queue_buf[qt++] = head;
    while (qh < qt) {
      int v = queue_buf[qh++];
      for (int u : g.adj[v])
        if (!used[static_cast<size_t>(u)] && !seen[static_cast<size_t>(u)]) {
          seen[static_cast<size_t>(u)] = 1;
          queue_buf[qt++] = u;
          ++cnt;
        }
    }
    return cnt;
  };

  auto dfs = [&](auto&& self, int head) -> bool {
    ++res.nodes;
    if (res.nodes > budget.max_nodes ||
        ((res.nodes & 1023) == 0 && elapsed_ms() > budget.max_millis)) {
      out_of_budget = true;
      return false;
    }
    if (static_cast<int>(path.size()) > res.best.size()) {
      res.best.vertices = path;
      res.best.induced = false;
    }
    if (static_cast<int>(path.size()) + reachable_unused(head) <=
        res.best.size())
      return true;
    for (int v : g.adj[head]) {
      if (used[static_cast<size_t>(v)]) continue;
      used[static_cast<size_t>(v)] = 1;
      path.push_back(v);
      bool ok = self(self, v);
      path.pop_back();
      used[static_cast<size_t>(v)] = 0;
      if (!ok) return false;
    }
    return true;
  };

  std::vector<int> roots(static_cast<size_t>(g.n));
  for (int v = 0; v < g.n; ++v) roots[static_cast<size_t>(v)] = v;
  std::stable_sort(roots.begin(), roots.end(), [&](int x, int y) {
    if (g.degree(x) != g.degree(y)) return g.degree(x) > g.degree(y);
    return x < y;
  });

  bool complete = true;
  for (int r : roots) {
    path.assign(1, r);
    std::fill(used.begin(), used.end(), 0);
    used[static_cast<size_t>(r)] = 1;
    if (!dfs(dfs, r)) {
      complete = false;
      break;
    }
  }
  res.optimal = complete && !out_of_budget;
  res.millis = elapsed_ms();
  return res;
}

}  // namespace indpath
