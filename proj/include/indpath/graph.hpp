#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace indpath {

// Undirected simple graph on dense vertex ids 0..n-1. Adjacency lists are
// kept sorted, so edge queries are binary searches and every serialization
// of the same graph is byte-identical.
struct Graph {
  int n = 0;
  std::vector<std::vector<int>> adj;

  Graph() = default;
  explicit Graph(int n_) : n(n_), adj(static_cast<size_t>(n_)) {}

  bool has_vertex(int v) const { return v >= 0 && v < n; }

  bool has_edge(int u, int v) const {
    if (!has_vertex(u) || !has_vertex(v) || u == v) return false;
    if (adj[v].size() < adj[u].size()) std::swap(u, v);
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
  }

  int degree(int v) const { return static_cast<int>(adj[v].size()); }

  long long edge_count() const {
    long long twice = 0;
    for (const auto& a : adj) twice += static_cast<long long>(a.size());
    return twice / 2;
  }

  void add_edge(int u, int v) {
    if (!has_vertex(u) || !has_vertex(v))
      throw std::invalid_argument("add_edge: vertex out of range");
    if (u == v) throw std::invalid_argument("add_edge: self loop");
    if (has_edge(u, v)) return;
    adj[u].insert(std::lower_bound(adj[u].begin(), adj[u].end(), v), v);
    adj[v].insert(std::lower_bound(adj[v].begin(), adj[v].end(), u), u);
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(edge_count()));
    for (int u = 0; u < n; ++u)
      for (int v : adj[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& es) {
    Graph g(n);
    for (auto [u, v] : es) g.add_edge(u, v);
    return g;
  }
};

inline bool is_clique(const Graph& g, const std::vector<int>& verts) {
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j)
      if (!g.has_edge(verts[i], verts[j])) return false;
  return true;
}

// Either a value or the reason there is none. Used where "no result" is a
// legitimate, explainable outcome rather than a bug.
template <class T>
struct Result {
  std::optional<T> value;
  std::string reason;

  static Result found(T v) { return {std::move(v), ""}; }
  static Result absent(std::string why) { return {std::nullopt, std::move(why)}; }
  explicit operator bool() const { return value.has_value(); }
  bool has_value() const { return value.has_value(); }
  T& operator*() { return *value; }
  const T& operator*() const { return *value; }
  T* operator->() { return &*value; }
  const T* operator->() const { return &*value; }
};

// Outcome of a certificate check. `reason` is empty iff `ok`.
struct Verdict {
  bool ok = false;
  std::string reason;

  static Verdict pass() { return {true, ""}; }
  static Verdict fail(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const { return ok; }
};

// A path given as its vertex sequence. `induced` records the claim being
// made about it; verify_path_witness checks the claim against a graph.
struct PathWitness {
  std::vector<int> vertices;
  bool induced = true;

  int size() const { return static_cast<int>(vertices.size()); }
};

inline Verdict verify_path_witness(const Graph& g, const PathWitness& w) {
  const auto& p = w.vertices;
  if (p.empty()) return Verdict::fail("path is empty");
  std::vector<char> seen(static_cast<size_t>(g.n), 0);
  for (int v : p) {
    if (!g.has_vertex(v))
      return Verdict::fail("vertex " + std::to_string(v) + " out of range");
    if (seen[static_cast<size_t>(v)])
      return Verdict::fail("vertex " + std::to_string(v) + " repeats");
    seen[static_cast<size_t>(v)] = 1;
  }
  for (size_t i = 0; i + 1 < p.size(); ++i)
    if (!g.has_edge(p[i], p[i + 1]))
      return Verdict::fail("missing edge " + std::to_string(p[i]) + "-" +
                           std::to_string(p[i + 1]));
  if (w.induced) {
    for (size_t i = 0; i < p.size(); ++i)
      for (size_t j = i + 2; j < p.size(); ++j)
        if (g.has_edge(p[i], p[j]))
          return Verdict::fail("chord " + std::to_string(p[i]) + "-" +
                               std::to_string(p[j]));
  }
  return Verdict::pass();
}

// ---------------------------------------------------------------------------
// Text formats.
//
// Graph:   "p <n> <m>" once, then m lines "e <u> <v>" with 0 <= u < v < n.
// Path:    "path <induced|plain> <v0> <v1> ...".
// Blank lines and lines starting with '#' are ignored. Parse errors carry
// the 1-based line number.

namespace detail {

inline std::runtime_error parse_error(int line, const std::string& what) {
  return std::runtime_error("line " + std::to_string(line) + ": " + what);
}

inline bool skippable(const std::string& s) {
  for (char c : s) {
    if (c == '#') return true;
    if (!isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace detail

inline Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_header = false;
  int n = 0;
  long long m = 0, edges_seen = 0;
  Graph g;
  while (std::getline(in, line)) {
    ++lineno;
    if (detail::skippable(line)) continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "p") {
      if (have_header) throw detail::parse_error(lineno, "second p line");
      if (!(ls >> n >> m) || n < 0 || m < 0)
        throw detail::parse_error(lineno, "bad p line, want: p <n> <m>");
      std::string rest;
      if (ls >> rest) throw detail::parse_error(lineno, "trailing tokens");
      g = Graph(n);
      have_header = true;
    } else if (tag == "e") {
      if (!have_header)
        throw detail::parse_error(lineno, "e line before p line");
      int u, v;
      if (!(ls >> u >> v))
        throw detail::parse_error(lineno, "bad e line, want: e <u> <v>");
      std::string rest;
      if (ls >> rest) throw detail::parse_error(lineno, "trailing tokens");
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw detail::parse_error(lineno, "endpoint out of range");
      if (u == v) throw detail::parse_error(lineno, "self loop");
      if (u > v)
        throw detail::parse_error(lineno, "endpoints not increasing");
      if (g.has_edge(u, v)) throw detail::parse_error(lineno, "duplicate edge");
      g.add_edge(u, v);
      ++edges_seen;
    } else {
      throw detail::parse_error(lineno, "unknown record '" + tag + "'");
    }
  }
  if (!have_header) throw detail::parse_error(lineno, "missing p line");
  if (edges_seen != m)
    throw detail::parse_error(
        lineno, "p line promised " + std::to_string(m) + " edges, got " +
                    std::to_string(edges_seen));
  return g;
}

inline std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << "p " << g.n << " " << g.edge_count() << "\n";
  for (auto [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
  return out.str();
}

inline PathWitness parse_path_witness(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (detail::skippable(line)) continue;
    std::istringstream ls(line);
    std::string tag, mode;
    ls >> tag;
    if (tag != "path")
      throw detail::parse_error(lineno, "unknown record '" + tag + "'");
    if (!(ls >> mode) || (mode != "induced" && mode != "plain"))
      throw detail::parse_error(lineno, "want: path <induced|plain> <v...>");
    PathWitness w;
    w.induced = (mode == "induced");
    int v;
    while (ls >> v) w.vertices.push_back(v);
    if (!ls.eof()) throw detail::parse_error(lineno, "bad vertex token");
    if (w.vertices.empty())
      throw detail::parse_error(lineno, "path has no vertices");
    return w;
  }
  throw detail::parse_error(lineno, "missing path line");
}

inline std::string format_path_witness(const PathWitness& w) {
  std::ostringstream out;
  out << "path " << (w.induced ? "induced" : "plain");
  for (int v : w.vertices) out << " " << v;
  out << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Traversal helpers.

inline std::vector<int> bfs_dist(const Graph& g, int s) {
  std::vector<int> dist(static_cast<size_t>(g.n), -1);
  std::queue<int> q;
  dist[static_cast<size_t>(s)] = 0;
  q.push(s);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : g.adj[u])
      if (dist[static_cast<size_t>(v)] < 0) {
        dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
        q.push(v);
      }
  }
  return dist;
}

inline bool is_connected(const Graph& g) {
  if (g.n == 0) return true;
  auto d = bfs_dist(g, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

// Shortest s-t path that avoids `forbidden` vertices entirely (s and t must
// not be forbidden). Shortest paths have no chords, so the result is induced
// in the graph minus the forbidden set; callers that need induced-ness in the
// full graph must forbid enough.
inline std::optional<PathWitness> shortest_path_avoiding(
    const Graph& g, int s, int t, const std::vector<char>& forbidden) {
  if (forbidden[static_cast<size_t>(s)] || forbidden[static_cast<size_t>(t)])
    return std::nullopt;
  std::vector<int> prev(static_cast<size_t>(g.n), -2);
  std::queue<int> q;
  prev[static_cast<size_t>(s)] = -1;
  q.push(s);
  while (!q.empty() && prev[static_cast<size_t>(t)] == -2) {
    int u = q.front();
    q.pop();
    for (int v : g.adj[u]) {
      if (forbidden[static_cast<size_t>(v)]) continue;
      if (prev[static_cast<size_t>(v)] != -2) continue;
      prev[static_cast<size_t>(v)] = u;
      q.push(v);
    }
  }
  if (prev[static_cast<size_t>(t)] == -2) return std::nullopt;
  PathWitness w;
  for (int v = t; v != -1; v = prev[static_cast<size_t>(v)])
    w.vertices.push_back(v);
  std::reverse(w.vertices.begin(), w.vertices.end());
  return w;
}

// Longest path in a tree by the usual two-sweep argument: the far end of any
// BFS lies on a diameter. Ties are broken toward smaller vertex ids so the
// result is deterministic. Throws if g is not a tree.
inline PathWitness tree_longest_path(const Graph& g) {
  if (g.n == 0) throw std::invalid_argument("tree_longest_path: empty graph");
  if (g.edge_count() != g.n - 1 || !is_connected(g))
    throw std::invalid_argument("tree_longest_path: not a tree");
  auto far_end = [&](int s) {
    auto d = bfs_dist(g, s);
    int best = s;
    for (int v = 0; v < g.n; ++v)
      if (d[static_cast<size_t>(v)] > d[static_cast<size_t>(best)]) best = v;
    return best;
  };
  int a = far_end(0);
  int b = far_end(a);
  std::vector<char> none(static_cast<size_t>(g.n), 0);
  auto w = shortest_path_avoiding(g, a, b, none);
  w->induced = true;
  return *w;
}

// ---------------------------------------------------------------------------
// Induced subgraph with a host mapping, so results computed downstream can be
// translated back. Induced subpaths of the piece are induced in the host.
struct Subgraph {
  Graph graph;
  std::vector<int> to_host;    // piece id -> host id
  std::vector<int> from_host;  // host id -> piece id, or -1

  std::vector<int> lift(const std::vector<int>& piece_vertices) const {
    std::vector<int> out;
    out.reserve(piece_vertices.size());
    for (int v : piece_vertices) out.push_back(to_host[static_cast<size_t>(v)]);
    return out;
  }
};

// First edge of g in (u, v) lexicographic order, as a 2-vertex witness;
// the usual last resort when a guarantee only promises a trivial path.
inline PathWitness lowest_edge(const Graph& g) {
  for (int u = 0; u < g.n; ++u)
    if (!g.adj[u].empty())
      return {{u, *std::min_element(g.adj[u].begin(), g.adj[u].end())}, true};
  throw std::invalid_argument("graph has no edge");
}

inline Subgraph induced_subgraph(const Graph& g, std::vector<int> keep) {
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  Subgraph s;
  s.to_host = keep;
  s.from_host.assign(static_cast<size_t>(g.n), -1);
  for (size_t i = 0; i < keep.size(); ++i)
    s.from_host[static_cast<size_t>(keep[i])] = static_cast<int>(i);
  s.graph = Graph(static_cast<int>(keep.size()));
  for (size_t i = 0; i < keep.size(); ++i)
    for (int v : g.adj[keep[i]]) {
      int j = s.from_host[static_cast<size_t>(v)];
      if (j > static_cast<int>(i)) s.graph.add_edge(static_cast<int>(i), j);
    }
  return s;
}

}  // namespace indpath
