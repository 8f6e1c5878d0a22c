#pragma once

// Acceptance suite: one check per shipped guarantee, each printed as a single
// PASS/FAIL line with its wall time. Shared by the test binary and the CLI's
// verify subcommand so both report the same verdicts. A criterion fails on
// the first violated check, on any exception, or on blowing its time budget;
// the failure message carries the measured values.

#include <indpath/blocks.hpp>
#include <indpath/chordal.hpp>
#include <indpath/extremal.hpp>
#include <indpath/graph.hpp>
#include <indpath/interval.hpp>
#include <indpath/ktree.hpp>
#include <indpath/oracle.hpp>
#include <indpath/outerplanar.hpp>
#include <indpath/tw2.hpp>

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace indpath::acceptance {

namespace detail {

struct Probe {
  std::string err;
  void check(bool ok, const std::string& msg) {
    if (!ok && err.empty()) err = msg;
  }
};

// doubling instance with every non-boundary chord kept with probability 1/2;
// the boundary cycle survives, so the graph stays 2-connected and keeps its
// spanning path
inline std::pair<Graph, PathWitness> sparsified_doubling(int i, uint64_t seed) {
  auto f = gen_outerplanar_doubling(i);
  const auto& h = f.ham->vertices;
  auto key = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
  std::set<std::pair<int, int>> boundary;
  for (size_t j = 0; j + 1 < h.size(); ++j) boundary.insert(key(h[j], h[j + 1]));
  boundary.insert(key(h.back(), h.front()));
  std::mt19937_64 rng(seed);
  Graph g(f.graph.n);
  for (auto [u, v] : f.graph.edges())
    if (boundary.count(key(u, v)) || (rng() & 1)) g.add_edge(u, v);
  PathWitness w = *f.ham;
  w.induced = false;
  return {std::move(g), std::move(w)};
}

// glue copies of a donor into a chain of blocks, identifying each copy's
// first spanning-path vertex with the previous copy's last
inline std::pair<Graph, PathWitness> chain_with_ham(const Graph& donor,
                                                    const std::vector<int>& ham, int copies) {
  int n = donor.n;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> big;
  int next_id = 0, prev_tail = -1;
  for (int j = 0; j < copies; ++j) {
    std::vector<int> map(static_cast<size_t>(n), -1);
    if (j > 0) map[static_cast<size_t>(ham.front())] = prev_tail;
    for (int v = 0; v < n; ++v)
      if (map[static_cast<size_t>(v)] == -1) map[static_cast<size_t>(v)] = next_id++;
    for (auto [u, v] : donor.edges())
      edges.emplace_back(map[static_cast<size_t>(u)], map[static_cast<size_t>(v)]);
    for (size_t q = (j == 0 ? 0 : 1); q < ham.size(); ++q)
      big.push_back(map[static_cast<size_t>(ham[q])]);
    prev_tail = map[static_cast<size_t>(ham.back())];
  }
  Graph g = Graph::from_edges(next_id, edges);
  return {std::move(g), PathWitness{std::move(big), false}};
}

inline IntervalInstance staircase_instance(int n, int len) {
  IntervalRep rep;
  rep.n = n;
  for (int j = 0; j < n; ++j) {
    rep.left.push_back(10LL * j);
    rep.right.push_back(10LL * j + len);
  }
  return make_interval_instance(normalize_endpoints(rep));
}

inline PathWitness identity_ham(int n) {
  PathWitness w;
  w.induced = false;
  for (int j = 0; j < n; ++j) w.vertices.push_back(j);
  return w;
}

inline std::optional<IntervalInstance> random_interval_instance(int n, std::mt19937_64& rng) {
  IntervalRep rep;
  rep.n = n;
  for (int j = 0; j < n; ++j) {
    long long l = static_cast<long long>(rng() % static_cast<uint64_t>(3 * n));
    long long len = 1 + static_cast<long long>(rng() % static_cast<uint64_t>(2 * n));
    rep.left.push_back(l);
    rep.right.push_back(l + len);
  }
  IntervalInstance inst = make_interval_instance(normalize_endpoints(rep));
  if (!is_connected(inst.graph)) return std::nullopt;
  return inst;
}

// random 2-tree, then one random edge dropped when that keeps it 2-connected
inline Graph random_near_2tree(int n, std::mt19937_64& rng) {
  Graph g(n);
  std::vector<std::pair<int, int>> cliques{{0, 1}};
  g.add_edge(0, 1);
  for (int x = 2; x < n; ++x) {
    auto [a, b] = cliques[rng() % cliques.size()];
    g.add_edge(a, x);
    g.add_edge(b, x);
    cliques.emplace_back(a, x);
    cliques.emplace_back(b, x);
  }
  auto all = g.edges();
  auto [du, dv] = all[rng() % all.size()];
  Graph h(n);
  for (auto [u, v] : all)
    if (!(u == du && v == dv)) h.add_edge(u, v);
  if (is_connected(h) && block_decomposition(h).block_count() == 1) return h;
  return g;
}

inline std::string sized(const char* what, int got, int want) {
  std::ostringstream s;
  s << what << " measured " << got << ", want " << want;
  return s.str();
}

}  // namespace detail

struct Criterion {
  int id;
  std::string name;
  double seconds_limit;
  std::function<std::string()> body;  // empty string means pass
};

inline std::vector<Criterion> criteria() {
  using detail::Probe;
  std::vector<Criterion> out;

  out.push_back({1, "doubling-oracle-exact", 60.0, [] {
    Probe p;
    for (int i = 0; i <= 4 && p.err.empty(); ++i) {
      auto f = gen_outerplanar_doubling(i);
      p.check(f.graph.n == 3 << i, "i=" + std::to_string(i) + ": wrong vertex count");
      auto r = longest_induced_path_exact(f.graph);
      p.check(r.optimal, "i=" + std::to_string(i) + ": oracle hit its budget");
      p.check(r.best.size() == 2 * (i + 1),
              "i=" + std::to_string(i) + ": " +
                  detail::sized("longest induced path", r.best.size(), 2 * (i + 1)));
    }
    return p.err;
  }});

  out.push_back({2, "ktree-extraction-bound", 30.0, [] {
    Probe p;
    for (int i = 0; i <= 10 && p.err.empty(); ++i) {
      auto f = gen_outerplanar_doubling(i);
      auto e = extract_ktree_path(f.graph, *f.ham, 2);
      std::string at = "i=" + std::to_string(i) + ": ";
      p.check(verify_path_witness(f.graph, e.path).ok, at + "witness rejected");
      double want = f.graph.n > 4 ? std::log2(static_cast<double>(f.graph.n - 3)) / 2.0 : 0.0;
      p.check(static_cast<double>(e.path.size()) >= want - 1e-9,
              at + "size " + std::to_string(e.path.size()) + " below log2(n-3)/2 = " +
                  std::to_string(want));
      p.check(e.path.size() <= 2 * (i + 1), at + "size above the known optimum");
    }
    return p.err;
  }});

  out.push_back({3, "sparsified-2tree-bound", 60.0, [] {
    Probe p;
    int ran = 0;
    for (uint64_t seed = 0; seed < 50 && p.err.empty(); ++seed) {
      int i = 2 + static_cast<int>(seed % 3);
      auto [g, w] = detail::sparsified_doubling(i, seed * 977 + static_cast<uint64_t>(i));
      std::string at = "seed=" + std::to_string(seed) + ": ";
      auto e = extract_partial_2tree(g, w);
      p.check(verify_path_witness(g, e.path).ok, at + "witness rejected");
      double want = std::log2(static_cast<double>(g.n - 3)) / 2.0;
      p.check(static_cast<double>(e.path.size()) >= want - 1e-9,
              at + "size " + std::to_string(e.path.size()) + " below log2(n-3)/2 = " +
                  std::to_string(want));
      if (g.n <= 14) {
        auto r = longest_induced_path_exact(g);
        p.check(r.optimal, at + "oracle hit its budget");
        p.check(e.path.size() <= r.best.size(), at + "extraction beat the oracle");
      }
      ++ran;
    }
    p.check(ran == 50 || !p.err.empty(), "expected 50 instances");
    return p.err;
  }});

  out.push_back({4, "outerplanar-extraction-bound", 10.0, [] {
    Probe p;
    for (int i = 1; i <= 6 && p.err.empty(); ++i) {
      auto f = gen_outerplanar_doubling(i);
      auto e = extract_outerplanar(f.graph);
      std::string at = "i=" + std::to_string(i) + ": ";
      p.check(verify_path_witness(f.graph, e.path).ok, at + "witness rejected");
      double want = std::log2(static_cast<double>(f.graph.n)) / 2.0;
      p.check(static_cast<double>(e.path.size()) >= want - 1e-9,
              at + "size " + std::to_string(e.path.size()) + " below log2(n)/2 = " +
                  std::to_string(want));
      p.check(e.dual_nodes == f.graph.n - 2,
              at + detail::sized("weak dual nodes", e.dual_nodes, f.graph.n - 2));
      p.check(e.dual_max_degree <= 3, at + "weak dual degree above 3");
    }
    return p.err;
  }});

  out.push_back({5, "bracelet-branch-bound", 10.0, [] {
    Probe p;
    auto donor = gen_outerplanar_doubling(2);
    for (int b : {2, 5, 20}) {
      if (!p.err.empty()) break;
      auto [g, w] = detail::chain_with_ham(donor.graph, donor.ham->vertices, b);
      auto e = extract_bracelet(g);
      std::string at = "blocks=" + std::to_string(b) + ": ";
      p.check(verify_path_witness(g, e.path).ok, at + "witness rejected");
      p.check(e.blocks == b, at + detail::sized("chain blocks", e.blocks, b));
      double lg = std::log2(static_cast<double>(g.n));
      double want = e.chained ? lg : (lg - std::log2(lg)) / 2.0;
      p.check(static_cast<double>(e.path.size()) >= want - 1e-9,
              at + "size " + std::to_string(e.path.size()) +
                  " below the branch bound " + std::to_string(want));
      p.check(e.chained == (static_cast<double>(b) > lg),
              at + "branch choice disagrees with the block count");
    }
    return p.err;
  }});

  out.push_back({6, "interval-pipeline", 120.0, [] {
    Probe p;
    for (int n : {5, 50, 500}) {  // overlap width 12: a path, clique number 2
      if (!p.err.empty()) break;
      auto inst = detail::staircase_instance(n, 12);
      auto e = interval_pipeline(inst, detail::identity_ham(n));
      std::string at = "path n=" + std::to_string(n) + ": ";
      p.check(e.omega == 2, at + detail::sized("clique number", e.omega, 2));
      p.check(e.path.size() == n, at + detail::sized("size", e.path.size(), n));
    }
    for (int n : {100, 1000, 10000}) {  // overlap width 22: clique number 3
      if (!p.err.empty()) break;
      auto inst = detail::staircase_instance(n, 22);
      auto e = interval_pipeline(inst, detail::identity_ham(n));
      std::string at = "staircase n=" + std::to_string(n) + ": ";
      p.check(verify_path_witness(inst.graph, e.path).ok, at + "witness rejected");
      p.check(e.omega == 3, at + detail::sized("clique number", e.omega, 3));
      double f1_want = std::log2(n / 120.0) / std::log2(5.0);
      p.check(static_cast<double>(e.f1_size) >= f1_want - 1e-9,
              at + "stage 1 kept " + std::to_string(e.f1_size) + ", want log5(n/120) = " +
                  std::to_string(f1_want));
      p.check(static_cast<double>(e.f2_size) >= std::sqrt(static_cast<double>(e.f1_size)) - 1e-9,
              at + "stage 2 kept " + std::to_string(e.f2_size) + " from " +
                  std::to_string(e.f1_size));
      p.check(static_cast<double>(e.path.size()) >=
                  std::sqrt(static_cast<double>(e.f2_size) / 3.0) - 1e-9,
              at + "stage 3 size " + std::to_string(e.path.size()) + " from " +
                  std::to_string(e.f2_size));
    }
    int kept = 0;
    for (uint64_t attempt = 0; attempt < 4000 && kept < 100 && p.err.empty(); ++attempt) {
      int n = 4 + static_cast<int>(attempt % 13);
      std::mt19937_64 rng(9000 + attempt);
      auto inst = detail::random_interval_instance(n, rng);
      if (!inst) continue;
      auto lp = longest_path_exact(inst->graph);
      if (!lp.optimal || lp.best.size() != n) continue;  // want Hamiltonian hosts
      auto e = interval_pipeline(*inst, lp.best);
      auto r = longest_induced_path_exact(inst->graph);
      std::string at = "random attempt=" + std::to_string(attempt) + ": ";
      p.check(verify_path_witness(inst->graph, e.path).ok, at + "witness rejected");
      p.check(r.optimal, at + "oracle hit its budget");
      p.check(e.path.size() <= r.best.size(), at + "pipeline beat the oracle");
      ++kept;
    }
    p.check(kept >= 100 || !p.err.empty(),
            "only " + std::to_string(kept) + " Hamiltonian interval hosts out of 4000 draws");
    return p.err;
  }});

  out.push_back({7, "planar-substitution-oracle-exact", 120.0, [] {
    Probe p;
    for (auto [k, i] : {std::pair{4, 1}, {4, 2}, {5, 1}}) {
      if (!p.err.empty()) break;
      auto f = gen_planar_substitution(k, i);
      auto r = longest_induced_path_exact(f.graph);
      std::string at = "k=" + std::to_string(k) + " i=" + std::to_string(i) + ": ";
      p.check(r.optimal, at + "oracle hit its budget");
      p.check(r.best.size() == 2 * i + (k - 2),
              at + detail::sized("longest induced path", r.best.size(), 2 * i + (k - 2)));
    }
    return p.err;
  }});

  out.push_back({8, "stacked-triangulation-oracle-exact", 60.0, [] {
    Probe p;
    for (int i : {2, 3}) {
      if (!p.err.empty()) break;
      auto f = gen_stacked_triangulation(i);
      auto r = longest_induced_path_exact(f.graph);
      std::string at = "i=" + std::to_string(i) + ": ";
      p.check(r.optimal, at + "oracle hit its budget");
      p.check(r.best.size() == i + 1,
              at + detail::sized("longest induced path", r.best.size(), i + 1));
    }
    return p.err;
  }});

  out.push_back({9, "chordal-tower-ceiling", 60.0, [] {
    Probe p;
    for (int k : {1, 2}) {
      if (!p.err.empty()) break;
      auto f = gen_chordal_tower(2, k, 1);
      std::string at = "k=" + std::to_string(k) + ": ";
      auto omega = chordal_omega(f.graph);
      p.check(omega.has_value() && *omega == 5, at + "clique number is not 5");
      p.check(f.ham.has_value() && verify_path_witness(f.graph, *f.ham).ok,
              at + "spanning witness rejected");
      auto r = longest_induced_path_exact(f.graph);
      p.check(r.optimal, at + "oracle hit its budget");
      double cap = 2.0 * (std::log2(6.0) + k - 1);
      p.check(static_cast<double>(r.best.size()) <= cap + 1e-9,
              at + "longest induced path " + std::to_string(r.best.size()) +
                  " above the ceiling " + std::to_string(cap));
    }
    return p.err;
  }});

  out.push_back({10, "block-composition-bound", 10.0, [] {
    Probe p;
    auto donor = gen_outerplanar_doubling(2);
    for (int b : {2, 8, 20}) {
      if (!p.err.empty()) break;
      auto [g, w] = detail::chain_with_ham(donor.graph, donor.ham->vertices, b);
      auto e = extract_partial_2tree_connected(g, w);
      std::string at = "blocks=" + std::to_string(b) + ": ";
      p.check(verify_path_witness(g, e.path).ok, at + "witness rejected");
      p.check(e.walk_blocks == b, at + detail::sized("walked blocks", e.walk_blocks, b));
      double threshold = 0.5 * std::log2(static_cast<double>(g.n));
      p.check(static_cast<double>(e.path.size()) >= e.bound - 1e-9,
              at + "size below its certified bound");
      if (e.chained) {
        p.check(static_cast<double>(b) > threshold + 1e-9, at + "chained too early");
        p.check(static_cast<double>(e.path.size()) >= threshold - 1e-9,
                at + "chained size below half a log");
      } else {
        p.check(static_cast<double>(b) <= threshold + 1e-9, at + "dug in too late");
        double run = std::ceil(static_cast<double>(g.n) / b);
        double want = run >= 5 ? std::log2(run - 3.0) / 2.0 : 0.0;
        p.check(static_cast<double>(e.path.size()) >= want - 1e-9,
                at + "size " + std::to_string(e.path.size()) + " below the run bound " +
                    std::to_string(want));
      }
    }
    return p.err;
  }});

  out.push_back({11, "soundness-sweep", 120.0, [] {
    Probe p;
    int instances = 0, runs = 0;
    auto audit = [&](const Graph& g, const PathWitness& got, int lip, const std::string& at) {
      ++runs;
      p.check(got.induced, at + "output not marked induced");
      p.check(verify_path_witness(g, got).ok, at + "witness rejected");
      p.check(got.size() <= lip, at + "extraction beat the oracle");
    };
    for (uint64_t seed = 0; seed < 500 && p.err.empty(); ++seed) {
      std::string at = "seed=" + std::to_string(seed) + ": ";
      ++instances;
      switch (seed % 5) {
        case 0: {  // one sparsified doubling block: three extractors apply
          auto [g, w] = detail::sparsified_doubling(1 + static_cast<int>(seed / 5 % 2), seed);
          auto r = longest_induced_path_exact(g);
          p.check(r.optimal, at + "oracle hit its budget");
          int lip = r.best.size();
          audit(g, extract_partial_2tree(g, w).path, lip, at + "2tree: ");
          audit(g, extract_outerplanar(g).path, lip, at + "outerplanar: ");
          audit(g, extract_bracelet(g).path, lip, at + "bracelet: ");
          break;
        }
        case 1: {  // chain of two sparsified blocks
          auto [d, dw] = detail::sparsified_doubling(1, seed);
          auto [g, w] = detail::chain_with_ham(d, dw.vertices, 2);
          auto r = longest_induced_path_exact(g);
          p.check(r.optimal, at + "oracle hit its budget");
          int lip = r.best.size();
          audit(g, extract_partial_2tree_connected(g, w).path, lip, at + "composed: ");
          audit(g, extract_bracelet(g).path, lip, at + "bracelet: ");
          break;
        }
        case 2: {  // random interval host, mined when Hamiltonian
          std::mt19937_64 rng(seed * 613 + 29);
          auto inst = detail::random_interval_instance(4 + static_cast<int>(seed % 9), rng);
          if (!inst) break;
          auto lp = longest_path_exact(inst->graph);
          if (!lp.optimal || lp.best.size() != inst->graph.n) break;
          auto r = longest_induced_path_exact(inst->graph);
          p.check(r.optimal, at + "oracle hit its budget");
          audit(inst->graph, interval_pipeline(*inst, lp.best).path, r.best.size(),
                at + "interval: ");
          break;
        }
        case 3: {  // small k-trees with universal extensions
          int k = (seed / 5) % 2 == 0 ? 2 : 3;
          auto f = gen_ktree_universal(k, k == 2 ? 2 : 1);
          auto r = longest_induced_path_exact(f.graph);
          p.check(r.optimal, at + "oracle hit its budget");
          audit(f.graph, extract_ktree_path(f.graph, *f.ham, k).path, r.best.size(),
                at + "ktree: ");
          break;
        }
        case 4: {  // random near-2-trees with their longest plain path
          std::mt19937_64 rng(seed * 419 + 3);
          Graph g = detail::random_near_2tree(5 + static_cast<int>(seed % 8), rng);
          auto lp = longest_path_exact(g);
          if (!lp.optimal) break;
          auto r = longest_induced_path_exact(g);
          p.check(r.optimal, at + "oracle hit its budget");
          audit(g, extract_partial_2tree(g, lp.best).path, r.best.size(), at + "2tree: ");
          break;
        }
      }
    }
    p.check(instances == 500 || !p.err.empty(), "expected 500 instances");
    p.check(runs >= 600 || !p.err.empty(),
            "only " + std::to_string(runs) + " extractor runs across the sweep");
    return p.err;
  }});

  return out;
}

// Runs every criterion, prints one line each, returns the failure count.
inline int run_all(std::ostream& out) {
  int failures = 0;
  double total = 0.0;
  for (const auto& c : criteria()) {
    auto t0 = std::chrono::steady_clock::now();
    std::string err;
    try {
      err = c.body();
    } catch (const std::exception& e) {
      err = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    total += secs;
    if (err.empty() && secs > c.seconds_limit)
      err = "exceeded the time budget of " + std::to_string(c.seconds_limit) + "s";
    std::ostringstream line;
    line << (err.empty() ? "PASS" : "FAIL") << "  " << std::setw(2) << c.id << "  "
         << c.name << "  (" << std::fixed << std::setprecision(1) << secs << "s)";
    if (!err.empty()) line << "  " << err;
    out << line.str() << "\n";
    if (!err.empty()) ++failures;
  }
  out << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
      << " in " << std::fixed << std::setprecision(1) << total << "s\n";
  return failures;
}

}  // namespace indpath::acceptance
