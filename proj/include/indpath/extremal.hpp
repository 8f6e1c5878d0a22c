#pragma once

// Generators for structured graph families with known or conjectured longest
// induced path behavior. Every generator checks its own vertex/edge counts and
// validates the Hamiltonian witness it claims, so a bad instance cannot leave
// this file silently.

#include <indpath/chordal.hpp>
#include <indpath/graph.hpp>

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace indpath {

struct FamilyInstance {
    Graph graph;
    std::string family;
    std::vector<long long> params;
    std::optional<double> predicted_lip;  // exact or conjectured optimum, when known
    std::optional<PathWitness> ham;       // Hamiltonian path, when the family has one
};

namespace detail {

inline void gen_check(bool ok, const std::string& what) {
    if (!ok) throw std::logic_error("generator invariant violated: " + what);
}

inline void check_ham(const Graph& g, const PathWitness& ham, const std::string& family) {
    gen_check(static_cast<int>(ham.vertices.size()) == g.n, family + ": ham not spanning");
    gen_check(!ham.induced, family + ": ham must be a plain witness");
    auto v = verify_path_witness(g, ham);
    gen_check(v.ok, family + ": ham rejected: " + v.reason);
}

}  // namespace detail

// Triangle whose outer boundary doubles i times: each round inserts one fresh
// vertex on every boundary edge. 3*2^i vertices, outerplanar, Hamiltonian.
inline FamilyInstance gen_outerplanar_doubling(int i) {
    if (i < 0 || i > 20) throw std::invalid_argument("doubling: want 0 <= i <= 20");
    Graph g(3 << i);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    std::vector<std::pair<int, int>> boundary = {{0, 1}, {1, 2}, {2, 0}};
    int next = 3;
    for (int s = 1; s <= i; ++s) {
        std::vector<std::pair<int, int>> grown;
        grown.reserve(boundary.size() * 2);
        for (auto [a, b] : boundary) {
            int x = next++;
            g.add_edge(a, x);
            g.add_edge(x, b);
            grown.emplace_back(a, x);
            grown.emplace_back(x, b);
        }
        boundary = std::move(grown);
    }
    detail::gen_check(next == g.n, "doubling: vertex count");
    detail::gen_check(g.edge_count() == 3 * ((1LL << (i + 1)) - 1), "doubling: edge count");

    PathWitness ham;
    ham.induced = false;
    for (auto& e : boundary) ham.vertices.push_back(e.first);
    detail::check_ham(g, ham, "doubling");
    detail::gen_check(g.has_edge(ham.vertices.back(), ham.vertices.front()),
                      "doubling: boundary must close into a cycle");

    return {std::move(g), "doubling", {i}, 2.0 * (i + 1), std::move(ham)};
}

// Doubling instance plus k-2 universal vertices. The result is a k-tree; any
// induced path through a universal vertex has at most 3 vertices, so the long
// induced paths of the base survive unchanged.
inline FamilyInstance gen_ktree_universal(int k, int i) {
    if (k < 2) throw std::invalid_argument("ktree-universal: want k >= 2");
    FamilyInstance base = gen_outerplanar_doubling(i);
    int nb = base.graph.n;
    Graph g(nb + (k - 2));
    for (auto [u, v] : base.graph.edges()) g.add_edge(u, v);
    for (int x = nb; x < g.n; ++x)
        for (int y = 0; y < x; ++y) g.add_edge(y, x);

    PathWitness ham;
    ham.induced = false;
    for (int x = nb; x < g.n; ++x) ham.vertices.push_back(x);
    ham.vertices.insert(ham.vertices.end(), base.ham->vertices.begin(),
                        base.ham->vertices.end());
    detail::check_ham(g, ham, "ktree-universal");

    long long m = base.graph.edge_count();
    for (int x = nb; x < g.n; ++x) m += x;
    detail::gen_check(g.edge_count() == m, "ktree-universal: edge count");

    double lip = (i == 0) ? 2.0 : 2.0 * (i + 1);
    return {std::move(g), "ktree-universal", {k, i}, lip, std::move(ham)};
}

// Triangle with i rounds of face stacking: every triangle created in the
// previous round receives one interior vertex joined to its three corners.
// Chordal with clique number 4, no Hamiltonian path witness is claimed.
inline FamilyInstance gen_stacked_triangulation(int i) {
    if (i < 0 || i > 13) throw std::invalid_argument("stacked: want 0 <= i <= 13");
    long long pw = 1;
    for (int s = 0; s < i; ++s) pw *= 3;
    int n = static_cast<int>(3 + (pw - 1) / 2);
    Graph g(n);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    std::vector<std::array<int, 3>> last = {{0, 1, 2}};
    int next = 3;
    for (int s = 1; s <= i; ++s) {
        std::vector<std::array<int, 3>> cur;
        cur.reserve(last.size() * 3);
        for (auto& t : last) {
            int x = next++;
            g.add_edge(t[0], x);
            g.add_edge(t[1], x);
            g.add_edge(t[2], x);
            cur.push_back({t[0], t[1], x});
            cur.push_back({t[0], t[2], x});
            cur.push_back({t[1], t[2], x});
        }
        last = std::move(cur);
    }
    detail::gen_check(next == n, "stacked: vertex count");
    detail::gen_check(g.edge_count() == 3LL * (n - 2), "stacked: edge count");
    auto omega = chordal_omega(g);
    detail::gen_check(omega.has_value() && *omega == (i == 0 ? 3 : 4),
                      "stacked: clique number");

    double lip = (i == 0) ? 2.0 : static_cast<double>(i + 1);
    return {std::move(g), "stacked", {i}, lip, std::nullopt};
}

// Two hubs joined to a k-vertex fan path; each refinement round substitutes a
// copy of the previous level into every fan path edge, gluing the copy's hubs
// onto the edge's endpoints. Planar, Hamiltonian from hub to hub.
inline FamilyInstance gen_planar_substitution(int k, int i) {
    if (k < 3) throw std::invalid_argument("planar-sub: want k >= 3");
    if (i < 1) throw std::invalid_argument("planar-sub: want i >= 1");
    long long n = k + 2;
    for (int lvl = 2; lvl <= i; ++lvl) {
        n = (k + 2) + static_cast<long long>(k - 1) * (n - 2);
        if (n > 1'000'000) throw std::invalid_argument("planar-sub: instance too large");
    }

    auto frame = [&](Graph& g) {
        g.add_edge(0, 1);
        for (int j = 1; j <= k; ++j) {
            g.add_edge(0, 1 + j);
            g.add_edge(1, 1 + j);
        }
        for (int j = 1; j < k; ++j) g.add_edge(1 + j, 2 + j);
    };

    Graph cur(k + 2);
    frame(cur);
    PathWitness cur_ham;
    cur_ham.induced = false;
    cur_ham.vertices.push_back(0);
    for (int j = 1; j <= k; ++j) cur_ham.vertices.push_back(1 + j);
    cur_ham.vertices.push_back(1);
    long long cur_m = 3LL * k;

    for (int lvl = 2; lvl <= i; ++lvl) {
        Graph next_g((k + 2) + (k - 1) * (cur.n - 2));
        frame(next_g);
        PathWitness next_ham;
        next_ham.induced = false;
        next_ham.vertices.push_back(0);
        int fresh = k + 2;
        for (int j = 1; j < k; ++j) {
            // copy of the previous level glued onto fan edge (1+j, 2+j)
            std::vector<int> map(static_cast<size_t>(cur.n));
            map[0] = 1 + j;
            map[1] = 2 + j;
            for (int x = 2; x < cur.n; ++x) map[static_cast<size_t>(x)] = fresh++;
            for (auto [a, b] : cur.edges())
                next_g.add_edge(map[static_cast<size_t>(a)], map[static_cast<size_t>(b)]);
            for (size_t q = (j == 1 ? 0 : 1); q < cur_ham.vertices.size(); ++q)
                next_ham.vertices.push_back(map[static_cast<size_t>(cur_ham.vertices[q])]);
        }
        next_ham.vertices.push_back(1);
        detail::gen_check(fresh == next_g.n, "planar-sub: vertex count");
        cur_m = 3LL * k + static_cast<long long>(k - 1) * (cur_m - 1);
        detail::gen_check(next_g.edge_count() == cur_m, "planar-sub: edge count");
        cur = std::move(next_g);
        cur_ham = std::move(next_ham);
    }
    detail::gen_check(cur.n == n, "planar-sub: final size");
    detail::check_ham(cur, cur_ham, "planar-sub");

    double lip = 2.0 * i + (k - 2);
    return {std::move(cur), "planar-sub", {k, i}, lip, std::move(cur_ham)};
}

// Tower construction: start from a doubling seed, then t-1 rounds of "adjoin a
// universal adjacent pair, then substitute the result into its own Hamiltonian
// path edges k-1 more times". Chordal with clique number exactly 2t+1.
inline FamilyInstance gen_chordal_tower(int t, int k, int seed_i) {
    if (t < 2) throw std::invalid_argument("tower: want t >= 2");
    if (k < 1) throw std::invalid_argument("tower: want k >= 1");
    if (seed_i < 0 || seed_i > 20) throw std::invalid_argument("tower: want 0 <= seed_i <= 20");

    // size precheck before building anything
    long long n = 3LL << seed_i, m = 3 * ((1LL << (seed_i + 1)) - 1);
    for (int round = 2; round <= t; ++round) {
        m += 2 * n + 1;
        n += 2;
        long long n1 = n, m1 = m;
        for (int j = 2; j <= k; ++j) {
            m = m1 + (n1 - 1) * (m - 1);
            n = n1 + (n1 - 1) * (n - 2);
            if (n > 1'000'000) throw std::invalid_argument("tower: instance too large");
        }
    }

    struct Inst {
        Graph g;
        PathWitness ham;
        int u = -1, v = -1;  // hub pair; the Hamiltonian path runs u -> v
    };

    FamilyInstance seed = gen_outerplanar_doubling(seed_i);
    Inst cur{std::move(seed.graph), std::move(*seed.ham), -1, -1};

    auto lift = [](Inst h) {
        int nb = h.g.n;
        Graph g(nb + 2);
        for (auto [a, b] : h.g.edges()) g.add_edge(a, b);
        for (int x = 0; x < nb; ++x) {
            g.add_edge(x, nb);
            g.add_edge(x, nb + 1);
        }
        g.add_edge(nb, nb + 1);
        PathWitness ham;
        ham.induced = false;
        ham.vertices.push_back(nb);
        ham.vertices.insert(ham.vertices.end(), h.ham.vertices.begin(), h.ham.vertices.end());
        ham.vertices.push_back(nb + 1);
        return Inst{std::move(g), std::move(ham), nb, nb + 1};
    };

    auto substitute_once = [](const Inst& frame, const Inst& piece) {
        int n1 = frame.g.n;
        Graph g(n1 + (n1 - 1) * (piece.g.n - 2));
        for (auto [a, b] : frame.g.edges()) g.add_edge(a, b);
        PathWitness ham;
        ham.induced = false;
        int fresh = n1;
        for (int s = 0; s + 1 < n1; ++s) {
            int hs = frame.ham.vertices[static_cast<size_t>(s)];
            int ht = frame.ham.vertices[static_cast<size_t>(s) + 1];
            std::vector<int> map(static_cast<size_t>(piece.g.n), -1);
            map[static_cast<size_t>(piece.u)] = hs;
            map[static_cast<size_t>(piece.v)] = ht;
            for (int x = 0; x < piece.g.n; ++x)
                if (x != piece.u && x != piece.v) map[static_cast<size_t>(x)] = fresh++;
            for (auto [a, b] : piece.g.edges())
                g.add_edge(map[static_cast<size_t>(a)], map[static_cast<size_t>(b)]);
            for (size_t q = (s == 0 ? 0 : 1); q < piece.ham.vertices.size(); ++q)
                ham.vertices.push_back(map[static_cast<size_t>(piece.ham.vertices[q])]);
        }
        detail::gen_check(fresh == g.n, "tower: substitution vertex count");
        return Inst{std::move(g), std::move(ham), frame.u, frame.v};
    };

    for (int round = 2; round <= t; ++round) {
        cur = lift(std::move(cur));
        Inst base = cur;  // frame shape for this round
        for (int j = 2; j <= k; ++j) cur = substitute_once(base, cur);
    }

    detail::gen_check(cur.g.n == n, "tower: final vertex count");
    detail::gen_check(cur.g.edge_count() == m, "tower: final edge count");
    detail::check_ham(cur.g, cur.ham, "tower");
    auto omega = chordal_omega(cur.g);
    detail::gen_check(omega.has_value(), "tower: must stay chordal");
    detail::gen_check(*omega == 2 * t + 1, "tower: clique number must be 2t+1");

    double seed_n = static_cast<double>(3LL << seed_i);
    double lip = (t == 2) ? 2.0 * (std::log2(seed_n) + k - 1)
                          : 2.0 * (k + t * std::pow(std::log2(seed_n), 1.0 / t));
    return {std::move(cur.g), "tower", {t, k, seed_i}, lip, std::move(cur.ham)};
}

}  // namespace indpath
