#pragma once

// Brute-force reference implementations for tests. Deliberately written
// with different techniques than the library (subset enumeration, vertex
// deletion, branch-set search) so they can serve as independent oracles
// on small instances.

#include <indpath/graph.hpp>

#include <algorithm>
#include <numeric>
#include <vector>

namespace testref {

// True iff g restricted to the members of `mask` induces a path.
inline bool subset_induces_path(const indpath::Graph& g, unsigned mask) {
    std::vector<int> verts;
    for (int v = 0; v < g.n; ++v)
        if (mask >> v & 1u) verts.push_back(v);
    if (verts.empty()) return false;
    if (verts.size() == 1) return true;
    int ones = 0;
    long long edges = 0;
    for (int v : verts) {
        int d = 0;
        for (int u : g.adj[v])
            if (mask >> u & 1u) ++d;
        if (d == 0 || d > 2) return false;
        if (d == 1) ++ones;
        edges += d;
    }
    if (ones != 2 || edges != 2 * (static_cast<long long>(verts.size()) - 1))
        return false;
    // degree profile of a path or a cycle; rule out disconnected unions
    std::vector<int> stack{verts[0]};
    unsigned seen = 1u << verts[0];
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.adj[v])
            if ((mask >> u & 1u) && !(seen >> u & 1u)) {
                seen |= 1u << u;
                stack.push_back(u);
            }
    }
    return seen == mask;
}

// Longest induced path size by subset enumeration. Usable up to ~16 vertices.
inline int brute_lip(const indpath::Graph& g) {
    int best = 0;
    for (unsigned mask = 1; mask < (1u << g.n); ++mask) {
        int pop = std::popcount(mask);
        if (pop <= best) continue;
        if (subset_induces_path(g, mask)) best = pop;
    }
    return best;
}

// Longest (not necessarily induced) path size by exhaustive DFS. ~10 vertices.
inline int brute_longest_path(const indpath::Graph& g) {
    int best = 0;
    std::vector<int> order;
    auto dfs = [&](auto&& self, int v, unsigned used) -> void {
        best = std::max(best, static_cast<int>(order.size()));
        for (int u : g.adj[v])
            if (!(used >> u & 1u)) {
                order.push_back(u);
                self(self, u, used | 1u << u);
                order.pop_back();
            }
    };
    for (int s = 0; s < g.n; ++s) {
        order = {s};
        dfs(dfs, s, 1u << s);
    }
    return best;
}

// K4-minor test by enumerating four disjoint connected branch sets that are
// pairwise joined by an edge. Exponential; fine up to ~9 vertices.
inline bool connected_in(const indpath::Graph& g, unsigned mask) {
    if (mask == 0) return false;
    int start = std::countr_zero(mask);
    std::vector<int> stack{start};
    unsigned seen = 1u << start;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.adj[v])
            if ((mask >> u & 1u) && !(seen >> u & 1u)) {
                seen |= 1u << u;
                stack.push_back(u);
            }
    }
    return seen == mask;
}

inline bool masks_joined(const indpath::Graph& g, unsigned a, unsigned b) {
    for (int v = 0; v < g.n; ++v)
        if (a >> v & 1u)
            for (int u : g.adj[v])
                if (b >> u & 1u) return true;
    return false;
}

inline bool brute_has_k4_minor(const indpath::Graph& g) {
    const int n = g.n;
    std::vector<unsigned> assign(n, 0);
    // each vertex gets a color in {unused,0,1,2,3}
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= 5;
    for (long long code = 0; code < total; ++code) {
        long long c = code;
        unsigned part[4] = {0, 0, 0, 0};
        for (int v = 0; v < n; ++v) {
            int color = static_cast<int>(c % 5);
            c /= 5;
            if (color > 0) part[color - 1] |= 1u << v;
        }
        bool ok = true;
        for (int i = 0; i < 4 && ok; ++i)
            ok = part[i] != 0 && connected_in(g, part[i]);
        for (int i = 0; i < 4 && ok; ++i)
            for (int j = i + 1; j < 4 && ok; ++j)
                ok = masks_joined(g, part[i], part[j]);
        if (ok) return true;
    }
    return false;
}

// Articulation vertices found by deleting each vertex in turn.
inline std::vector<int> brute_cut_vertices(const indpath::Graph& g) {
    auto components = [&](unsigned alive) {
        int comps = 0;
        unsigned seen = 0;
        for (int s = 0; s < g.n; ++s) {
            if (!(alive >> s & 1u) || (seen >> s & 1u)) continue;
            ++comps;
            std::vector<int> stack{s};
            seen |= 1u << s;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int u : g.adj[v])
                    if ((alive >> u & 1u) && !(seen >> u & 1u)) {
                        seen |= 1u << u;
                        stack.push_back(u);
                    }
            }
        }
        return comps;
    };
    unsigned all = (g.n == 32 ? ~0u : (1u << g.n) - 1u);
    int base = components(all);
    std::vector<int> cuts;
    for (int v = 0; v < g.n; ++v)
        if (components(all & ~(1u << v)) > base) cuts.push_back(v);
    return cuts;
}

// Maximum clique size by subset enumeration.
inline int brute_omega(const indpath::Graph& g) {
    int best = 0;
    for (unsigned mask = 1; mask < (1u << g.n); ++mask) {
        int pop = std::popcount(mask);
        if (pop <= best) continue;
        bool clique = true;
        for (int v = 0; v < g.n && clique; ++v)
            if (mask >> v & 1u)
                for (int u = v + 1; u < g.n && clique; ++u)
                    if ((mask >> u & 1u) && !g.has_edge(v, u)) clique = false;
        if (clique) best = pop;
    }
    return best;
}

// Longest path between any two vertices of a tree via all-pairs BFS.
inline int brute_tree_diameter_size(const indpath::Graph& g) {
    int best = 0;
    for (int s = 0; s < g.n; ++s) {
        auto d = indpath::bfs_dist(g, s);
        for (int v = 0; v < g.n; ++v) best = std::max(best, d[v] + 1);
    }
    return best;
}

}  // namespace testref
