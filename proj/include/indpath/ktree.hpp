#pragma once

// k-tree machinery: recognition by simplicial peeling, the labeled clique
// tree, witness-protecting pruning, and a sliding-clique walk that turns a
// long path of the clique tree into a long induced path of the graph.

#include <indpath/graph.hpp>

#include <algorithm>
#include <cmath>
#include <iterator>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace indpath {

struct KtreePeel {
    int k = 0;
    std::vector<int> order;                       // removal order
    std::vector<std::vector<int>> parent_clique;  // alive neighborhood at removal, sorted
    std::vector<int> basis;                       // what remains, sorted
};

namespace detail {

struct PeelState {
    std::vector<char> alive;
    int alive_count = 0;
    std::vector<int> order;
    std::vector<std::vector<int>> nbrs;
};

// Repeatedly remove the lowest-id unprotected vertex whose alive neighborhood
// is a k-clique. A vertex that fails the clique check at degree k is dropped
// for good: its neighborhood cannot change before its degree does, and
// degrees only decrease.
inline PeelState peel_k_simplicial(const Graph& g, int k, const std::vector<char>& protect) {
    PeelState st;
    st.alive.assign(static_cast<size_t>(g.n), 1);
    st.alive_count = g.n;
    std::vector<int> deg(static_cast<size_t>(g.n));
    std::set<int> cand;
    for (int v = 0; v < g.n; ++v) {
        deg[static_cast<size_t>(v)] = g.degree(v);
        if (!protect[static_cast<size_t>(v)] && deg[static_cast<size_t>(v)] == k) cand.insert(v);
    }
    std::vector<int> nb;
    while (!cand.empty()) {
        int v = *cand.begin();
        cand.erase(cand.begin());
        nb.clear();
        for (int u : g.adj[static_cast<size_t>(v)])
            if (st.alive[static_cast<size_t>(u)]) nb.push_back(u);
        if (static_cast<int>(nb.size()) != k) throw std::logic_error("peel: stale candidate");
        if (!is_clique(g, nb)) continue;
        st.alive[static_cast<size_t>(v)] = 0;
        --st.alive_count;
        for (int u : nb) {
            int& du = deg[static_cast<size_t>(u)];
            --du;
            if (du == k - 1) cand.erase(u);
            else if (du == k && !protect[static_cast<size_t>(u)]) cand.insert(u);
        }
        st.order.push_back(v);
        st.nbrs.push_back(nb);
    }
    return st;
}

}  // namespace detail

// Recognize g as a k-tree (in the wide sense: the k-clique itself counts).
// With requested_basis, the peel protects exactly those vertices, certifying a
// construction that starts from that clique.
inline Result<KtreePeel> recognize_ktree(const Graph& g, int k,
                                         const std::vector<int>* requested_basis = nullptr) {
    if (k < 1) throw std::invalid_argument("recognize_ktree: want k >= 1");
    if (g.n < k) return Result<KtreePeel>::absent("fewer than k vertices");
    std::vector<char> protect(static_cast<size_t>(g.n), 0);
    if (requested_basis) {
        std::vector<int> b = *requested_basis;
        std::sort(b.begin(), b.end());
        if (static_cast<int>(b.size()) != k ||
            std::adjacent_find(b.begin(), b.end()) != b.end() || b.front() < 0 ||
            b.back() >= g.n || !is_clique(g, b))
            return Result<KtreePeel>::absent("requested basis is not a k-clique");
        for (int v : b) protect[static_cast<size_t>(v)] = 1;
    }
    auto st = detail::peel_k_simplicial(g, k, protect);
    if (st.alive_count != k)
        return Result<KtreePeel>::absent("peeling stuck with " +
                                         std::to_string(st.alive_count) + " vertices left");
    KtreePeel out;
    out.k = k;
    out.order = std::move(st.order);
    out.parent_clique = std::move(st.nbrs);
    for (int v = 0; v < g.n; ++v)
        if (st.alive[static_cast<size_t>(v)]) out.basis.push_back(v);
    if (!is_clique(g, out.basis))
        return Result<KtreePeel>::absent("residual vertices do not form a clique");
    return Result<KtreePeel>::found(std::move(out));
}

// Rooted tree over the construction: node 0 is the basis, node i+1 the i-th
// vertex added. Each non-root node carries its attach clique and the k
// k-cliques through its vertex; every k-clique of g lands in exactly one label.
struct CliqueTree {
    int k = 0;
    Graph tree{0};
    std::vector<int> parent;                          // -1 at the root
    std::vector<int> vertex_of_node;                  // -1 at the root
    std::vector<int> node_of_vertex;                  // -1 for basis vertices
    std::vector<std::vector<int>> attach;             // empty at the root
    std::vector<std::vector<std::vector<int>>> labels;
};

inline CliqueTree build_clique_tree(const Graph& g, const KtreePeel& peel) {
    int k = peel.k;
    int added = static_cast<int>(peel.order.size());
    CliqueTree t;
    t.k = k;
    t.tree = Graph(added + 1);
    t.parent.assign(static_cast<size_t>(added) + 1, -1);
    t.vertex_of_node.assign(static_cast<size_t>(added) + 1, -1);
    t.node_of_vertex.assign(static_cast<size_t>(g.n), -1);
    t.attach.resize(static_cast<size_t>(added) + 1);
    t.labels.resize(static_cast<size_t>(added) + 1);

    std::map<std::vector<int>, int> owner;
    t.labels[0] = {peel.basis};
    owner[peel.basis] = 0;
    for (int i = 0; i < added; ++i) {
        int node = i + 1;
        int x = peel.order[static_cast<size_t>(added - 1 - i)];
        const std::vector<int>& c = peel.parent_clique[static_cast<size_t>(added - 1 - i)];
        auto it = owner.find(c);
        if (it == owner.end()) throw std::logic_error("clique tree: attach clique unregistered");
        t.parent[static_cast<size_t>(node)] = it->second;
        t.tree.add_edge(it->second, node);
        t.vertex_of_node[static_cast<size_t>(node)] = x;
        t.node_of_vertex[static_cast<size_t>(x)] = node;
        t.attach[static_cast<size_t>(node)] = c;
        for (int drop = 0; drop < k; ++drop) {
            std::vector<int> q;
            q.reserve(static_cast<size_t>(k));
            for (int j = 0; j < k; ++j)
                if (j != drop) q.push_back(c[static_cast<size_t>(j)]);
            q.push_back(x);
            std::sort(q.begin(), q.end());
            if (!owner.emplace(q, node).second)
                throw std::logic_error("clique tree: clique registered twice");
            t.labels[static_cast<size_t>(node)].push_back(std::move(q));
        }
    }
    return t;
}

// Remove k-simplicial vertices outside the kept set until none remain.
inline Subgraph prune_to_minimal(const Graph& g, int k, const std::vector<char>& keep) {
    auto st = detail::peel_k_simplicial(g, k, keep);
    std::vector<int> alive_list;
    for (int v = 0; v < g.n; ++v)
        if (st.alive[static_cast<size_t>(v)]) alive_list.push_back(v);
    return induced_subgraph(g, alive_list);
}

struct SlideStep {
    int path_index;
    int replaced;  // previous head of that path
    int appended;
};

struct SlidingResult {
    std::vector<std::vector<int>> cliques;  // running clique per step, sorted
    std::vector<std::vector<int>> paths;    // k vertex-disjoint induced paths
    std::vector<SlideStep> steps;
};

// Walk a path of the clique tree while maintaining k vertex-disjoint induced
// paths whose heads always form the running k-clique. Climbing retires the
// node's own vertex; descending realigns inside the current label (at most
// once, at the turn), then introduces the child's vertex. The last node's
// vertex extends whichever path is currently longest.
inline SlidingResult slide_along_tree_path(const Graph& g, const CliqueTree& t,
                                           const std::vector<int>& tree_path) {
    if (tree_path.empty()) throw std::invalid_argument("slide: empty tree path");
    int k = t.k;
    size_t len = tree_path.size();
    for (size_t i = 0; i + 1 < len; ++i) {
        int a = tree_path[i], b = tree_path[i + 1];
        if (t.parent[static_cast<size_t>(a)] != b && t.parent[static_cast<size_t>(b)] != a)
            throw std::invalid_argument("slide: not a tree path");
    }

    SlidingResult res;
    std::vector<int> cur;
    if (len >= 2 && t.parent[static_cast<size_t>(tree_path[1])] == tree_path[0])
        cur = t.attach[static_cast<size_t>(tree_path[1])];
    else
        cur = t.labels[static_cast<size_t>(tree_path[0])][0];

    std::vector<char> used(static_cast<size_t>(g.n), 0);
    std::vector<int> head_path(static_cast<size_t>(g.n), -1);
    res.paths.assign(static_cast<size_t>(k), {});
    for (int j = 0; j < k; ++j) {
        int v = cur[static_cast<size_t>(j)];
        res.paths[static_cast<size_t>(j)].push_back(v);
        used[static_cast<size_t>(v)] = 1;
        head_path[static_cast<size_t>(v)] = j;
    }
    res.cliques.push_back(cur);

    auto in_label = [&](int node, const std::vector<int>& q) {
        for (const auto& c : t.labels[static_cast<size_t>(node)])
            if (c == q) return true;
        return false;
    };
    if (!in_label(tree_path[0], cur))
        throw std::logic_error("slide: start clique outside the first label");

    auto extend = [&](int j, int app) {
        auto& pj = res.paths[static_cast<size_t>(j)];
        for (int u : cur)
            if (!g.has_edge(app, u))
                throw std::logic_error("slide: new vertex must see the whole clique");
        for (size_t q = 0; q + 1 < pj.size(); ++q)
            if (g.has_edge(app, pj[q])) throw std::logic_error("slide: chord created");
        if (used[static_cast<size_t>(app)])
            throw std::logic_error("slide: vertex appended twice");
        int rep = pj.back();
        pj.push_back(app);
        used[static_cast<size_t>(app)] = 1;
        head_path[static_cast<size_t>(rep)] = -1;
        head_path[static_cast<size_t>(app)] = j;
        res.steps.push_back({j, rep, app});
    };

    auto slide_to = [&](const std::vector<int>& nxt) {
        std::vector<int> leave, enter;
        std::set_difference(cur.begin(), cur.end(), nxt.begin(), nxt.end(),
                            std::back_inserter(leave));
        std::set_difference(nxt.begin(), nxt.end(), cur.begin(), cur.end(),
                            std::back_inserter(enter));
        if (leave.size() != 1 || enter.size() != 1)
            throw std::logic_error("slide: step must exchange exactly one vertex");
        if (!is_clique(g, nxt)) throw std::logic_error("slide: target is not a clique");
        int j = head_path[static_cast<size_t>(leave[0])];
        if (j < 0) throw std::logic_error("slide: replaced vertex is not a head");
        extend(j, enter[0]);
        cur = nxt;
        res.cliques.push_back(cur);
    };

    for (size_t i = 0; i + 1 < len; ++i) {
        int a = tree_path[i], b = tree_path[i + 1];
        if (t.parent[static_cast<size_t>(a)] == b) {
            slide_to(t.attach[static_cast<size_t>(a)]);
            if (res.steps.back().replaced != t.vertex_of_node[static_cast<size_t>(a)])
                throw std::logic_error("slide: climb must retire the node vertex");
        } else {
            if (cur != t.attach[static_cast<size_t>(b)])
                slide_to(t.attach[static_cast<size_t>(b)]);
            if (i + 2 == len) {
                int x = t.vertex_of_node[static_cast<size_t>(b)];
                int best = 0;
                for (int j = 1; j < k; ++j)
                    if (res.paths[static_cast<size_t>(j)].size() >
                        res.paths[static_cast<size_t>(best)].size())
                        best = j;
                int rep = res.paths[static_cast<size_t>(best)].back();
                extend(best, x);
                std::vector<int> nxt;
                for (int u : cur)
                    if (u != rep) nxt.push_back(u);
                nxt.push_back(x);
                std::sort(nxt.begin(), nxt.end());
                cur = std::move(nxt);
                res.cliques.push_back(cur);
            } else {
                slide_to(t.attach[static_cast<size_t>(tree_path[i + 2])]);
                if (res.steps.back().appended != t.vertex_of_node[static_cast<size_t>(b)])
                    throw std::logic_error("slide: descent must introduce the node vertex");
            }
        }
        if (!in_label(b, cur))
            throw std::logic_error("slide: running clique left the node label");
    }

    for (size_t a = 0; a + 1 < res.cliques.size(); ++a) {
        std::vector<int> common;
        std::set_intersection(res.cliques[a].begin(), res.cliques[a].end(),
                              res.cliques[a + 1].begin(), res.cliques[a + 1].end(),
                              std::back_inserter(common));
        if (static_cast<int>(common.size()) != k - 1)
            throw std::logic_error("slide: consecutive cliques must share k-1 vertices");
    }
    return res;
}

struct KtreeExtraction {
    PathWitness path;        // induced, verified against the input graph
    double bound = 0.0;      // log2(n-k-1) / (k log2 k) with n the witness size
    int tree_path_nodes = 0;
};

// Certified extraction: given a k-tree and a plain path witness with n
// vertices, produce an induced path of size at least log2(n-k-1)/(k log2 k).
inline KtreeExtraction extract_ktree_path(const Graph& g, const PathWitness& p, int k) {
    if (k < 2) throw std::invalid_argument("extract_ktree_path: want k >= 2");
    PathWitness plain = p;
    plain.induced = false;
    auto pv = verify_path_witness(g, plain);
    if (!pv.ok) throw std::invalid_argument("extract_ktree_path: bad witness: " + pv.reason);
    auto rec = recognize_ktree(g, k);
    if (!rec) throw std::invalid_argument("extract_ktree_path: not a k-tree: " + rec.reason);

    int n = plain.size();
    double logk = std::log2(static_cast<double>(k));
    double bound =
        (n > k + 2) ? std::log2(static_cast<double>(n - k - 1)) / (k * logk) : 0.0;

    auto finish = [&](PathWitness w, int ell) {
        auto rv = verify_path_witness(g, w);
        if (!rv.ok)
            throw std::logic_error("extract_ktree_path: result failed verification: " + rv.reason);
        if (static_cast<double>(w.size()) < bound - 1e-9)
            throw std::logic_error("extract_ktree_path: certified bound violated");
        return KtreeExtraction{std::move(w), bound, ell};
    };

    if (n < k + 3) return finish(PathWitness{{0, g.adj[0][0]}, true}, 0);

    std::vector<char> keep(static_cast<size_t>(g.n), 0);
    for (int v : plain.vertices) keep[static_cast<size_t>(v)] = 1;
    Subgraph sub = prune_to_minimal(g, k, keep);

    auto rec2 = recognize_ktree(sub.graph, k);
    if (!rec2) throw std::logic_error("extract_ktree_path: pruning broke the k-tree: " + rec2.reason);
    CliqueTree t = build_clique_tree(sub.graph, *rec2);

    for (int node = 0; node < t.tree.n; ++node) {
        int cap = (node == 0) ? k + 1 : k * k + 1;
        if (t.tree.degree(node) > cap)
            throw std::logic_error("extract_ktree_path: label tree degree bound violated");
    }

    PathWitness tp = tree_longest_path(t.tree);
    int ell = tp.size();
    if (static_cast<double>(ell) < std::log2(static_cast<double>(n - k - 1)) / logk - 1e-9)
        throw std::logic_error("extract_ktree_path: tree path shorter than guaranteed");

    if (ell == 1) {
        const auto& c = t.labels[static_cast<size_t>(tp.vertices[0])][0];
        return finish(PathWitness{{sub.to_host[static_cast<size_t>(c[0])],
                                   sub.to_host[static_cast<size_t>(c[1])]},
                                  true},
                      ell);
    }
    SlidingResult slide = slide_along_tree_path(sub.graph, t, tp.vertices);
    int best = 0;
    for (int j = 1; j < k; ++j)
        if (slide.paths[static_cast<size_t>(j)].size() >
            slide.paths[static_cast<size_t>(best)].size())
            best = j;
    return finish(PathWitness{sub.lift(slide.paths[static_cast<size_t>(best)]), true}, ell);
}

}  // namespace indpath
