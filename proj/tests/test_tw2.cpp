#include <catch2/catch_amalgamated.hpp>

#include <indpath/blocks.hpp>
#include <indpath/extremal.hpp>
#include <indpath/graph.hpp>
#include <indpath/ktree.hpp>
#include <indpath/oracle.hpp>
#include <indpath/tw2.hpp>

#include <random>
#include <set>
#include <utility>

#include "helpers.hpp"

using namespace indpath;

namespace {

Graph random_graph(int n, int percent, std::mt19937_64& rng) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<int>(rng() % 100) < percent) g.add_edge(u, v);
    return g;
}

// doubling instance with every non-boundary chord kept with probability 1/2;
// the boundary cycle survives, so the graph stays 2-connected and keeps its
// spanning path
std::pair<Graph, PathWitness> sparsified_doubling(int i, uint64_t seed) {
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
// first spanning-path vertex with the previous copy's last; returns the
// chained graph and the concatenated spanning path
std::pair<Graph, PathWitness> chain_with_ham(const Graph& donor, const std::vector<int>& ham,
                                             int copies) {
    REQUIRE(copies >= 1);
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

}  // namespace

TEST_CASE("completion agrees with the exact minor test on small graphs") {
    int accepted = 0, rejected = 0;
    for (uint64_t seed = 0; seed < 120; ++seed) {
        std::mt19937_64 rng(seed * 131 + 7);
        int n = 3 + static_cast<int>(seed % 7);
        int percent = 25 + 15 * static_cast<int>(seed % 3);
        Graph g = random_graph(n, percent, rng);
        if (!is_connected(g)) continue;
        auto r = recognize_and_complete_tw2(g);
        INFO("seed " << seed << " n " << n << " percent " << percent);
        CHECK(r.has_value() == !testref::brute_has_k4_minor(g));
        if (r.has_value()) {
            ++accepted;
            CHECK(recognize_ktree(r->completed, 2).has_value());
            CHECK(r->completed.edge_count() == 2LL * n - 3);
            for (auto [u, v] : g.edges()) CHECK(r->completed.has_edge(u, v));
            for (auto [u, v] : r->added_edges) {
                CHECK(r->completed.has_edge(u, v));
                CHECK_FALSE(g.has_edge(u, v));
            }
            CHECK(r->completed.edge_count() ==
                  g.edge_count() + static_cast<long long>(r->added_edges.size()));
        } else {
            ++rejected;
        }
    }
    CHECK(accepted >= 20);
    CHECK(rejected >= 20);
}

TEST_CASE("completion hand cases") {
    Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
    auto r = recognize_and_complete_tw2(p3);
    REQUIRE(r.has_value());
    CHECK(r->added_edges == std::vector<std::pair<int, int>>{{0, 2}});

    Graph tri = Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
    auto rt = recognize_and_complete_tw2(tri);
    REQUIRE(rt.has_value());
    CHECK(rt->added_edges.empty());

    // the hexagon reduces from vertex 0 upward, so the completion fans out
    // of vertex 5
    Graph c6 = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
    auto rc = recognize_and_complete_tw2(c6);
    REQUIRE(rc.has_value());
    CHECK(rc->added_edges == std::vector<std::pair<int, int>>{{1, 5}, {2, 5}, {3, 5}});

    Graph k23 = Graph::from_edges(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    CHECK(recognize_and_complete_tw2(k23).has_value());

    Graph k4 = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK_FALSE(recognize_and_complete_tw2(k4).has_value());

    Graph two(6);
    two.add_edge(0, 1);
    two.add_edge(1, 2);
    two.add_edge(0, 2);
    two.add_edge(3, 4);
    two.add_edge(4, 5);
    two.add_edge(3, 5);
    auto rd = recognize_and_complete_tw2(two);
    CHECK_FALSE(rd.has_value());
    CHECK(rd.reason == "not connected");

    CHECK_FALSE(recognize_and_complete_tw2(Graph(2)).has_value());
}

TEST_CASE("completion is deterministic") {
    auto [g, w] = sparsified_doubling(3, 11);
    auto a = recognize_and_complete_tw2(g);
    auto b = recognize_and_complete_tw2(g);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(a->completed.edges() == b->completed.edges());
    CHECK(a->added_edges == b->added_edges);
}

TEST_CASE("extraction certifies the doubling family") {
    for (int i = 1; i <= 5; ++i) {
        auto f = gen_outerplanar_doubling(i);
        PathWitness w = *f.ham;
        w.induced = false;
        auto e = extract_partial_2tree(f.graph, w);
        INFO("doubling " << i);
        REQUIRE(verify_path_witness(f.graph, e.path).ok);
        CHECK(e.bound == std::log2(static_cast<double>(f.graph.n - 3)) / 2.0);
        CHECK(static_cast<double>(e.path.size()) >= e.bound - 1e-9);
        auto again = extract_partial_2tree(f.graph, w);
        CHECK(again.path.vertices == e.path.vertices);
    }
}

TEST_CASE("extraction survives sparsified doubling graphs") {
    int ran = 0;
    for (int i = 1; i <= 4; ++i) {
        for (uint64_t seed = 0; seed < 15; ++seed) {
            auto [g, w] = sparsified_doubling(i, seed * 977 + static_cast<uint64_t>(i));
            REQUIRE(is_connected(g));
            REQUIRE(block_decomposition(g).block_count() == 1);
            auto e = extract_partial_2tree(g, w);
            INFO("doubling " << i << " seed " << seed);
            REQUIRE(verify_path_witness(g, e.path).ok);
            CHECK(static_cast<double>(e.path.size()) >= e.bound - 1e-9);
            if (g.n <= 14) CHECK(e.path.size() <= testref::brute_lip(g));
            ++ran;
        }
    }
    CHECK(ran == 60);
}

TEST_CASE("extraction on random 2-trees and near-2-trees") {
    int checked = 0;
    for (uint64_t seed = 0; seed < 40; ++seed) {
        int n = 5 + static_cast<int>(seed % 9);
        Graph g = Graph::from_edges(n, {});
        {
            std::mt19937_64 rng(seed * 419 + 3);
            // grow a random 2-tree, then drop one random non-boundary edge
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
            if (is_connected(h) && block_decomposition(h).block_count() == 1) g = h;
        }
        auto lp = longest_path_exact(g);
        if (!lp.optimal) continue;
        PathWitness w = lp.best;
        w.induced = false;
        auto e = extract_partial_2tree(g, w);
        INFO("seed " << seed << " n " << n);
        REQUIRE(verify_path_witness(g, e.path).ok);
        CHECK(static_cast<double>(e.path.size()) >= e.bound - 1e-9);
        CHECK(e.path.size() <= testref::brute_lip(g));
        ++checked;
    }
    CHECK(checked >= 35);
}

TEST_CASE("extraction base cases and rejections") {
    Graph one(1);
    auto e1 = extract_partial_2tree(one, PathWitness{{0}, false});
    CHECK(e1.path.vertices == std::vector<int>{0});
    CHECK(e1.bound == 0.0);

    Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    auto e4 = extract_partial_2tree(c4, PathWitness{{0, 1, 2, 3}, false});
    CHECK(e4.path.vertices == std::vector<int>{0, 1});
    CHECK(e4.bound == 0.0);

    Graph p5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    CHECK_THROWS_AS(extract_partial_2tree(p5, PathWitness{{0, 1, 2, 3, 4}, false}),
                    std::invalid_argument);

    Graph k5(5);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) k5.add_edge(u, v);
    CHECK_THROWS_AS(extract_partial_2tree(k5, PathWitness{{0, 1, 2, 3, 4}, false}),
                    std::invalid_argument);

    auto f = gen_outerplanar_doubling(2);
    CHECK_THROWS_AS(extract_partial_2tree(f.graph, PathWitness{{0, 0, 1}, false}),
                    std::invalid_argument);
}

TEST_CASE("composition digs into the longest run when blocks are few") {
    auto f = gen_outerplanar_doubling(3);
    auto [g, w] = chain_with_ham(f.graph, f.ham->vertices, 2);
    REQUIRE(g.n == 2 * f.graph.n - 1);
    auto e = extract_partial_2tree_connected(g, w);
    CHECK(e.walk_blocks == 2);
    CHECK_FALSE(e.chained);
    CHECK(e.bound == std::log2(static_cast<double>(f.graph.n - 3)) / 2.0);
    REQUIRE(verify_path_witness(g, e.path).ok);
    CHECK(static_cast<double>(e.path.size()) >= e.bound - 1e-9);

    // one block: composition reduces to the 2-connected extractor
    PathWitness hw = *f.ham;
    hw.induced = false;
    auto single = extract_partial_2tree_connected(f.graph, hw);
    CHECK(single.walk_blocks == 1);
    CHECK_FALSE(single.chained);
    CHECK(single.path.vertices == extract_partial_2tree(f.graph, hw).path.vertices);
}

TEST_CASE("composition threads cut vertices when blocks are many") {
    auto f = gen_outerplanar_doubling(1);
    auto [g, w] = chain_with_ham(f.graph, f.ham->vertices, 8);
    REQUIRE(g.n == 8 * (f.graph.n - 1) + 1);
    auto e = extract_partial_2tree_connected(g, w);
    CHECK(e.walk_blocks == 8);
    CHECK(e.chained);
    CHECK(e.path.size() >= 9);
    CHECK(e.bound == 0.5 * std::log2(static_cast<double>(w.size())));
    REQUIRE(verify_path_witness(g, e.path).ok);

    auto t = gen_outerplanar_doubling(0);
    auto [tg, tw] = chain_with_ham(t.graph, t.ham->vertices, 20);
    auto te = extract_partial_2tree_connected(tg, tw);
    CHECK(te.chained);
    CHECK(te.walk_blocks == 20);
    CHECK(te.path.size() >= 21);
}

TEST_CASE("composition is extractor-agnostic") {
    BlockExtractor toy;
    toy.alpha = 0.5;
    toy.beta = 1.0;
    toy.run = [](const Graph& h, const PathWitness&) { return lowest_edge(h); };
    toy.certified = [](int) { return 2.0; };

    Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    auto e = compose_over_blocks(c5, PathWitness{{0, 1, 2, 3, 4}, false}, toy);
    CHECK(e.walk_blocks == 1);
    CHECK_FALSE(e.chained);
    CHECK(e.path.size() == 2);
    CHECK(e.bound == 2.0);

    // two triangles sharing vertex 2: threshold sits below the block count
    Graph bow = Graph::from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    auto eb = compose_over_blocks(bow, PathWitness{{0, 1, 2, 3, 4}, false}, toy);
    CHECK(eb.walk_blocks == 2);
    CHECK(eb.chained);
    CHECK(eb.path.vertices == std::vector<int>{0, 2, 4});
}

TEST_CASE("composition base cases and rejections") {
    Graph one(1);
    auto e = extract_partial_2tree_connected(one, PathWitness{{0}, false});
    CHECK(e.path.vertices == std::vector<int>{0});
    CHECK(e.walk_blocks == 0);

    Graph two(6);
    two.add_edge(0, 1);
    two.add_edge(1, 2);
    two.add_edge(0, 2);
    two.add_edge(3, 4);
    two.add_edge(4, 5);
    two.add_edge(3, 5);
    CHECK_THROWS_AS(extract_partial_2tree_connected(two, PathWitness{{0, 1, 2}, false}),
                    std::invalid_argument);

    Graph tri = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK_THROWS_AS(extract_partial_2tree_connected(tri, PathWitness{{0, 2, 1, 0}, false}),
                    std::invalid_argument);
}

TEST_CASE("connected wrapper stays at or below the exact optimum") {
    int checked = 0;
    for (uint64_t seed = 0; seed < 12; ++seed) {
        auto [dg, dw] = sparsified_doubling(1, seed * 31 + 5);
        int copies = 2 + static_cast<int>(seed % 2);
        auto [g, w] = chain_with_ham(dg, dw.vertices, copies);
        if (g.n > 14) continue;
        auto e = extract_partial_2tree_connected(g, w);
        INFO("seed " << seed << " copies " << copies << " n " << g.n);
        REQUIRE(verify_path_witness(g, e.path).ok);
        CHECK(static_cast<double>(e.path.size()) >= e.bound - 1e-9);
        CHECK(e.path.size() <= testref::brute_lip(g));
        ++checked;
    }
    CHECK(checked >= 6);
}
