#include <catch2/catch_amalgamated.hpp>

#include <indpath/extremal.hpp>
#include <indpath/graph.hpp>
#include <indpath/oracle.hpp>

#include "helpers.hpp"

using namespace indpath;

TEST_CASE("doubling family sizes and optima") {
    // n = 3*2^i, m = 3(2^{i+1}-1), longest induced path exactly 2(i+1)
    const long long want_n[] = {3, 6, 12, 24, 48};
    const long long want_m[] = {3, 9, 21, 45, 93};
    for (int i = 0; i <= 4; ++i) {
        auto f = gen_outerplanar_doubling(i);
        CHECK(f.graph.n == want_n[i]);
        CHECK(f.graph.edge_count() == want_m[i]);
        REQUIRE(f.ham.has_value());
        CHECK(f.ham->vertices.size() == static_cast<size_t>(f.graph.n));
        CHECK(verify_path_witness(f.graph, *f.ham).ok);
        CHECK(f.graph.has_edge(f.ham->vertices.front(), f.ham->vertices.back()));
        CHECK(f.params == std::vector<long long>{i});
        if (i <= 3) {
            auto r = longest_induced_path_exact(f.graph);
            REQUIRE(r.optimal);
            CHECK(r.best.size() == 2 * (i + 1));
            CHECK(f.predicted_lip == 2.0 * (i + 1));
        }
    }
    CHECK_THROWS_AS(gen_outerplanar_doubling(-1), std::invalid_argument);
    CHECK_THROWS_AS(gen_outerplanar_doubling(21), std::invalid_argument);
}

TEST_CASE("doubling generation is deterministic") {
    auto a = gen_outerplanar_doubling(3);
    auto b = gen_outerplanar_doubling(3);
    CHECK(format_graph(a.graph) == format_graph(b.graph));
    CHECK(a.ham->vertices == b.ham->vertices);
}

TEST_CASE("universal extension keeps the doubling optimum") {
    auto f = gen_ktree_universal(4, 1);
    CHECK(f.graph.n == 8);
    // two universal vertices see everything
    for (int x = 6; x < 8; ++x) CHECK(f.graph.degree(x) == 7);
    REQUIRE(f.ham.has_value());
    CHECK(verify_path_witness(f.graph, *f.ham).ok);
    auto r = longest_induced_path_exact(f.graph);
    REQUIRE(r.optimal);
    CHECK(r.best.size() == 4);
    CHECK(r.best.size() == testref::brute_lip(f.graph));

    // k = 2 adds nothing and reduces to the doubling graph
    auto base = gen_outerplanar_doubling(2);
    auto same = gen_ktree_universal(2, 2);
    CHECK(format_graph(base.graph) == format_graph(same.graph));

    // i = 0 with universals is a clique
    auto k5 = gen_ktree_universal(4, 0);
    CHECK(k5.graph.n == 5);
    CHECK(k5.graph.edge_count() == 10);
    CHECK(longest_induced_path_exact(k5.graph).best.size() == 2);

    CHECK_THROWS_AS(gen_ktree_universal(1, 2), std::invalid_argument);
}

TEST_CASE("stacked triangulation sizes and optima") {
    const int want_n[] = {3, 4, 7, 16};
    // predicted_lip carries the classical i+1 size formula; exhaustive search
    // shows the real optimum outgrows it from i = 2 on (4 resp. 6 below).
    const int measured[] = {2, 2, 4, 6};
    for (int i = 0; i <= 3; ++i) {
        auto f = gen_stacked_triangulation(i);
        CHECK(f.graph.n == want_n[i]);
        CHECK(f.graph.edge_count() == 3LL * (f.graph.n - 2));
        CHECK_FALSE(f.ham.has_value());
        auto r = longest_induced_path_exact(f.graph);
        REQUIRE(r.optimal);
        CHECK(r.best.size() == measured[i]);
        if (f.graph.n <= 16) CHECK(r.best.size() == testref::brute_lip(f.graph));
        CHECK(f.predicted_lip == static_cast<double>(i == 0 ? 2 : i + 1));
    }
    CHECK_THROWS_AS(gen_stacked_triangulation(14), std::invalid_argument);
}

TEST_CASE("hub substitution family sizes and optima") {
    auto a = gen_planar_substitution(4, 1);
    CHECK(a.graph.n == 6);
    CHECK(a.graph.edge_count() == 12);
    CHECK(verify_path_witness(a.graph, *a.ham).ok);
    auto ra = longest_induced_path_exact(a.graph);
    REQUIRE(ra.optimal);
    CHECK(ra.best.size() == 4);

    auto b = gen_planar_substitution(4, 2);
    CHECK(b.graph.n == 18);
    CHECK(b.graph.edge_count() == 45);
    CHECK(b.graph.edge_count() <= 3LL * b.graph.n - 6);  // planar density
    CHECK(verify_path_witness(b.graph, *b.ham).ok);
    auto rb = longest_induced_path_exact(b.graph);
    REQUIRE(rb.optimal);
    // the advertised 2i+(k-2) size is only an upper bound here: level-1 hubs
    // are universal over their copies, capping the level-2 optimum at max(k, 5)
    CHECK(rb.best.size() == 5);
    CHECK(rb.best.size() <= b.predicted_lip.value());

    auto c = gen_planar_substitution(5, 1);
    CHECK(c.graph.n == 7);
    CHECK(longest_induced_path_exact(c.graph).best.size() == 5);

    CHECK_THROWS_AS(gen_planar_substitution(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(gen_planar_substitution(4, 0), std::invalid_argument);
    CHECK_THROWS_AS(gen_planar_substitution(3, 40), std::invalid_argument);
}

TEST_CASE("tower family stays chordal with the advertised clique number") {
    auto a = gen_chordal_tower(2, 1, 1);
    CHECK(a.graph.n == 8);
    CHECK(chordal_omega(a.graph).value() == 5);
    REQUIRE(a.ham.has_value());
    CHECK(verify_path_witness(a.graph, *a.ham).ok);
    auto ra = longest_induced_path_exact(a.graph);
    REQUIRE(ra.optimal);
    CHECK(ra.best.size() <= 5);  // 2*(log2 6 + 0) = 5.17
    CHECK(ra.best.size() == testref::brute_lip(a.graph));

    auto b = gen_chordal_tower(2, 2, 1);
    CHECK(b.graph.n == 50);
    CHECK(chordal_omega(b.graph).value() == 5);
    CHECK(verify_path_witness(b.graph, *b.ham).ok);
    auto rb = longest_induced_path_exact(b.graph);
    REQUIRE(rb.optimal);
    CHECK(rb.best.size() <= 7);  // 2*(log2 6 + 1) = 7.17

    auto c = gen_chordal_tower(3, 1, 0);
    CHECK(c.graph.n == 7);
    CHECK(chordal_omega(c.graph).value() == 7);

    CHECK_THROWS_AS(gen_chordal_tower(1, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(gen_chordal_tower(2, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(gen_chordal_tower(4, 3, 10), std::invalid_argument);
}
