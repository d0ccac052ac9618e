#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "usv/families.hpp"
#include "usv/fixtures.hpp"

using namespace usv;
using usv::testing::random_free_layout;

TEST_CASE("graph_isomorphic on small families") {
    Graph c4a = make_cycle(4);
    Graph c4b;
    c4b.add_edge(10, 20);
    c4b.add_edge(20, 30);
    c4b.add_edge(30, 40);
    c4b.add_edge(40, 10);
    CHECK(graph_isomorphic(c4a, c4b));
    CHECK_FALSE(graph_isomorphic(make_cycle(4), make_path(4)));
    CHECK_FALSE(graph_isomorphic(make_cycle(6), make_biclique(3, 3)));
    CHECK(graph_isomorphic(make_cycle(4), make_biclique(2, 2)));
    CHECK(graph_isomorphic(make_clique(5), make_clique(5)));
}

TEST_CASE("graph_isomorphic distinguishes same-degree-sequence graphs") {
    // C6 vs two triangles: both 2-regular on six vertices.
    Graph two_triangles;
    two_triangles.add_edge(0, 1);
    two_triangles.add_edge(1, 2);
    two_triangles.add_edge(2, 0);
    two_triangles.add_edge(3, 4);
    two_triangles.add_edge(4, 5);
    two_triangles.add_edge(5, 3);
    CHECK_FALSE(graph_isomorphic(make_cycle(6), two_triangles));
}

TEST_CASE("gn family counts") {
    Graph g3 = make_gn(3);
    CHECK(g3.n() == 6);
    CHECK(g3.m() == 7);
    Graph g4 = make_gn(4);
    CHECK(g4.n() == 8);   // 2n vertices
    CHECK(g4.m() == 10);  // 3(n-2) + 4
    CHECK(g4.max_degree() <= 4);
    CHECK_THROWS_AS(make_gn(2), std::invalid_argument);
}

TEST_CASE("random trees respect the degree bound") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Graph t = make_random_tree(12, 4, seed);
        CHECK(graph_is_tree(t));
        CHECK(t.max_degree() <= 4);
    }
}

TEST_CASE("v_isomorphic: mirror and rotation images") {
    std::mt19937_64 rng(21);
    for (int iter = 0; iter < 25; ++iter) {
        Layout l = random_free_layout(5, rng);
        CHECK(v_isomorphic(l, l));
        CHECK(v_isomorphic(l, mirror_x(l)));
        CHECK(v_isomorphic(l, rotate_ccw(l)));
        CHECK(v_isomorphic(l, translate(l, Rat(3, 7), Rat(-2))));
        CHECK(v_isomorphic(mirror_x(l), l)); // symmetric
    }
}

TEST_CASE("v_isomorphic implies graph isomorphism") {
    std::mt19937_64 rng(22);
    for (int iter = 0; iter < 20; ++iter) {
        Layout a = random_free_layout(5, rng);
        Layout b = random_free_layout(5, rng);
        if (v_isomorphic(a, b))
            CHECK(graph_isomorphic(extract_graph(a), extract_graph(b)));
    }
}

TEST_CASE("the three K4 layouts are pairwise not V-isomorphic") {
    auto ls = fixtures::fig7_k4_class_layouts();
    REQUIRE(ls.size() == 3);
    for (auto& l : ls) {
        CHECK(validate_layout(l).ok());
        CHECK(graph_isomorphic(extract_graph(l), make_clique(4)));
    }
    CHECK_FALSE(v_isomorphic(ls[0], ls[1]));
    CHECK_FALSE(v_isomorphic(ls[0], ls[2]));
    CHECK_FALSE(v_isomorphic(ls[1], ls[2]));
}

TEST_CASE("necessary_conditions named witnesses") {
    auto k3 = necessary_conditions(make_clique(3), GraphClass::Usgv);
    CHECK_FALSE(k3.pass);
    CHECK(k3.reason.find("share a neighbor") != std::string::npos);

    auto k15 = necessary_conditions(make_biclique(1, 5), GraphClass::Usgv);
    CHECK_FALSE(k15.pass);
    CHECK(k15.reason.find("degree") != std::string::npos);

    auto k23 = necessary_conditions(make_biclique(2, 3), GraphClass::Usgv);
    CHECK_FALSE(k23.pass); // shares three neighbors

    auto k17 = necessary_conditions(make_biclique(1, 7), GraphClass::Usv);
    CHECK_FALSE(k17.pass);
    CHECK(k17.reason.find("no cycle") != std::string::npos);

    CHECK(necessary_conditions(make_cycle(8), GraphClass::Usgv).pass);
    CHECK(necessary_conditions(make_cycle(8), GraphClass::Usv).pass);
    // A degree-7 vertex on a cycle passes the usv screen.
    Graph wheelish = make_cycle(7);
    for (int i = 0; i < 7; ++i) wheelish.add_edge(7, i);
    CHECK(necessary_conditions(wheelish, GraphClass::Usv).pass);
}

TEST_CASE("classify: closed-form characterisation rules") {
    auto y = ClassifyAnswer::Yes;
    auto n = ClassifyAnswer::No;
    auto u = ClassifyAnswer::Unknown;

    CHECK(classify(make_cycle(3), GraphClass::Usgv).answer == n);
    CHECK(classify(make_cycle(3), GraphClass::Usv).answer == y);
    CHECK(classify(make_cycle(4), GraphClass::Usgv).answer == y);
    CHECK(classify(make_cycle(47), GraphClass::Usgv).answer == y);

    CHECK(classify(make_clique(2), GraphClass::Usgv).answer == y);
    CHECK(classify(make_clique(3), GraphClass::Usgv).answer == n);
    CHECK(classify(make_clique(4), GraphClass::Usv).answer == y);
    CHECK(classify(make_clique(5), GraphClass::Usv).answer == n);

    CHECK(classify(make_biclique(1, 4), GraphClass::Usgv).answer == y);
    CHECK(classify(make_biclique(1, 5), GraphClass::Usgv).answer == n);
    CHECK(classify(make_biclique(2, 2), GraphClass::Usgv).answer == y);
    CHECK(classify(make_biclique(2, 3), GraphClass::Usgv).answer == n);
    CHECK(classify(make_biclique(2, 6), GraphClass::Usv).answer == y);
    CHECK(classify(make_biclique(2, 7), GraphClass::Usv).answer == n);
    CHECK(classify(make_biclique(3, 4), GraphClass::Usv).answer == y);
    CHECK(classify(make_biclique(3, 5), GraphClass::Usv).answer == n);
    CHECK(classify(make_biclique(1, 7), GraphClass::Usv).answer == n);

    CHECK(classify(make_random_tree(9, 4, 1), GraphClass::Usgv).answer == y);
    // K_{1,5} is a tree with a degree-5 vertex; K_{1,6} falls to the
    // biclique rule (i <= 2, j <= 6) before the tree gap applies.
    CHECK(classify(make_biclique(1, 5), GraphClass::Usv).answer == y);
    CHECK(classify(make_biclique(1, 6), GraphClass::Usv).answer == y);
    CHECK(classify(fixtures::fig5a_graph(), GraphClass::Usv).answer == u);
    CHECK(classify(make_biclique(1, 7), GraphClass::Usv).answer == n);

    // Rules report their names.
    CHECK(classify(make_cycle(5), GraphClass::Usgv).rule.find("cycle") != std::string::npos);
    CHECK(classify(fixtures::fig1a_graph(), GraphClass::Usgv).answer == u);
}
