#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "usv/fixtures.hpp"
#include "usv/geometry.hpp"

using namespace usv;
using usv::testing::random_free_layout;
using usv::testing::random_grid_layout;

namespace {

Layout row3() {
    Layout l;
    l.kind = LayoutKind::Grid;
    l.squares = {{0, Rat(0), Rat(0)}, {1, Rat(2), Rat(0)}, {2, Rat(4), Rat(0)}};
    return l;
}

} // namespace

TEST_CASE("rat arithmetic stays in lowest terms") {
    Rat a(2, 4);
    CHECK(a.num == 1);
    CHECK(a.den == 2);
    CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
    CHECK(Rat(-2, 4).str() == "-1/2");
    CHECK(Rat(3, -6) == Rat(-1, 2));
    CHECK(Rat(5, 1) > Rat(9, 2));
}

TEST_CASE("sees: two aligned squares with empty strip") {
    Layout l;
    l.kind = LayoutKind::Grid;
    l.squares = {{0, Rat(0), Rat(0)}, {1, Rat(2), Rat(0)}};
    CHECK(sees(l, 0, 1, Axis::Horizontal));
    CHECK_FALSE(sees(l, 1, 0, Axis::Horizontal)); // directed
    CHECK_FALSE(sees(l, 0, 1, Axis::Vertical));
}

TEST_CASE("sees: full blocker in the middle") {
    Layout l = row3();
    CHECK(sees(l, 0, 1, Axis::Horizontal));
    CHECK(sees(l, 1, 2, Axis::Horizontal));
    CHECK_FALSE(sees(l, 0, 2, Axis::Horizontal));
}

TEST_CASE("sees: partial blocker leaves a positive residual") {
    Layout l;
    l.squares = {{0, Rat(0), Rat(0)}, {1, Rat(3), Rat(0)}, {2, Rat(3, 2), Rat(1, 2)}};
    CHECK(sees(l, 0, 1, Axis::Horizontal));
    CHECK(visibility_oracle(l, 0, 1, Axis::Horizontal));
}

TEST_CASE("sees: measure-zero overlap is not a visibility") {
    Layout l;
    l.squares = {{0, Rat(0), Rat(0)}, {1, Rat(2), Rat(1)}};
    CHECK_FALSE(sees(l, 0, 1, Axis::Horizontal));
    CHECK_FALSE(sees(l, 1, 0, Axis::Horizontal));
    CHECK(extract_graph(l).m() == 0);
}

TEST_CASE("blockers whose projection touches the strip boundary") {
    // In a valid layout a square column-aligned with an endpoint can never
    // clip the overlap interval (disjointness pushes it out of range), so the
    // closed-strip rule must agree with the oracle there.
    Layout l;
    l.squares = {{0, Rat(0), Rat(0)}, {1, Rat(5, 2), Rat(1, 2)},
                 {2, Rat(5, 2), Rat(7, 4)}};
    CHECK(sees(l, 0, 1, Axis::Horizontal));
    CHECK(sees(l, 0, 1, Axis::Horizontal) == visibility_oracle(l, 0, 1, Axis::Horizontal));
    CHECK(sees(l, 2, 1, Axis::Vertical));
}

TEST_CASE("validate_layout reports touching and grid violations") {
    Layout l;
    l.kind = LayoutKind::Grid;
    l.squares = {{0, Rat(0), Rat(0)}, {1, Rat(1), Rat(0)}};
    CHECK_FALSE(validate_layout(l).ok());

    Layout corner;
    corner.kind = LayoutKind::Free;
    corner.squares = {{0, Rat(0), Rat(0)}, {1, Rat(1), Rat(1)}};
    CHECK_FALSE(validate_layout(corner).ok()); // corner touch is a violation

    Layout g;
    g.kind = LayoutKind::Grid;
    g.squares = {{0, Rat(1, 2), Rat(0)}};
    CHECK_FALSE(validate_layout(g).ok());

    Layout neg;
    neg.kind = LayoutKind::Grid;
    neg.squares = {{0, Rat(-1), Rat(0)}};
    CHECK_FALSE(validate_layout(neg).ok());

    Layout dup;
    dup.squares = {{3, Rat(0), Rat(0)}, {3, Rat(4), Rat(0)}};
    CHECK_FALSE(validate_layout(dup).ok());

    CHECK(validate_layout(row3()).ok());
}

TEST_CASE("visibility relation of the empty layout is empty") {
    Layout l;
    CHECK(visibility_relation(l).empty());
    CHECK(extract_graph(l).n() == 0);
}

TEST_CASE("single square extracts to K1") {
    Layout l;
    l.squares = {{7, Rat(0), Rat(0)}};
    Graph g = extract_graph(l);
    CHECK(g.n() == 1);
    CHECK(g.m() == 0);
    CHECK(g.verts.count(7) == 1);
}

TEST_CASE("relation is independent of square order and translation") {
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 30; ++iter) {
        Layout l = random_free_layout(6, rng);
        auto facts = visibility_relation(l);
        Layout shuffled = l;
        std::shuffle(shuffled.squares.begin(), shuffled.squares.end(), rng);
        CHECK(visibility_relation(shuffled) == facts);
        Layout moved = translate(l, Rat(7, 3), Rat(-5, 2));
        CHECK(visibility_relation(moved) == facts);
    }
}

TEST_CASE("directed horizontal facts are mutually exclusive") {
    std::mt19937_64 rng(12);
    for (int iter = 0; iter < 50; ++iter) {
        Layout l = random_free_layout(5, rng);
        for (const auto& a : l.squares)
            for (const auto& b : l.squares) {
                if (a.id == b.id) continue;
                bool both = sees(l, a.id, b.id, Axis::Horizontal) &&
                            sees(l, b.id, a.id, Axis::Horizontal);
                CHECK_FALSE(both);
            }
    }
}

TEST_CASE("oracle agrees with sees on random layouts") {
    std::mt19937_64 rng(13);
    for (int iter = 0; iter < 120; ++iter) {
        Layout l = iter % 2 ? random_free_layout(6, rng) : random_grid_layout(6, rng);
        for (const auto& a : l.squares)
            for (const auto& b : l.squares) {
                if (a.id == b.id) continue;
                for (Axis ax : {Axis::Horizontal, Axis::Vertical})
                    CHECK(sees(l, a.id, b.id, ax) == visibility_oracle(l, a.id, b.id, ax));
            }
    }
}

TEST_CASE("extracted grid graphs satisfy the degree and neighborhood limits") {
    std::mt19937_64 rng(14);
    for (int iter = 0; iter < 60; ++iter) {
        Graph g = extract_graph(random_grid_layout(8, rng));
        CHECK(g.max_degree() <= 4);
        IndexedGraph ig(g);
        for (std::size_t a = 0; a < ig.n(); ++a)
            for (std::size_t b = a + 1; b < ig.n(); ++b) {
                int common = 0;
                for (int w : ig.nbr[a]) common += ig.adj[b][w];
                CHECK(common <= 2);
                if (ig.adj[a][b]) CHECK(common == 0);
            }
    }
}

TEST_CASE("layout_crossings: C4 has none, a constructed plus has one") {
    Layout c4;
    c4.kind = LayoutKind::Grid;
    c4.squares = {{0, Rat(0), Rat(0)}, {1, Rat(2), Rat(0)}, {2, Rat(0), Rat(2)},
                  {3, Rat(2), Rat(2)}};
    CHECK(layout_crossings(c4).empty());

    Layout plus;
    plus.kind = LayoutKind::Grid;
    plus.squares = {{0, Rat(0), Rat(2)}, {1, Rat(4), Rat(2)}, {2, Rat(2), Rat(0)},
                    {3, Rat(2), Rat(4)}};
    auto cr = layout_crossings(plus);
    REQUIRE(cr.size() == 1);
    CHECK(cr[0].horizontal.from == 0);
    CHECK(cr[0].vertical.from == 3);

    Layout fr;
    fr.kind = LayoutKind::Free;
    fr.squares = {{0, Rat(0), Rat(0)}};
    CHECK_THROWS_AS(layout_crossings(fr), std::invalid_argument);
}

TEST_CASE("figure 1(b) layout has at least one crossing") {
    auto l = fixtures::fig1b_layout();
    CHECK(validate_layout(l).ok());
    CHECK(layout_crossings(l).size() >= 1);
}

TEST_CASE("delete_edge_shift on a vertical path edge") {
    Layout l;
    l.kind = LayoutKind::Grid;
    l.squares = {{0, Rat(0), Rat(0)}, {1, Rat(0), Rat(2)}, {2, Rat(0), Rat(4)}};
    Layout out = delete_edge_shift(l, 1, 2);
    Graph g = extract_graph(out);
    CHECK(g.m() == 1);
    CHECK(g.has_edge(0, 1));
}

TEST_CASE("delete_edge_shift removes exactly the chosen edge (random runs)") {
    std::mt19937_64 rng(15);
    int done = 0;
    while (done < 200) {
        Layout l = random_grid_layout(2 + (int)(rng() % 8), rng);
        Graph g = extract_graph(l);
        if (g.m() == 0) continue;
        auto it = g.edges.begin();
        std::advance(it, rng() % g.m());
        Layout out = delete_edge_shift(l, it->first, it->second);
        Graph expect = g;
        expect.remove_edge(it->first, it->second);
        CHECK(extract_graph(out) == expect);
        CHECK(validate_layout(out).ok());
        ++done;
    }
}

TEST_CASE("delete_vertex leaves exactly G - v (random runs)") {
    std::mt19937_64 rng(16);
    for (int iter = 0; iter < 200; ++iter) {
        Layout l = random_grid_layout(2 + (int)(rng() % 8), rng);
        Graph g = extract_graph(l);
        int v = (int)(rng() % l.squares.size());
        Layout out = delete_vertex(l, v);
        Graph expect = g;
        expect.remove_vertex(v);
        CHECK(extract_graph(out) == expect);
    }
}

TEST_CASE("delete_vertex on a 3-square row isolates the ends") {
    Layout out = delete_vertex(row3(), 1);
    Graph g = extract_graph(out);
    CHECK(g.n() == 2);
    CHECK(g.m() == 0);
}

TEST_CASE("delete_vertex on a single square gives the empty layout") {
    Layout l;
    l.kind = LayoutKind::Grid;
    l.squares = {{0, Rat(0), Rat(0)}};
    CHECK(delete_vertex(l, 0).squares.empty());
}

TEST_CASE("oracle agreement is exhaustive on tiny grid layouts") {
    // Every valid placement of three squares in a 5x5 box.
    const int side = 5;
    std::vector<std::pair<int, int>> cells;
    for (int a = 0; a < side * side; ++a) {
        for (int b = a + 1; b < side * side; ++b) {
            for (int c = b + 1; c < side * side; ++c) {
                int pts[3] = {a, b, c};
                Layout l;
                l.kind = LayoutKind::Grid;
                bool valid = true;
                for (int k = 0; k < 3 && valid; ++k) {
                    int x = pts[k] % side, y = pts[k] / side;
                    for (const auto& s : l.squares)
                        if (std::max(std::abs((int)s.x.num - x),
                                     std::abs((int)s.y.num - y)) <= 1)
                            valid = false;
                    l.squares.push_back({k, Rat(x), Rat(y)});
                }
                if (!valid) continue;
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j) {
                        if (i == j) continue;
                        for (Axis ax : {Axis::Horizontal, Axis::Vertical})
                            CHECK(sees(l, i, j, ax) == visibility_oracle(l, i, j, ax));
                    }
            }
        }
    }
    (void)cells;
}
