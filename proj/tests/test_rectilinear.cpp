#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "usv/rectilinear.hpp"

using namespace usv;
using usv::testing::random_grid_layout;

namespace {

RectilinearDrawing random_drawing(int n, std::mt19937_64& rng) {
    // Distinct grid points, then a random subset of the clear axis-aligned
    // pairs (no third vertex on the closed segment).
    RectilinearDrawing d;
    std::set<std::pair<int, int>> used;
    int box = n + 2;
    for (int v = 0; v < n; ++v) {
        while (true) {
            std::pair<int, int> p{(int)(rng() % (box + 1)), (int)(rng() % (box + 1))};
            if (used.insert(p).second) {
                d.graph.add_vertex(v);
                d.pos[v] = p;
                break;
            }
        }
    }
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            auto [ux, uy] = d.pos[u];
            auto [vx, vy] = d.pos[v];
            if (ux != vx && uy != vy) continue;
            bool clear = true;
            for (int w = 0; w < n && clear; ++w) {
                if (w == u || w == v) continue;
                auto [wx, wy] = d.pos[w];
                if (ux == vx && wx == ux && wy >= std::min(uy, vy) && wy <= std::max(uy, vy))
                    clear = false;
                if (uy == vy && wy == uy && wx >= std::min(ux, vx) && wx <= std::max(ux, vx))
                    clear = false;
            }
            if (clear && rng() % 2) d.graph.add_edge(u, v);
        }
    }
    return d;
}

} // namespace

TEST_CASE("drawing_valid basics") {
    RectilinearDrawing path;
    path.graph.add_edge(0, 1);
    path.graph.add_edge(1, 2);
    path.pos = {{0, {0, 0}}, {1, {1, 0}}, {2, {2, 0}}};
    CHECK(drawing_valid(path).ok());

    RectilinearDrawing skip;
    skip.graph.add_edge(0, 2);
    skip.graph.add_vertex(1);
    skip.pos = path.pos;
    CHECK_FALSE(drawing_valid(skip).ok()); // vertex 1 on the segment

    RectilinearDrawing diag;
    diag.graph.add_edge(0, 1);
    diag.pos = {{0, {0, 0}}, {1, {1, 1}}};
    CHECK_FALSE(drawing_valid(diag).ok());

    RectilinearDrawing clash;
    clash.graph.add_vertex(0);
    clash.graph.add_vertex(1);
    clash.pos = {{0, {0, 0}}, {1, {0, 0}}};
    CHECK_FALSE(drawing_valid(clash).ok());
}

TEST_CASE("layout_to_drawing mirrors the extracted graph") {
    std::mt19937_64 rng(31);
    for (int iter = 0; iter < 100; ++iter) {
        Layout l = random_grid_layout(2 + (int)(rng() % 7), rng);
        auto d = layout_to_drawing(l);
        CHECK(drawing_valid(d).ok());
        CHECK(d.graph == extract_graph(l));
    }
}

TEST_CASE("two-square row maps to a single edge drawing") {
    Layout l;
    l.kind = LayoutKind::Grid;
    l.squares = {{0, Rat(0), Rat(0)}, {1, Rat(2), Rat(0)}};
    auto d = layout_to_drawing(l);
    CHECK(d.graph.m() == 1);
    CHECK(d.pos[1] == std::pair<int, int>{2, 0});
}

TEST_CASE("drawing_to_weak_layout only gains edges") {
    RectilinearDrawing stacked;
    stacked.graph.add_vertex(0);
    stacked.graph.add_vertex(1);
    stacked.pos = {{0, {0, 0}}, {1, {0, 1}}};
    Layout weak = drawing_to_weak_layout(stacked);
    CHECK(validate_layout(weak).ok());
    Graph g = extract_graph(weak);
    CHECK(g.m() == 1); // an extra visibility appeared: supergraph, not equal

    Layout fixed = strengthen_weak_layout(weak, stacked.graph);
    CHECK(extract_graph(fixed) == stacked.graph);
}

TEST_CASE("path drawings stay exact under the scale-2 embedding") {
    RectilinearDrawing p;
    for (int i = 0; i < 5; ++i) {
        p.graph.add_vertex(i);
        p.pos[i] = {i, 0};
        if (i) p.graph.add_edge(i - 1, i);
    }
    Layout weak = drawing_to_weak_layout(p);
    CHECK(extract_graph(weak) == p.graph);
    CHECK(strengthen_weak_layout(weak, p.graph).squares.size() == 5);
}

TEST_CASE("weak embedding and strengthening round-trip (random drawings)") {
    std::mt19937_64 rng(32);
    for (int iter = 0; iter < 300; ++iter) {
        auto d = random_drawing(2 + (int)(rng() % 7), rng);
        REQUIRE(drawing_valid(d).ok());
        Layout weak = drawing_to_weak_layout(d);
        CHECK(validate_layout(weak).ok());
        Graph wg = extract_graph(weak);
        for (const auto& e : d.graph.edges) CHECK(wg.has_edge(e.first, e.second));
        Layout strong = strengthen_weak_layout(weak, d.graph);
        CHECK(extract_graph(strong) == d.graph);
        // Full circle back to a drawing with the same graph.
        auto d2 = layout_to_drawing(strong);
        CHECK(d2.graph == d.graph);
    }
}

TEST_CASE("strengthen rejects non-subgraph targets and keeps exact inputs") {
    Layout l;
    l.kind = LayoutKind::Grid;
    l.squares = {{0, Rat(0), Rat(0)}, {1, Rat(2), Rat(0)}};
    Graph target;
    target.add_edge(0, 1);
    Layout same = strengthen_weak_layout(l, target);
    CHECK(extract_graph(same) == target);

    Graph bigger = target;
    bigger.add_vertex(2);
    bigger.add_edge(1, 2);
    CHECK_THROWS_AS(strengthen_weak_layout(l, bigger), std::invalid_argument);
}
