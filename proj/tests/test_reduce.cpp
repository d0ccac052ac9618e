#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "usv/families.hpp"
#include "usv/recognize.hpp"
#include "usv/rectilinear.hpp"
#include "usv/io.hpp"
#include "usv/reduce.hpp"

using namespace usv;

namespace {

ThreePartitionInstance inst12() { return {12, {4, 4, 4}}; }
ThreePartitionInstance inst15() { return {15, {4, 5, 6, 4, 5, 6}}; }

} // namespace

TEST_CASE("instance validation") {
    CHECK_THROWS_AS(ThreePartitionInstance({12, {4, 4, 5}}).check(), std::invalid_argument);
    CHECK_THROWS_AS(ThreePartitionInstance({12, {4, 4}}).check(), std::invalid_argument);
    CHECK_THROWS_AS(ThreePartitionInstance({12, {3, 4, 5}}).check(), std::invalid_argument);
    CHECK_NOTHROW(inst12().check());
    CHECK_NOTHROW(inst15().check());
}

TEST_CASE("solve_3partition") {
    auto p1 = solve_3partition(inst12());
    REQUIRE(p1.has_value());
    CHECK(p1->size() == 1);
    auto p2 = solve_3partition(inst15());
    REQUIRE(p2.has_value());
    CHECK(p2->size() == 2);
    for (auto& tr : *p2)
        CHECK(inst15().items[tr[0]] + inst15().items[tr[1]] + inst15().items[tr[2]] == 15);
    // 4+4 can never reach 15 with one more item from {4,5,6}... build a
    // genuinely negative instance instead: sums match but no triple split.
    ThreePartitionInstance neg{8, {3, 3, 3, 3, 2, 2}};
    // items must lie in (2, 4): 3s and... 2 is out of range, so adjust:
    ThreePartitionInstance neg2{100, {26, 26, 26, 30, 46, 46}};
    CHECK(!solve_3partition(neg2).has_value());
    (void)neg;
}

TEST_CASE("reduce_3partition counts and structure") {
    Graph g = reduce_3partition(inst12());
    CHECK(g.n() == 56); // 32 frame + 24 ladder vertices
    // With a single compartment no v-vertex has a ladder link on both sides,
    // so the frame maximum degree is 3; two compartments reach 4.
    CHECK(g.max_degree() == 3);
    CHECK(necessary_conditions(g, GraphClass::Usgv).pass);

    Graph g2 = reduce_3partition(inst15());
    int m = 2, B = 15;
    CHECK((int)g2.n() == 2 * m * (B + 1) + 2 * m + 4 + 2 * 30);
    CHECK(g2.max_degree() == 4);
    CHECK(necessary_conditions(g2, GraphClass::Usgv).pass);

    CHECK_THROWS_AS(reduce_3partition({6, {2, 2, 2}}), std::invalid_argument);
}

TEST_CASE("frame layout is valid and deterministic") {
    Layout f = frame_layout_3partition(12, 1);
    CHECK(validate_layout(f).ok());
    // The frame-only layout shows the two long-range w-row visibilities on
    // top of E_f; they are what the item ladders later bridge.
    Graph got = extract_graph(f);
    Graph ef;
    Graph full = reduce_3partition(inst12());
    for (const auto& e : full.edges)
        if (got.verts.count(e.first) && got.verts.count(e.second)) ef.add_edge(e.first, e.second);
    int extra = 0;
    for (const auto& e : got.edges)
        if (!ef.has_edge(e.first, e.second)) ++extra;
    CHECK(extra == 2); // w_{1,k} sees w_{2,k} across the empty compartment
    for (const auto& e : ef.edges) CHECK(got.has_edge(e.first, e.second));
}

TEST_CASE("witness layout: box, validity, weak extraction") {
    auto inst = inst12();
    auto part = solve_3partition(inst);
    REQUIRE(part.has_value());
    Layout w = witness_layout_3partition(inst, *part);
    CHECK(validate_layout(w).ok());
    Rat maxx(0), maxy(0);
    for (auto& s : w.squares) {
        maxx = rat_max(maxx, s.x);
        maxy = rat_max(maxy, s.y);
    }
    int m = inst.m();
    CHECK(maxy == Rat(6));                                // height 7
    CHECK(maxx == Rat(2 * (m * 12 + m + 1) - 2));         // width 2(mB+m+1)-1
    // u_{1,0} at (0,0), v_{1,0} at (0,2).
    Graph g = reduce_3partition(inst);
    const Square* u10 = w.find(reduction_vertex(g, "u_1,0"));
    REQUIRE(u10 != nullptr);
    CHECK(u10->x == Rat(0));
    CHECK(u10->y == Rat(0));
    const Square* v10 = w.find(reduction_vertex(g, "v_1,0"));
    CHECK(v10->x == Rat(0));
    CHECK(v10->y == Rat(2));

    // The layout realizes every reduction edge, plus the forced bridges:
    // per compartment, B vertical ladder-over-rung visibilities and eight
    // row-4/row-6 contacts with the flanking w-stalks and between ladders.
    Graph got = extract_graph(w);
    for (const auto& e : g.edges) CHECK(got.has_edge(e.first, e.second));
    CHECK(got.m() - g.m() == (std::size_t)(m * (12 + 8)));

    // Strengthening the weak witness yields the reduction graph exactly.
    Layout strong = strengthen_weak_layout(w, g);
    CHECK(extract_graph(strong) == g);

    // No crossings among the frame-row visibilities.
    for (const auto& c : layout_crossings(w)) {
        (void)c;
        CHECK(false);
    }
}

TEST_CASE("witness layout rejects a wrong partition") {
    auto inst = inst15();
    std::vector<std::array<int, 3>> bad{{0, 1, 2}, {3, 4, 5}};
    if (inst.items[0] + inst.items[1] + inst.items[2] != inst.B)
        CHECK_THROWS_AS(witness_layout_3partition(inst, bad), std::invalid_argument);
}

TEST_CASE("rectilinear drawing of the strengthened witness") {
    auto inst = inst12();
    auto part = solve_3partition(inst);
    Layout strong = strengthen_weak_layout(witness_layout_3partition(inst, *part),
                                           reduce_3partition(inst));
    auto d = layout_to_drawing(strong);
    CHECK(drawing_valid(d).ok());
    CHECK(d.graph == reduce_3partition(inst));
}

TEST_CASE("edge deletion on the frame layout") {
    Layout f = frame_layout_3partition(2, 1);
    Graph before = extract_graph(f);
    Graph g = reduce_3partition({12, {4, 4, 4}});
    (void)g;
    // Delete the rung u_{1,0} - v_{1,0}: ids follow the frame numbering.
    Graph names = before;
    int u10 = -1, v10 = -1;
    // u_{1,0} sits at (0,0) and v_{1,0} at (0,2).
    for (const auto& s : f.squares) {
        if (s.x == Rat(0) && s.y == Rat(0)) u10 = s.id;
        if (s.x == Rat(0) && s.y == Rat(2)) v10 = s.id;
    }
    REQUIRE(u10 >= 0);
    REQUIRE(v10 >= 0);
    REQUIRE(before.has_edge(u10, v10));
    Layout out = delete_edge_shift(f, u10, v10);
    Graph expect = before;
    expect.remove_edge(u10, v10);
    CHECK(extract_graph(out) == expect);
    (void)names;
}

TEST_CASE("generators are byte-deterministic") {
    ThreePartitionInstance inst{12, {4, 4, 4}};
    CHECK(emit_graph(reduce_3partition(inst)) == emit_graph(reduce_3partition(inst)));
    auto p = solve_3partition(inst);
    CHECK(emit_layout(witness_layout_3partition(inst, *p)) ==
          emit_layout(witness_layout_3partition(inst, *p)));
}

TEST_CASE("compacted witness gives a 4 x (mB+m+1) rectilinear drawing") {
    for (ThreePartitionInstance inst :
         {ThreePartitionInstance{12, {4, 4, 4}}, ThreePartitionInstance{15, {4, 5, 6, 4, 5, 6}}}) {
        auto part = solve_3partition(inst);
        auto d = drawing_3partition(inst, *part);
        CHECK(drawing_valid(d).ok());
        CHECK(d.graph == reduce_3partition(inst));
        int maxx = 0, maxy = 0;
        for (auto& [v, p] : d.pos) {
            maxx = std::max(maxx, p.first);
            maxy = std::max(maxy, p.second);
        }
        CHECK(maxy + 1 == 4);
        CHECK(maxx + 1 == (int)(inst.m() * inst.B + inst.m() + 1));
    }
}
