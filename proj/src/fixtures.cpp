#include "usv/fixtures.hpp"

namespace usv {
namespace fixtures {

namespace {

Layout grid_layout(std::initializer_list<Square> squares) {
    Layout l;
    l.kind = LayoutKind::Grid;
    l.squares = squares;
    return l;
}

Layout free_layout(std::initializer_list<Square> squares) {
    Layout l;
    l.kind = LayoutKind::Free;
    l.squares = squares;
    return l;
}

} // namespace

Graph fig1a_graph() {
    Graph g;
    for (auto [a, b] : {std::pair{7, 8}, {7, 6}, {8, 1}, {8, 4}, {1, 2},
                        {6, 2}, {6, 5}, {2, 3}, {3, 4}, {5, 4}})
        g.add_edge(a, b);
    return g;
}

Layout fig1b_layout() {
    return grid_layout({{7, Rat(0), Rat(4)}, {8, Rat(2), Rat(4)}, {1, Rat(4), Rat(4)},
                        {6, Rat(0), Rat(2)}, {2, Rat(4), Rat(2)}, {5, Rat(0), Rat(0)},
                        {4, Rat(2), Rat(0)}, {3, Rat(4), Rat(0)}});
}

// Ids 1..12 are the subdivision vertices, 13..18 are A..F.
Layout fig2_layout() {
    const int A = 13, B = 14, C = 15, D = 16, E = 17, F = 18;
    return grid_layout({{B, Rat(8), Rat(6)},  {5, Rat(6), Rat(6)},  {6, Rat(10), Rat(6)},
                        {E, Rat(8), Rat(4)},  {3, Rat(2), Rat(8)},  {C, Rat(12), Rat(8)},
                        {4, Rat(14), Rat(8)}, {1, Rat(0), Rat(10)}, {A, Rat(4), Rat(10)},
                        {2, Rat(16), Rat(10)},{7, Rat(0), Rat(4)},  {8, Rat(14), Rat(4)},
                        {9, Rat(2), Rat(0)},  {D, Rat(4), Rat(0)},  {10, Rat(6), Rat(0)},
                        {11, Rat(10), Rat(2)},{F, Rat(12), Rat(2)}, {12, Rat(16), Rat(2)}});
}

Graph fig2_graph() {
    const int A = 13, B = 14, C = 15, D = 16, E = 17, F = 18;
    Graph g;
    for (auto [a, b] : {std::pair{A, 1}, {A, 2}, {A, D}, {B, 5}, {B, E}, {B, 6},
                        {C, 3}, {C, F}, {C, 4}, {D, 9}, {D, 10}, {E, 7}, {E, 8},
                        {F, 11}, {F, 12}, {1, 7}, {2, 12}, {3, 9}, {4, 8},
                        {5, 10}, {6, 11}})
        g.add_edge(a, b);
    return g;
}

Layout fig3a_k16_layout() {
    return free_layout({{1, Rat(0), Rat(0)},
                        {2, Rat(-3, 4), Rat(3)},
                        {3, Rat(1, 2), Rat(2)},
                        {4, Rat(-2), Rat(1, 2)},
                        {5, Rat(-13, 4), Rat(-1, 2)},
                        {6, Rat(2), Rat(0)},
                        {7, Rat(0), Rat(-2)}});
}

Layout fig3b_k26_layout_as_printed() {
    return free_layout({{1, Rat(0), Rat(0)},
                        {2, Rat(1), Rat(-1)},
                        {3, Rat(1, 2), Rat(3, 2)},
                        {4, Rat(3, 2), Rat(1, 2)},
                        {5, Rat(5, 2), Rat(-1, 2)},
                        {6, Rat(-3, 2), Rat(-1, 2)},
                        {7, Rat(-1, 2), Rat(-3, 2)},
                        {8, Rat(1, 2), Rat(-5, 2)}});
}

Layout fig3c_k34_layout() {
    return free_layout({{1, Rat(0), Rat(0)},
                        {2, Rat(5, 4), Rat(-5, 4)},
                        {3, Rat(5, 2), Rat(-5, 2)},
                        {4, Rat(29, 16), Rat(7, 16)},
                        {5, Rat(23, 8), Rat(-5, 8)},
                        {6, Rat(-3, 8), Rat(-15, 8)},
                        {7, Rat(11, 16), Rat(-47, 16)}});
}

Layout fig3d_k4_layout() {
    return free_layout({{0, Rat(0), Rat(0)},
                        {1, Rat(5, 4), Rat(1, 2)},
                        {2, Rat(7, 4), Rat(-3, 4)},
                        {3, Rat(1, 2), Rat(-5, 4)}});
}

Layout fig3e_k5_minus_edge_layout() {
    return free_layout({{1, Rat(0), Rat(0)},
                        {2, Rat(5, 4), Rat(1, 2)},
                        {3, Rat(1, 2), Rat(-5, 4)},
                        {4, Rat(7, 4), Rat(-3, 4)},
                        {5, Rat(5, 4), Rat(-5, 2)}});
}

Graph fig5a_graph() {
    Graph g;
    const int A = 0, B = 6;
    for (int leaf : {1, 2, 3, 4, 5}) g.add_edge(A, leaf);
    g.add_edge(A, B);
    for (int leaf : {7, 8, 9, 10, 11}) g.add_edge(B, leaf);
    return g;
}

Layout fig5b_layout() {
    return free_layout({{0, Rat(0), Rat(0)},
                        {1, Rat(-7, 4), Rat(0)},
                        {2, Rat(-9, 20), Rat(7, 4)},
                        {3, Rat(11, 20), Rat(57, 20)},
                        {4, Rat(7, 4), Rat(1, 2)},
                        {5, Rat(0), Rat(-2)},
                        {6, Rat(5), Rat(-1, 2)},
                        {7, Rat(5), Rat(39, 10)},
                        {8, Rat(27, 4), Rat(-1, 2)},
                        {9, Rat(91, 20), Rat(-13, 4)},
                        {10, Rat(111, 20), Rat(-87, 20)},
                        {11, Rat(13, 4), Rat(-1)}});
}

std::vector<Layout> fig7_k4_class_layouts() {
    std::vector<Layout> out;
    out.push_back(free_layout({{1, Rat(-5, 4), Rat(9, 10)},
                               {2, Rat(2, 5), Rat(3, 2)},
                               {3, Rat(17, 10), Rat(5, 8)},
                               {4, Rat(0), Rat(0)}}));
    out.push_back(free_layout({{1, Rat(0), Rat(0)},
                               {2, Rat(5, 4), Rat(1, 2)},
                               {3, Rat(7, 4), Rat(-3, 4)},
                               {4, Rat(1, 2), Rat(-5, 4)}}));
    out.push_back(free_layout({{1, Rat(0), Rat(0)},
                               {2, Rat(5, 4), Rat(1, 2)},
                               {3, Rat(7, 4), Rat(-3, 4)},
                               {4, Rat(9, 10), Rat(-2)}}));
    return out;
}

Layout k5_subdivision_layout() {
    const int A = 13, B = 14, C = 15, D = 16, E = 17;
    return grid_layout({{C, Rat(4), Rat(4)},  {B, Rat(2), Rat(4)},  {A, Rat(4), Rat(6)},
                        {D, Rat(6), Rat(4)},  {E, Rat(4), Rat(2)},  {1, Rat(4), Rat(10)},
                        {2, Rat(10), Rat(10)},{3, Rat(0), Rat(8)},  {4, Rat(8), Rat(8)},
                        {5, Rat(2), Rat(6)},  {6, Rat(6), Rat(6)},  {7, Rat(0), Rat(4)},
                        {8, Rat(8), Rat(4)},  {9, Rat(2), Rat(2)},  {10, Rat(6), Rat(2)},
                        {11, Rat(4), Rat(0)}, {12, Rat(10), Rat(0)}});
}

Graph k5_subdivision_graph() {
    const int A = 13, B = 14, C = 15, D = 16, E = 17;
    Graph g;
    for (auto [a, b] : {std::pair{A, 1}, {A, 5}, {A, 6}, {A, C}, {B, 5}, {B, 7},
                        {B, 9}, {B, C}, {C, D}, {C, E}, {D, 6}, {D, 8}, {D, 10},
                        {E, 9}, {E, 10}, {E, 11}, {1, 2}, {3, 4}, {3, 7}, {4, 8},
                        {11, 12}, {2, 12}})
        g.add_edge(a, b);
    return g;
}

} // namespace fixtures
} // namespace usv
