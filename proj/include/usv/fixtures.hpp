#pragma once

#include "usv/geometry.hpp"
#include "usv/graph.hpp"

namespace usv {
namespace fixtures {

/// Planar graph that admits only non-planar grid layouts.
Graph fig1a_graph();
/// Its unique (up to V-isomorphism) grid layout, scaled by two.
Layout fig1b_layout();

/// Grid layout of a K_{3,3} subdivision on 18 squares.
Layout fig2_layout();
Graph fig2_graph();

/// K_{1,6} with strictly disjoint squares (the classic drawing lets two
/// square pairs touch at corners, which the validator rejects).
Layout fig3a_k16_layout();
/// K_{2,6} as classically drawn; corner-touching, hence not a valid layout.
Layout fig3b_k26_layout_as_printed();
/// K_{3,4} with strictly disjoint squares.
Layout fig3c_k34_layout();
Layout fig3d_k4_layout();
/// K_5 minus one edge.
Layout fig3e_k5_minus_edge_layout();

/// Degree-6 two-center tree and its free layout.
Graph fig5a_graph();
Layout fig5b_layout();

/// The three V-isomorphism classes of K_4 layouts.
std::vector<Layout> fig7_k4_class_layouts();

/// Grid layout of a subdivision of K_5.
Layout k5_subdivision_layout();
Graph k5_subdivision_graph();

} // namespace fixtures
} // namespace usv
