#pragma once

#include <map>

#include "usv/geometry.hpp"
#include "usv/graph.hpp"

namespace usv {

/// Straight-line grid drawing with axis-parallel edges that pass through no
/// third vertex.
struct RectilinearDrawing {
    Graph graph;
    std::map<int, std::pair<int, int>> pos; // vertex -> (x, y)
};

ValidationReport drawing_valid(const RectilinearDrawing& d);

/// Square positions become vertex positions; realized visibilities become edges.
RectilinearDrawing layout_to_drawing(const Layout& l);

/// Scale by two and replace vertices by unit squares. The result is only a
/// weak layout: its graph is a supergraph of the drawing's graph.
Layout drawing_to_weak_layout(const RectilinearDrawing& d);

/// Remove surplus visibilities with edge-deletion shifts until the extracted
/// graph equals g exactly.
Layout strengthen_weak_layout(const Layout& l, const Graph& g);

} // namespace usv
