#pragma once

#include <optional>
#include <string>
#include <vector>

#include "usv/graph.hpp"
#include "usv/rat.hpp"

namespace usv {

enum class Axis { Horizontal, Vertical };

/// Unit square with exact rational lower-left corner.
struct Square {
    int id = 0;
    Rat x, y;
};

enum class LayoutKind { Grid, Free };

/// A set of labeled unit squares, tagged grid (non-negative integer
/// coordinates) or free (arbitrary rational coordinates).
struct Layout {
    LayoutKind kind = LayoutKind::Free;
    std::vector<Square> squares;

    const Square* find(int id) const {
        for (const auto& s : squares)
            if (s.id == id) return &s;
        return nullptr;
    }
    Square* find(int id) {
        for (auto& s : squares)
            if (s.id == id) return &s;
        return nullptr;
    }
};

/// Directed, axis-tagged visibility assertion. Horizontal from->to means the
/// `from` square sees `to` from the left; vertical means `from` is above `to`.
struct VisibilityFact {
    int from = 0;
    int to = 0;
    Axis axis = Axis::Horizontal;

    friend bool operator<(const VisibilityFact& a, const VisibilityFact& b) {
        if (a.axis != b.axis) return a.axis < b.axis;
        if (a.from != b.from) return a.from < b.from;
        return a.to < b.to;
    }
    friend bool operator==(const VisibilityFact& a, const VisibilityFact& b) {
        return a.from == b.from && a.to == b.to && a.axis == b.axis;
    }
};

struct LayoutViolation {
    std::string what;
};

struct ValidationReport {
    std::vector<LayoutViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// A realized crossing between one horizontal and one vertical visibility,
/// drawn as center-to-center segments (grid layouts only).
struct Crossing {
    VisibilityFact horizontal;
    VisibilityFact vertical;
};

ValidationReport validate_layout(const Layout& l);

/// Directed visibility test: for Horizontal, does `i` see `j` from the left;
/// for Vertical, does `i` (above) see `j` (below). Exact interval arithmetic.
bool sees(const Layout& l, int i, int j, Axis axis);

/// Independent oracle for sees: scales the layout so all coordinates are even
/// integers and scans integer-aligned unit strips of the overlap interval.
bool visibility_oracle(const Layout& l, int i, int j, Axis axis);

std::vector<VisibilityFact> visibility_relation(const Layout& l);
Graph extract_graph(const Layout& l);

std::vector<Crossing> layout_crossings(const Layout& l);

Layout delete_edge_shift(const Layout& l, int u, int v);
Layout delete_vertex(const Layout& l, int v);

Layout translate(const Layout& l, const Rat& dx, const Rat& dy);
/// Rotate 90 degrees counterclockwise about the origin (squares map to squares).
Layout rotate_ccw(const Layout& l);
Layout mirror_x(const Layout& l);
/// Translate so the minimum coordinates are zero.
Layout normalize_origin(const Layout& l);

} // namespace usv
