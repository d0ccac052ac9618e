#pragma once

#include <map>
#include <string>

#include "usv/geometry.hpp"
#include "usv/graph.hpp"

namespace usv {

enum class LrduLabel { L, R, D, U };
enum class HvLabel { H, V };

/// Edge labeling prescribing visibility directions (LRDU, on one orientation
/// of each edge) or just the axis (HV, on unordered edges).
struct Restriction {
    enum class Mode { Lrdu, Hv } mode = Mode::Lrdu;
    std::map<std::pair<int, int>, LrduLabel> lrdu; // directed key (u, v)
    std::map<std::pair<int, int>, HvLabel> hv;     // normalized key (min, max)
};

/// Checks the labeling covers exactly E and satisfies the validity
/// definition (LRDU port uniqueness / HV per-vertex count limits).
bool restriction_valid(const Graph& g, const Restriction& r);

/// True iff every label's implication holds against the realized visibilities.
bool layout_satisfies(const Layout& l, const Restriction& r);

char lrdu_char(LrduLabel x);
char hv_char(HvLabel x);

} // namespace usv
