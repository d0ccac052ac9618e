#pragma once

#include <string>

#include "usv/geometry.hpp"

namespace usv {

struct RenderOptions {
    int scale = 40; // pixels per unit
    bool show_visibilities = false;
    bool show_crossings = false;
};

/// Byte-deterministic SVG: one rect per square (labeled with its id),
/// optionally dashed visibility segments and crossing markers.
std::string render_svg(const Layout& l, const RenderOptions& opt);

} // namespace usv
