#pragma once

#include <random>

#include "usv/families.hpp"
#include "usv/geometry.hpp"
#include "usv/graph.hpp"

namespace usv::testing {

inline Layout random_grid_layout(int n, std::mt19937_64& rng, int box = 0) {
    if (box == 0) box = 3 * n + 2;
    Layout l;
    l.kind = LayoutKind::Grid;
    int guard = 0;
    while ((int)l.squares.size() < n) {
        if (++guard > 100000) throw std::logic_error("random_grid_layout stuck");
        Rat x((std::int64_t)(rng() % (box + 1))), y((std::int64_t)(rng() % (box + 1)));
        bool ok = true;
        for (const auto& s : l.squares) {
            Rat dx = s.x < x ? x - s.x : s.x - x;
            Rat dy = s.y < y ? y - s.y : s.y - y;
            if (!(dx > Rat(1) || dy > Rat(1))) { ok = false; break; }
        }
        if (ok) l.squares.push_back({(int)l.squares.size(), x, y});
    }
    return l;
}

inline Layout random_free_layout(int n, std::mt19937_64& rng, int maxden = 8, int box = 0) {
    if (box == 0) box = 2 * n + 2;
    Layout l;
    l.kind = LayoutKind::Free;
    int guard = 0;
    while ((int)l.squares.size() < n) {
        if (++guard > 100000) throw std::logic_error("random_free_layout stuck");
        std::int64_t den = 1 + (std::int64_t)(rng() % maxden);
        Rat x((std::int64_t)(rng() % (box * den + 1)), den);
        den = 1 + (std::int64_t)(rng() % maxden);
        Rat y((std::int64_t)(rng() % (box * den + 1)), den);
        bool ok = true;
        for (const auto& s : l.squares) {
            Rat dx = s.x < x ? x - s.x : s.x - x;
            Rat dy = s.y < y ? y - s.y : s.y - y;
            if (!(dx > Rat(1) || dy > Rat(1))) { ok = false; break; }
        }
        if (ok) l.squares.push_back({(int)l.squares.size(), x, y});
    }
    return l;
}

} // namespace usv::testing
