#include "usv/geometry.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace usv {

ValidationReport validate_layout(const Layout& l) {
    ValidationReport rep;
    std::map<int, int> seen;
    for (const auto& s : l.squares) {
        if (s.id < 0)
            rep.violations.push_back({"negative id " + std::to_string(s.id)});
        if (++seen[s.id] == 2)
            rep.violations.push_back({"duplicate id " + std::to_string(s.id)});
        if (l.kind == LayoutKind::Grid) {
            if (!s.x.is_integer() || !s.y.is_integer())
                rep.violations.push_back({"non-integer grid coordinate for square " +
                                          std::to_string(s.id)});
            else if (s.x.num < 0 || s.y.num < 0)
                rep.violations.push_back({"negative grid coordinate for square " +
                                          std::to_string(s.id)});
        }
    }
    const std::size_t n = l.squares.size();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            const Square &p = l.squares[a], &q = l.squares[b];
            Rat dx = p.x < q.x ? q.x - p.x : p.x - q.x;
            Rat dy = p.y < q.y ? q.y - p.y : p.y - q.y;
            // Closed unit squares are disjoint iff they are more than one
            // unit apart on some axis; touching counts as a violation.
            if (!(dx > Rat(1) || dy > Rat(1)))
                rep.violations.push_back({"squares " + std::to_string(p.id) + " and " +
                                          std::to_string(q.id) + " overlap or touch"});
        }
    }
    return rep;
}

namespace {

struct Interval {
    Rat lo, hi;
};

// True iff [lo,hi] minus the union of closed blocker intervals still contains
// an interval of positive length.
bool positive_residual(Rat lo, Rat hi, std::vector<Interval>& blockers) {
    if (!(lo < hi)) return false;
    std::sort(blockers.begin(), blockers.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    Rat cur = lo; // invariant: cur < hi
    for (const auto& iv : blockers) {
        if (iv.hi <= cur) continue;
        if (iv.lo > cur) return true; // positive gap (cur, min(iv.lo, hi))
        cur = iv.hi;
        if (!(cur < hi)) return false;
    }
    return true;
}

const Square& square_by_id(const Layout& l, int id) {
    const Square* s = l.find(id);
    if (!s) throw std::invalid_argument("unknown square id " + std::to_string(id));
    return *s;
}

} // namespace

bool sees(const Layout& l, int i, int j, Axis axis) {
    if (i == j) throw std::invalid_argument("sees: identical ids");
    const Square &si = square_by_id(l, i), &sj = square_by_id(l, j);
    if (axis == Axis::Horizontal) {
        // i must be strictly left of j and share a y-overlap of positive length.
        if (!(si.x < sj.x)) return false;
        Rat lo = rat_max(si.y, sj.y);
        Rat hi = rat_min(si.y, sj.y) + Rat(1);
        if (!(lo < hi)) return false;
        // Any square whose closed x-interval meets the closed strip
        // [x_i + 1, x_j] blocks within its y-interval.
        std::vector<Interval> blockers;
        for (const auto& s : l.squares) {
            if (s.id == i || s.id == j) continue;
            if (s.x >= si.x && s.x <= sj.x)
                blockers.push_back({s.y, s.y + Rat(1)});
        }
        return positive_residual(lo, hi, blockers);
    }
    // Vertical: i above j.
    if (!(sj.y < si.y)) return false;
    Rat lo = rat_max(si.x, sj.x);
    Rat hi = rat_min(si.x, sj.x) + Rat(1);
    if (!(lo < hi)) return false;
    std::vector<Interval> blockers;
    for (const auto& s : l.squares) {
        if (s.id == i || s.id == j) continue;
        if (s.y >= sj.y && s.y <= si.y)
            blockers.push_back({s.x, s.x + Rat(1)});
    }
    return positive_residual(lo, hi, blockers);
}

bool visibility_oracle(const Layout& l, int i, int j, Axis axis) {
    // Scale by 2*lcm of denominators so every coordinate is an even integer,
    // then scan unit strips of the overlap interval for one that no other
    // square intersects.
    std::int64_t D = 1;
    for (const auto& s : l.squares) {
        D = lcm64(D, s.x.den);
        D = lcm64(D, s.y.den);
    }
    const std::int64_t F = 2 * D;
    auto X = [&](const Square& s) { return s.x.num * (F / s.x.den); };
    auto Y = [&](const Square& s) { return s.y.num * (F / s.y.den); };
    const Square &si = square_by_id(l, i), &sj = square_by_id(l, j);
    std::int64_t xi = X(si), yi = Y(si), xj = X(sj), yj = Y(sj);

    auto strip_clear = [&](std::int64_t t, bool horizontal) {
        // Strip (t, t+1) in the cross axis, full channel in the main axis.
        for (const auto& s : l.squares) {
            if (s.id == i || s.id == j) continue;
            std::int64_t sx = X(s), sy = Y(s);
            if (horizontal) {
                if (sx < xi || sx > xj) continue; // x-interval misses the strip
                if (sy < t + 1 && sy + F > t) return false;
            } else {
                if (sy < yj || sy > yi) continue;
                if (sx < t + 1 && sx + F > t) return false;
            }
        }
        return true;
    };

    if (axis == Axis::Horizontal) {
        if (xi >= xj) return false;
        std::int64_t lo = std::max(yi, yj), hi = std::min(yi, yj) + F;
        for (std::int64_t t = lo; t + 1 <= hi; ++t)
            if (strip_clear(t, true)) return true;
        return false;
    }
    if (yi <= yj) return false;
    std::int64_t lo = std::max(xi, xj), hi = std::min(xi, xj) + F;
    for (std::int64_t t = lo; t + 1 <= hi; ++t)
        if (strip_clear(t, false)) return true;
    return false;
}

std::vector<VisibilityFact> visibility_relation(const Layout& l) {
    auto rep = validate_layout(l);
    if (!rep.ok())
        throw std::invalid_argument("visibility_relation: invalid layout: " +
                                    rep.violations.front().what);
    std::vector<VisibilityFact> facts;
    const auto& sq = l.squares;
    const std::size_t n = sq.size();
    // Sorted main-axis indices keep the blocker scans local: a horizontal
    // channel only cares about squares with x in [x_i, x_j].
    std::vector<std::size_t> by_x(n), by_y(n);
    for (std::size_t i = 0; i < n; ++i) by_x[i] = by_y[i] = i;
    std::sort(by_x.begin(), by_x.end(),
              [&](std::size_t a, std::size_t b) { return sq[a].x < sq[b].x; });
    std::sort(by_y.begin(), by_y.end(),
              [&](std::size_t a, std::size_t b) { return sq[a].y < sq[b].y; });

    std::vector<Interval> blockers;
    auto residual = [&](Rat lo, Rat hi) { return positive_residual(lo, hi, blockers); };

    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b) continue;
            const Square &p = sq[a], &q = sq[b];
            if (p.x < q.x) {
                Rat lo = rat_max(p.y, q.y), hi = rat_min(p.y, q.y) + Rat(1);
                if (lo < hi) {
                    blockers.clear();
                    bool covered = false;
                    auto first = std::lower_bound(
                        by_x.begin(), by_x.end(), p.x,
                        [&](std::size_t i, const Rat& v) { return sq[i].x < v; });
                    for (auto it = first; it != by_x.end() && !(sq[*it].x > q.x); ++it) {
                        if (*it == a || *it == b) continue;
                        const Rat& y0 = sq[*it].y;
                        if (y0 <= lo && hi <= y0 + Rat(1)) { covered = true; break; }
                        blockers.push_back({y0, y0 + Rat(1)});
                    }
                    if (!covered && residual(lo, hi))
                        facts.push_back({p.id, q.id, Axis::Horizontal});
                }
            }
            if (q.y < p.y) {
                Rat lo = rat_max(p.x, q.x), hi = rat_min(p.x, q.x) + Rat(1);
                if (lo < hi) {
                    blockers.clear();
                    bool covered = false;
                    auto first = std::lower_bound(
                        by_y.begin(), by_y.end(), q.y,
                        [&](std::size_t i, const Rat& v) { return sq[i].y < v; });
                    for (auto it = first; it != by_y.end() && !(sq[*it].y > p.y); ++it) {
                        if (*it == a || *it == b) continue;
                        const Rat& x0 = sq[*it].x;
                        if (x0 <= lo && hi <= x0 + Rat(1)) { covered = true; break; }
                        blockers.push_back({x0, x0 + Rat(1)});
                    }
                    if (!covered && residual(lo, hi))
                        facts.push_back({p.id, q.id, Axis::Vertical});
                }
            }
        }
    }
    std::sort(facts.begin(), facts.end());
    return facts;
}

Graph extract_graph(const Layout& l) {
    Graph g;
    for (const auto& s : l.squares) g.add_vertex(s.id);
    for (const auto& f : visibility_relation(l)) g.add_edge(f.from, f.to);
    return g;
}

std::vector<Crossing> layout_crossings(const Layout& l) {
    if (l.kind != LayoutKind::Grid)
        throw std::invalid_argument("layout_crossings: defined for grid layouts only");
    auto facts = visibility_relation(l);
    std::vector<Crossing> out;
    for (const auto& h : facts) {
        if (h.axis != Axis::Horizontal) continue;
        const Square &a = square_by_id(l, h.from), &b = square_by_id(l, h.to);
        for (const auto& v : facts) {
            if (v.axis != Axis::Vertical) continue;
            const Square &c = square_by_id(l, v.from), &d = square_by_id(l, v.to);
            // Horizontal segment y = a.y + 1/2, x in (a.x+1/2, b.x+1/2);
            // vertical segment x = c.x + 1/2, y in (d.y+1/2, c.y+1/2).
            // Interior intersection in both segments.
            if (a.x < c.x && c.x < b.x && d.y < a.y && a.y < c.y)
                out.push_back({h, v});
        }
    }
    return out;
}

Layout translate(const Layout& l, const Rat& dx, const Rat& dy) {
    Layout out = l;
    for (auto& s : out.squares) {
        s.x = s.x + dx;
        s.y = s.y + dy;
    }
    return out;
}

Layout rotate_ccw(const Layout& l) {
    Layout out = l;
    for (auto& s : out.squares) {
        Rat nx = -s.y - Rat(1);
        Rat ny = s.x;
        s.x = nx;
        s.y = ny;
    }
    return out;
}

Layout mirror_x(const Layout& l) {
    Layout out = l;
    for (auto& s : out.squares) s.x = -s.x - Rat(1);
    return out;
}

Layout normalize_origin(const Layout& l) {
    if (l.squares.empty()) return l;
    Rat mx = l.squares[0].x, my = l.squares[0].y;
    for (const auto& s : l.squares) {
        mx = rat_min(mx, s.x);
        my = rat_min(my, s.y);
    }
    return translate(l, -mx, -my);
}

Layout delete_edge_shift(const Layout& l, int u, int v) {
    if (l.kind != LayoutKind::Grid)
        throw std::invalid_argument("delete_edge_shift: grid layouts only");
    // Locate the realized visibility for {u, v}.
    if (sees(l, v, u, Axis::Vertical) || sees(l, v, u, Axis::Horizontal))
        std::swap(u, v);
    square_by_id(l, u); // id check
    const Square& sv = square_by_id(l, v);
    if (sees(l, u, v, Axis::Vertical)) {
        // u above v in the same column: move one unit right every square at
        // (x, y) with x > x_v, or x = x_v and y <= y_v.
        Layout out = l;
        for (auto& s : out.squares) {
            if (s.x > sv.x || (s.x == sv.x && s.y <= sv.y)) s.x = s.x + Rat(1);
        }
        return out;
    }
    if (sees(l, u, v, Axis::Horizontal)) {
        // Single code path: rotate so the edge is vertical, apply, rotate back.
        Layout r = rotate_ccw(l);
        // u left of v horizontally becomes u below v; the vertical rule wants
        // the upper square first, which is now v.
        Layout shifted = delete_edge_shift(r, v, u);
        Layout back = rotate_ccw(rotate_ccw(rotate_ccw(shifted)));
        return normalize_origin(back);
    }
    throw std::invalid_argument("delete_edge_shift: {" + std::to_string(u) + "," +
                                std::to_string(v) + "} is not a realized edge");
}

Layout delete_vertex(const Layout& l, int v) {
    if (l.kind != LayoutKind::Grid)
        throw std::invalid_argument("delete_vertex: grid layouts only");
    if (!l.find(v)) throw std::invalid_argument("delete_vertex: unknown id");
    Graph target = extract_graph(l);
    target.remove_vertex(v);
    Layout out = l;
    out.squares.erase(std::remove_if(out.squares.begin(), out.squares.end(),
                                     [&](const Square& s) { return s.id == v; }),
                      out.squares.end());
    // Removing a square can reveal at most two new visibilities; shift them away.
    for (int guard = 0; guard < 8; ++guard) {
        Graph cur = extract_graph(out);
        std::vector<std::pair<int, int>> surplus;
        for (const auto& e : cur.edges)
            if (!target.has_edge(e.first, e.second)) surplus.push_back(e);
        if (surplus.empty()) return out;
        out = delete_edge_shift(out, surplus.front().first, surplus.front().second);
    }
    throw std::logic_error("delete_vertex: shift loop failed to converge");
}

} // namespace usv
