#include "usv/recognize.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <set>
#include <thread>

namespace usv {

namespace {

using Cell = std::pair<std::int64_t, std::int64_t>;

enum class Step { Found, Exhausted, Budget };

// Scaled-integer search state: coordinates are multiples of 1/den, stored as
// integers; a unit square spans `den` cells.
struct Searcher {
    const IndexedGraph& G;
    std::int64_t den;
    std::int64_t spanW, spanH; // max coordinate span, in cells
    const Restriction* restriction;
    bool break_symmetry;
    bool enumerate_all;

    std::vector<int> order;               // placement order (graph indices)
    std::vector<Cell> pos;                // by graph index
    std::vector<char> placed;
    std::vector<int> placed_seq;

    std::atomic<std::uint64_t>* nodes;
    std::uint64_t budget_nodes;
    std::chrono::steady_clock::time_point deadline;
    bool has_deadline = false;
    std::atomic<bool>* stop; // set when another worker found a witness

    std::function<void(const std::vector<Cell>&)> on_solution;

    explicit Searcher(const IndexedGraph& g) : G(g) {}

    // ---- scaled geometry on the partial placement ----

    bool disjoint_ok(const Cell& a, const Cell& b) const {
        std::int64_t dx = a.first > b.first ? a.first - b.first : b.first - a.first;
        std::int64_t dy = a.second > b.second ? a.second - b.second : b.second - a.second;
        return dx > den || dy > den;
    }

    // Directed horizontal/vertical sees between placed squares i, j.
    bool sees_dir(int i, int j, bool horizontal) const {
        const Cell &a = pos[i], &b = pos[j];
        std::int64_t alo, ahi; // cross-axis overlap
        if (horizontal) {
            if (a.first >= b.first) return false;
            alo = std::max(a.second, b.second);
            ahi = std::min(a.second, b.second) + den;
        } else {
            if (a.second <= b.second) return false;
            alo = std::max(a.first, b.first);
            ahi = std::min(a.first, b.first) + den;
        }
        if (alo >= ahi) return false;
        // Sweep the blocker intervals.
        std::vector<std::pair<std::int64_t, std::int64_t>> blk;
        for (int k : placed_seq) {
            if (k == i || k == j) continue;
            const Cell& c = pos[k];
            if (horizontal) {
                if (c.first >= a.first && c.first <= b.first)
                    blk.push_back({c.second, c.second + den});
            } else {
                if (c.second >= b.second && c.second <= a.second)
                    blk.push_back({c.first, c.first + den});
            }
        }
        std::sort(blk.begin(), blk.end());
        std::int64_t cur = alo;
        for (auto& iv : blk) {
            if (iv.second <= cur) continue;
            if (iv.first > cur) return true;
            cur = iv.second;
            if (cur >= ahi) return false;
        }
        return cur < ahi;
    }

    bool visible(int i, int j) const {
        return sees_dir(i, j, true) || sees_dir(j, i, true) ||
               sees_dir(i, j, false) || sees_dir(j, i, false);
    }

    // Span bookkeeping.
    std::int64_t minx = 0, maxx = 0, miny = 0, maxy = 0;

    bool span_ok(const Cell& c) const {
        if (placed_seq.empty()) return true;
        std::int64_t nx0 = std::min(minx, c.first), nx1 = std::max(maxx, c.first);
        std::int64_t ny0 = std::min(miny, c.second), ny1 = std::max(maxy, c.second);
        return nx1 - nx0 <= spanW && ny1 - ny0 <= spanH;
    }

    // Is there still a grid cell where a future square could intersect the
    // visibility channel of the (currently visible, non-adjacent) pair (i, j)?
    bool blockable(int i, int j) const {
        int a = i, b = j;
        bool horizontal;
        if (sees_dir(i, j, true) || sees_dir(j, i, true)) {
            horizontal = true;
            if (pos[j].first < pos[i].first) std::swap(a, b);
        } else {
            horizontal = false;
            if (pos[j].second > pos[i].second) std::swap(a, b);
        }
        const Cell &pa = pos[a], &pb = pos[b];
        std::int64_t xlo, xhi, ylo, yhi; // candidate blocker cells
        if (horizontal) {
            xlo = pa.first;
            xhi = pb.first;
            std::int64_t olo = std::max(pa.second, pb.second);
            std::int64_t ohi = std::min(pa.second, pb.second) + den;
            ylo = olo - den + 1;
            yhi = ohi - 1;
        } else {
            // a above b
            ylo = pb.second;
            yhi = pa.second;
            std::int64_t olo = std::max(pa.first, pb.first);
            std::int64_t ohi = std::min(pa.first, pb.first) + den;
            xlo = olo - den + 1;
            xhi = ohi - 1;
        }
        for (std::int64_t x = xlo; x <= xhi; ++x) {
            for (std::int64_t y = ylo; y <= yhi; ++y) {
                Cell c{x, y};
                if (!span_ok(c)) continue;
                bool ok = true;
                for (int k : placed_seq)
                    if (!disjoint_ok(c, pos[k])) { ok = false; break; }
                if (ok) return true;
            }
        }
        return false;
    }

    bool restriction_direction_ok(int v) const {
        if (!restriction) return true;
        if (restriction->mode == Restriction::Mode::Lrdu) {
            for (const auto& [e, lab] : restriction->lrdu) {
                auto iu = G.index_of.find(e.first);
                auto iv = G.index_of.find(e.second);
                int a = iu->second, b = iv->second;
                if (a != v && b != v) continue;
                if (!placed[a] || !placed[b]) continue;
                switch (lab) {
                    case LrduLabel::R:
                        if (!sees_dir(a, b, true)) return false;
                        break;
                    case LrduLabel::L:
                        if (!sees_dir(b, a, true)) return false;
                        break;
                    case LrduLabel::D:
                        if (!sees_dir(a, b, false)) return false;
                        break;
                    case LrduLabel::U:
                        if (!sees_dir(b, a, false)) return false;
                        break;
                }
            }
            return true;
        }
        for (const auto& [e, lab] : restriction->hv) {
            int a = G.index_of.at(e.first), b = G.index_of.at(e.second);
            if (a != v && b != v) continue;
            if (!placed[a] || !placed[b]) continue;
            bool h = sees_dir(a, b, true) || sees_dir(b, a, true);
            bool vv = sees_dir(a, b, false) || sees_dir(b, a, false);
            if (lab == HvLabel::H && !h) return false;
            if (lab == HvLabel::V && !vv) return false;
        }
        return true;
    }

    // Consistency of the partial placement after adding vertex v.
    bool consistent(int v) {
        // Placed adjacent pairs must all still be visible (visibility only
        // shrinks as squares are added).
        for (std::size_t ii = 0; ii < placed_seq.size(); ++ii) {
            int a = placed_seq[ii];
            for (std::size_t jj = ii + 1; jj < placed_seq.size(); ++jj) {
                int b = placed_seq[jj];
                bool adj = G.adj[a][b];
                bool vis = visible(a, b);
                if (adj && !vis) return false;
                if (!adj && vis) {
                    // Fatal only if no unplaced square can still block it.
                    if (placed_seq.size() == G.n()) return false;
                    if ((a == v || b == v) && !blockable(a, b)) return false;
                }
            }
        }
        return restriction_direction_ok(v);
    }

    std::vector<Cell> candidates(int v) {
        std::vector<int> nbrs;
        for (int w : G.nbr[v])
            if (placed[w]) nbrs.push_back(w);
        std::vector<Cell> out;
        auto consider = [&](Cell c) {
            if (!span_ok(c)) return;
            for (int k : placed_seq)
                if (!disjoint_ok(c, pos[k])) return;
            out.push_back(c);
        };
        if (placed_seq.empty()) {
            out.push_back({0, 0});
            return out;
        }
        if (nbrs.empty()) {
            for (std::int64_t x = maxx - spanW; x <= minx + spanW; ++x)
                for (std::int64_t y = maxy - spanH; y <= miny + spanH; ++y)
                    consider({x, y});
            return out;
        }
        const Cell p = pos[nbrs[0]];
        std::set<Cell> cand;
        // Horizontal overlap band of the first placed neighbor.
        for (std::int64_t dy = -den + 1; dy <= den - 1; ++dy) {
            std::int64_t y = p.second + dy;
            for (std::int64_t x = maxx - spanW; x <= minx + spanW; ++x) {
                if (x >= p.first - den && x <= p.first + den) continue;
                cand.insert({x, y});
            }
        }
        // Vertical overlap band.
        for (std::int64_t dx = -den + 1; dx <= den - 1; ++dx) {
            std::int64_t x = p.first + dx;
            for (std::int64_t y = maxy - spanH; y <= miny + spanH; ++y) {
                if (y >= p.second - den && y <= p.second + den) continue;
                cand.insert({x, y});
            }
        }
        for (const Cell& c : cand) consider(c);
        // Requiring current visibility to every placed neighbor is sound:
        // visibility is monotone decreasing in square additions.
        std::vector<Cell> filtered;
        for (const Cell& c : out) {
            pos[v] = c;
            placed[v] = 1;
            placed_seq.push_back(v);
            bool ok = true;
            for (int w : nbrs)
                if (!visible(v, w)) { ok = false; break; }
            placed_seq.pop_back();
            placed[v] = 0;
            if (ok) filtered.push_back(c);
        }
        return filtered;
    }

    Step run(std::size_t depth) {
        if (stop && stop->load(std::memory_order_relaxed)) return Step::Budget;
        if (depth == G.n()) {
            on_solution(pos);
            return enumerate_all ? Step::Exhausted : Step::Found;
        }
        int v = order[depth];
        auto cands = candidates(v);
        // Symmetry breaking for the second placed vertex: east arm only.
        if (break_symmetry && depth == 1) {
            std::vector<Cell> keep;
            for (const Cell& c : cands)
                if (c.first > 0 && c.second >= 0 && c.second < den) keep.push_back(c);
            if (!G.adj[order[0]][v]) keep = cands; // not adjacent: no arm structure
            cands = std::move(keep);
        }
        for (const Cell& c : cands) {
            std::uint64_t seen = nodes->fetch_add(1, std::memory_order_relaxed) + 1;
            if (seen > budget_nodes) return Step::Budget;
            if (has_deadline && (seen & 0xFFF) == 0 &&
                std::chrono::steady_clock::now() > deadline)
                return Step::Budget;
            auto oldb = std::array<std::int64_t, 4>{minx, maxx, miny, maxy};
            pos[v] = c;
            placed[v] = 1;
            placed_seq.push_back(v);
            minx = std::min(minx, c.first);
            maxx = std::max(maxx, c.first);
            miny = std::min(miny, c.second);
            maxy = std::max(maxy, c.second);
            if (consistent(v)) {
                Step s = run(depth + 1);
                if (s != Step::Exhausted) {
                    placed_seq.pop_back();
                    placed[v] = 0;
                    minx = oldb[0]; maxx = oldb[1]; miny = oldb[2]; maxy = oldb[3];
                    return s;
                }
            }
            placed_seq.pop_back();
            placed[v] = 0;
            minx = oldb[0]; maxx = oldb[1]; miny = oldb[2]; maxy = oldb[3];
        }
        return Step::Exhausted;
    }
};

std::vector<int> placement_order(const IndexedGraph& g) {
    // BFS from a maximum-degree vertex, ties by id; repeat per component.
    const std::size_t n = g.n();
    std::vector<int> order;
    std::vector<char> seen(n, 0);
    while (order.size() < n) {
        int start = -1;
        for (std::size_t i = 0; i < n; ++i)
            if (!seen[i] && (start < 0 || g.degree((int)i) > g.degree(start)))
                start = (int)i;
        std::vector<int> q{start};
        seen[start] = 1;
        for (std::size_t h = 0; h < q.size(); ++h) {
            int v = q[h];
            order.push_back(v);
            auto nb = g.nbr[v];
            std::sort(nb.begin(), nb.end(), [&](int a, int b) {
                if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
                return a < b;
            });
            for (int w : nb)
                if (!seen[w]) { seen[w] = 1; q.push_back(w); }
        }
    }
    return order;
}

Layout cells_to_layout(const IndexedGraph& g, const std::vector<Cell>& cells,
                       std::int64_t den, LayoutKind kind) {
    Layout l;
    l.kind = kind;
    for (std::size_t i = 0; i < g.n(); ++i)
        l.squares.push_back({g.ids[i], Rat(cells[i].first, den), Rat(cells[i].second, den)});
    return normalize_origin(l);
}

struct SearchSpec {
    std::int64_t den, spanW, spanH;
    LayoutKind kind;
    std::string domain;
};

RecognitionResult run_search(const Graph& g, const SearchSpec& spec,
                             const Restriction* r, const SearchBudget& budget) {
    RecognitionResult res;
    res.domain = spec.domain;
    res.engine = spec.kind == LayoutKind::Grid ? "usgv-search" : "usv-search";
    if (r && !restriction_valid(g, *r)) {
        res.answer = Answer::No;
        res.engine += "+invalid-restriction";
        return res;
    }
    IndexedGraph ig(g);
    if (ig.n() == 0) {
        res.answer = Answer::Yes;
        res.witness = Layout{spec.kind, {}};
        return res;
    }
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> stop{false};
    std::mutex mtx;
    std::optional<std::vector<Cell>> found;

    auto make_searcher = [&]() {
        Searcher s(ig);
        s.den = spec.den;
        s.spanW = spec.spanW;
        s.spanH = spec.spanH;
        s.restriction = r;
        s.break_symmetry = (r == nullptr) && spec.spanW == spec.spanH;
        s.enumerate_all = false;
        s.order = placement_order(ig);
        s.pos.assign(ig.n(), {0, 0});
        s.placed.assign(ig.n(), 0);
        s.nodes = &nodes;
        s.budget_nodes = budget.max_nodes;
        if (budget.wall_ms > 0) {
            s.has_deadline = true;
            s.deadline = std::chrono::steady_clock::now() +
                         std::chrono::milliseconds(budget.wall_ms);
        }
        s.stop = &stop;
        s.on_solution = [&](const std::vector<Cell>& cells) {
            std::lock_guard<std::mutex> lk(mtx);
            if (!found) found = cells;
            stop.store(true);
        };
        return s;
    };

    int threads = budget.deterministic ? 1 : std::max(1, budget.threads);
    Step outcome;
    if (threads <= 1 || ig.n() < 2) {
        Searcher s = make_searcher();
        s.stop = nullptr;
        outcome = s.run(0);
        if (found) outcome = Step::Found;
    } else {
        // Split the second vertex's candidates across workers.
        Searcher probe = make_searcher();
        probe.pos[probe.order[0]] = {0, 0};
        probe.placed[probe.order[0]] = 1;
        probe.placed_seq.push_back(probe.order[0]);
        auto cands = probe.candidates(probe.order[1]);
        if (probe.break_symmetry) {
            std::vector<Cell> keep;
            for (const Cell& c : cands)
                if (c.first > 0 && c.second >= 0 && c.second < probe.den)
                    keep.push_back(c);
            if (!ig.adj[probe.order[0]][probe.order[1]]) keep = cands;
            cands = std::move(keep);
        }
        std::atomic<std::size_t> next{0};
        std::atomic<int> budget_hit{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&]() {
                Searcher s = make_searcher();
                s.break_symmetry = false; // handled via the candidate list
                int v0 = s.order[0], v1 = s.order[1];
                s.pos[v0] = {0, 0};
                s.placed[v0] = 1;
                s.placed_seq.push_back(v0);
                s.minx = s.maxx = s.miny = s.maxy = 0;
                while (true) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= cands.size()) break;
                    if (stop.load()) break;
                    const Cell c = cands[i];
                    s.pos[v1] = c;
                    s.placed[v1] = 1;
                    s.placed_seq.push_back(v1);
                    auto ob = std::array<std::int64_t, 4>{s.minx, s.maxx, s.miny, s.maxy};
                    s.minx = std::min(s.minx, c.first);
                    s.maxx = std::max(s.maxx, c.first);
                    s.miny = std::min(s.miny, c.second);
                    s.maxy = std::max(s.maxy, c.second);
                    Step st = Step::Exhausted;
                    if (s.consistent(v1)) st = s.run(2);
                    s.placed_seq.pop_back();
                    s.placed[v1] = 0;
                    s.minx = ob[0]; s.maxx = ob[1]; s.miny = ob[2]; s.maxy = ob[3];
                    if (st == Step::Budget && !stop.load()) budget_hit.store(1);
                }
            });
        }
        for (auto& th : pool) th.join();
        outcome = found ? Step::Found : (budget_hit.load() ? Step::Budget : Step::Exhausted);
    }

    res.nodes = nodes.load();
    if (found) {
        Layout w = cells_to_layout(ig, *found, spec.den, spec.kind);
        // Soundness check on every solver exit.
        if (!(extract_graph(w) == g))
            throw std::logic_error("solver produced an unsound witness");
        res.answer = Answer::Yes;
        res.witness = std::move(w);
        return res;
    }
    res.answer = outcome == Step::Budget ? Answer::Unknown : Answer::No;
    return res;
}

} // namespace

RecognitionResult recognize_usgv(const Graph& g, int width, int height,
                                 const Restriction* r, const SearchBudget& budget) {
    if (width < 1 || height < 1)
        throw std::invalid_argument("recognize_usgv: width, height >= 1");
    SearchSpec spec;
    spec.den = 1;
    spec.spanW = width - 1;
    spec.spanH = height - 1;
    spec.kind = LayoutKind::Grid;
    spec.domain = "integer grid [0," + std::to_string(width - 1) + "]x[0," +
                  std::to_string(height - 1) + "]";
    return run_search(g, spec, r, budget);
}

RecognitionResult recognize_usgv(const Graph& g, const SearchBudget& budget) {
    int n = (int)g.n();
    int side = std::max(1, 2 * n - 1);
    return recognize_usgv(g, side, side, nullptr, budget);
}

RecognitionResult recognize_usv(const Graph& g, int denominator, Rat bound,
                                const SearchBudget& budget) {
    if (denominator < 1 || !(bound > Rat(0)))
        throw std::invalid_argument("recognize_usv: bad parameters");
    SearchSpec spec;
    spec.den = denominator;
    // span in cells = bound units * den cells per unit (floor)
    spec.spanW = spec.spanH = bound.num * denominator / bound.den;
    spec.kind = LayoutKind::Free;
    spec.domain = "rational grid step 1/" + std::to_string(denominator) +
                  ", coordinates in [0," + bound.str() + "]";
    return run_search(g, spec, nullptr, budget);
}

RecognitionResult recognize_usv(const Graph& g, const SearchBudget& budget) {
    int n = std::max<int>(1, (int)g.n());
    return recognize_usv(g, n, Rat(n), budget);
}

EnumerationResult enumerate_layout_classes(const Graph& g, GraphClass cls,
                                           int denominator,
                                           const SearchBudget& budget) {
    EnumerationResult res;
    IndexedGraph ig(g);
    SearchSpec spec;
    if (cls == GraphClass::Usgv) {
        spec.den = 1;
        spec.spanW = spec.spanH = std::max<std::int64_t>(1, 2 * (std::int64_t)g.n() - 2);
        spec.kind = LayoutKind::Grid;
        res.domain = "integer grid [0," + std::to_string(spec.spanW) + "]^2";
    } else {
        int den = denominator > 0 ? denominator : (int)g.n();
        spec.den = den;
        spec.spanW = spec.spanH = (std::int64_t)g.n() * den;
        spec.kind = LayoutKind::Free;
        res.domain = "rational grid step 1/" + std::to_string(den) +
                     ", coordinates in [0," + std::to_string(g.n()) + "]";
    }
    if (ig.n() == 0) return res;

    std::atomic<std::uint64_t> nodes{0};
    Searcher s(ig);
    s.den = spec.den;
    s.spanW = spec.spanW;
    s.spanH = spec.spanH;
    s.restriction = nullptr;
    s.break_symmetry = false; // classes are bucketed by V-isomorphism anyway
    s.enumerate_all = true;
    s.order = placement_order(ig);
    s.pos.assign(ig.n(), {0, 0});
    s.placed.assign(ig.n(), 0);
    s.nodes = &nodes;
    s.budget_nodes = budget.max_nodes;
    if (budget.wall_ms > 0) {
        s.has_deadline = true;
        s.deadline = std::chrono::steady_clock::now() +
                     std::chrono::milliseconds(budget.wall_ms);
    }
    s.stop = nullptr;

    std::set<std::vector<Cell>> seen;
    s.on_solution = [&](const std::vector<Cell>& cells) {
        // Normalize translation so identical layouts dedupe.
        std::int64_t mx = cells[0].first, my = cells[0].second;
        for (const auto& c : cells) {
            mx = std::min(mx, c.first);
            my = std::min(my, c.second);
        }
        std::vector<Cell> norm;
        for (const auto& c : cells) norm.push_back({c.first - mx, c.second - my});
        if (!seen.insert(norm).second) return;
        res.layouts_seen++;
        Layout l = cells_to_layout(ig, norm, spec.den, spec.kind);
        for (const auto& rep : res.representatives)
            if (v_isomorphic(l, rep)) return;
        res.representatives.push_back(l);
    };
    Step st = s.run(0);
    res.nodes = nodes.load();
    res.complete = st != Step::Budget;
    return res;
}

} // namespace usv
