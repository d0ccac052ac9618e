#include <functional>
#include <map>
#include <stdexcept>

#include "usv/recognize.hpp"

namespace usv {

namespace {

// ---------------------------------------------------------------------------
// Grid trees (max degree <= 4): grow each child at the end of a free arm of
// its parent, then remove any incidental visibilities with edge-deletion
// shifts. A free arm has no square anywhere along its ray, because the
// nearest square in an unused direction would be visible, hence an edge.
// ---------------------------------------------------------------------------

Layout tree_layout_grid(const Graph& t) {
    std::vector<int> verts(t.verts.begin(), t.verts.end());
    Layout cur;
    cur.kind = LayoutKind::Grid;
    Graph placed_target;

    // BFS order from the first vertex.
    std::vector<int> order;
    std::map<int, char> seen;
    std::vector<int> q{verts.front()};
    seen[verts.front()] = 1;
    for (std::size_t h = 0; h < q.size(); ++h) {
        int v = q[h];
        order.push_back(v);
        for (int w : t.neighbors(v))
            if (!seen[w]) { seen[w] = 1; q.push_back(w); }
    }

    std::map<int, int> parent;
    parent[order.front()] = -1;
    for (int v : order)
        for (int w : t.neighbors(v))
            if (!parent.count(w)) parent[w] = v;

    auto chebyshev_free = [&](Rat x, Rat y) {
        for (const auto& s : cur.squares) {
            Rat dx = s.x < x ? x - s.x : s.x - x;
            Rat dy = s.y < y ? y - s.y : s.y - y;
            if (!(dx > Rat(1) || dy > Rat(1))) return false;
        }
        return true;
    };

    for (int v : order) {
        placed_target.add_vertex(v);
        if (parent[v] < 0) {
            cur.squares.push_back({v, Rat(0), Rat(0)});
            continue;
        }
        int p = parent[v];
        placed_target.add_edge(p, v);
        const Square* ps = cur.find(p);
        // Directions already used by realized edges of p.
        std::set<int> used; // 0:E 1:W 2:N 3:S
        for (int w : extract_graph(cur).neighbors(p)) {
            const Square* ws = cur.find(w);
            if (ws->y == ps->y) used.insert(ws->x > ps->x ? 0 : 1);
            else used.insert(ws->y > ps->y ? 2 : 3);
        }
        const Rat dx[4] = {Rat(1), Rat(-1), Rat(0), Rat(0)};
        const Rat dy[4] = {Rat(0), Rat(0), Rat(1), Rat(-1)};
        bool done = false;
        for (int d = 0; d < 4 && !done; ++d) {
            if (used.count(d)) continue;
            for (int k = 2; k <= (int)cur.squares.size() * 4 + 8 && !done; ++k) {
                Rat x = ps->x + dx[d] * Rat(k);
                Rat y = ps->y + dy[d] * Rat(k);
                if (!chebyshev_free(x, y)) continue;
                // The cell must not sit inside the channel of an existing
                // edge; walk further out until it blocks nothing.
                cur.squares.push_back({v, x, y});
                bool breaks = false;
                for (const auto& e : placed_target.edges) {
                    if (e.first == v || e.second == v) continue;
                    if (!(sees(cur, e.first, e.second, Axis::Horizontal) ||
                          sees(cur, e.second, e.first, Axis::Horizontal) ||
                          sees(cur, e.first, e.second, Axis::Vertical) ||
                          sees(cur, e.second, e.first, Axis::Vertical))) {
                        breaks = true;
                        break;
                    }
                }
                if (breaks) cur.squares.pop_back();
                else done = true;
            }
        }
        if (!done) throw std::logic_error("tree_layout(grid): no free arm");
        cur = normalize_origin(cur);
        // Shift away incidental visibilities (at most two, in v's cross line).
        for (int guard = 0; guard < 8; ++guard) {
            Graph got = extract_graph(cur);
            std::vector<std::pair<int, int>> surplus;
            for (const auto& e : got.edges)
                if (!placed_target.has_edge(e.first, e.second)) surplus.push_back(e);
            if (surplus.empty()) break;
            cur = delete_edge_shift(cur, surplus.front().first, surplus.front().second);
        }
        cur = normalize_origin(cur);
    }
    return normalize_origin(cur);
}

// ---------------------------------------------------------------------------
// Free trees (max degree <= 5): root at a leaf so every vertex has at most 4
// children, then hand out geometric slots. Each vertex placed by a vertical
// edge owns a fresh horizontal band; band content is the owner, one aligned
// west chain and two east ladders skewed by +-1/2 steps. Vertical edges run
// in private columns allocated at the far west/east, so cross-band squares
// never share an axis overlap.
// ---------------------------------------------------------------------------

enum class Slot { Owner, HorizL, HorizU, HorizD };

struct FreePlan {
    std::map<int, std::vector<std::pair<int, Slot>>> assign; // v -> (child, slot)
};

bool plan_slots(const Graph& t, int v, int from, Slot type, FreePlan& plan) {
    std::vector<int> kids;
    for (int w : t.neighbors(v))
        if (w != from) kids.push_back(w);
    if (kids.empty()) return true;

    std::vector<Slot> slots;
    bool owner_down = true; // owners continue in their own vertical direction
    (void)owner_down;
    if (type == Slot::Owner)
        slots = {Slot::Owner, Slot::HorizL, Slot::HorizU, Slot::HorizD};
    else
        slots = {Slot::Owner, Slot::Owner, type}; // D, U, chain continuation
    if (kids.size() > slots.size()) return false;

    std::sort(kids.begin(), kids.end(), [&](int a, int b) {
        return t.degree(a) > t.degree(b);
    });
    // Try assignments, most demanding child first.
    std::vector<char> taken(slots.size(), 0);
    std::function<bool(std::size_t)> go = [&](std::size_t k) {
        if (k == kids.size()) return true;
        for (std::size_t si = 0; si < slots.size(); ++si) {
            if (taken[si]) continue;
            taken[si] = 1;
            FreePlan saved = plan;
            plan.assign[v].push_back({kids[k], slots[si]});
            if (plan_slots(t, kids[k], v, slots[si], plan) && go(k + 1)) return true;
            plan = saved;
            taken[si] = 0;
        }
        return false;
    };
    return go(0);
}

struct FreeBuilder {
    Layout l;
    Rat minX{0}, maxX{0}, minY{0}, maxY{0};
    Rat band_step;

    void add(int id, Rat x, Rat y) {
        l.squares.push_back({id, x, y});
        minX = rat_min(minX, x);
        maxX = rat_max(maxX, x);
        minY = rat_min(minY, y);
        maxY = rat_max(maxY, y);
    }

    Rat fresh_west() { return minX - Rat(3); }
    Rat fresh_east() { return maxX + Rat(3); }
    Rat fresh_bottom() { return minY - band_step; }
    Rat fresh_top() { return maxY + band_step; }
};

void build_free(const Graph& t, int v, Slot type, bool upward,
                const FreePlan& plan, FreeBuilder& b) {
    auto it = plan.assign.find(v);
    if (it == plan.assign.end()) return;
    const Square* me = b.l.find(v);
    Rat x = me->x, y = me->y;
    for (const auto& [c, slot] : it->second) {
        bool child_up = upward;
        switch (slot) {
            case Slot::Owner: {
                // Continue the vertical direction: owners inherited the
                // column; horizontal vertices may start one downward or
                // upward chain each.
                if (type == Slot::Owner) {
                    b.add(c, x, upward ? b.fresh_top() : b.fresh_bottom());
                } else {
                    // First vertical child goes down, second goes up.
                    bool down_used = false;
                    for (const auto& s : b.l.squares)
                        if (s.x == x && s.y < y && s.id != c) down_used = true;
                    child_up = down_used;
                    b.add(c, x, down_used ? b.fresh_top() : b.fresh_bottom());
                }
                build_free(t, c, Slot::Owner, child_up, plan, b);
                break;
            }
            case Slot::HorizL:
                b.add(c, b.fresh_west(), y);
                build_free(t, c, Slot::HorizL, upward, plan, b);
                break;
            case Slot::HorizU:
                b.add(c, b.fresh_east(), y + Rat(1, 2));
                build_free(t, c, Slot::HorizU, upward, plan, b);
                break;
            case Slot::HorizD:
                b.add(c, b.fresh_east(), y - Rat(1, 2));
                build_free(t, c, Slot::HorizD, upward, plan, b);
                break;
        }
    }
}

Layout tree_layout_free(const Graph& t) {
    // Root at a leaf so every vertex keeps at most four children.
    std::vector<int> leaves;
    for (int v : t.verts)
        if (t.degree(v) <= 1) leaves.push_back(v);
    for (int root : leaves) {
        FreePlan plan;
        if (!plan_slots(t, root, -1, Slot::Owner, plan)) continue;
        FreeBuilder b;
        b.l.kind = LayoutKind::Free;
        b.band_step = Rat((std::int64_t)t.n() + 3);
        b.add(root, Rat(0), Rat(0));
        build_free(t, root, Slot::Owner, false, plan, b);
        Layout out = normalize_origin(b.l);
        if (extract_graph(out) == t) return out;
    }
    throw std::logic_error("tree_layout(free): no feasible slot plan");
}

} // namespace

Layout tree_layout(const Graph& t, GraphClass cls) {
    if (!graph_is_tree(t)) throw std::invalid_argument("tree_layout: not a tree");
    int md = t.max_degree();
    int limit = cls == GraphClass::Usgv ? 4 : 5;
    if (md > limit)
        throw std::invalid_argument("tree_layout: degree bound violated (" +
                                    std::to_string(md) + " > " + std::to_string(limit) + ")");
    if (t.n() == 1) {
        Layout l;
        l.kind = cls == GraphClass::Usgv ? LayoutKind::Grid : LayoutKind::Free;
        l.squares.push_back({*t.verts.begin(), Rat(0), Rat(0)});
        return l;
    }
    Layout out = cls == GraphClass::Usgv ? tree_layout_grid(t) : tree_layout_free(t);
    if (!(extract_graph(out) == t))
        throw std::logic_error("tree_layout: postcondition failed");
    auto rep = validate_layout(out);
    if (!rep.ok()) throw std::logic_error("tree_layout: invalid layout produced");
    return out;
}

} // namespace usv
