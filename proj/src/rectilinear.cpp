#include "usv/rectilinear.hpp"

#include <stdexcept>

namespace usv {

ValidationReport drawing_valid(const RectilinearDrawing& d) {
    ValidationReport rep;
    for (int v : d.graph.verts)
        if (!d.pos.count(v))
            rep.violations.push_back({"vertex " + std::to_string(v) + " has no position"});
    if (!rep.ok()) return rep;
    std::map<std::pair<int, int>, int> at;
    for (const auto& [v, p] : d.pos) {
        auto it = at.find(p);
        if (it != at.end())
            rep.violations.push_back({"vertices " + std::to_string(it->second) + " and " +
                                      std::to_string(v) + " share a point"});
        else
            at[p] = v;
    }
    for (const auto& e : d.graph.edges) {
        auto [ux, uy] = d.pos.at(e.first);
        auto [vx, vy] = d.pos.at(e.second);
        if (ux != vx && uy != vy) {
            rep.violations.push_back({"edge {" + std::to_string(e.first) + "," +
                                      std::to_string(e.second) + "} is not axis-parallel"});
            continue;
        }
        for (const auto& [w, p] : d.pos) {
            if (w == e.first || w == e.second) continue;
            bool on = false;
            if (ux == vx && p.first == ux &&
                p.second >= std::min(uy, vy) && p.second <= std::max(uy, vy))
                on = true;
            if (uy == vy && p.second == uy &&
                p.first >= std::min(ux, vx) && p.first <= std::max(ux, vx))
                on = true;
            if (on)
                rep.violations.push_back({"vertex " + std::to_string(w) + " lies on edge {" +
                                          std::to_string(e.first) + "," +
                                          std::to_string(e.second) + "}"});
        }
    }
    return rep;
}

RectilinearDrawing layout_to_drawing(const Layout& l) {
    if (l.kind != LayoutKind::Grid)
        throw std::invalid_argument("layout_to_drawing: grid layouts only");
    auto rep = validate_layout(l);
    if (!rep.ok()) throw std::invalid_argument("layout_to_drawing: invalid layout");
    RectilinearDrawing d;
    d.graph = extract_graph(l);
    for (const auto& s : l.squares)
        d.pos[s.id] = {(int)s.x.num, (int)s.y.num};
    return d;
}

Layout drawing_to_weak_layout(const RectilinearDrawing& d) {
    auto rep = drawing_valid(d);
    if (!rep.ok()) throw std::invalid_argument("drawing_to_weak_layout: invalid drawing");
    int mx = 0, my = 0;
    bool first = true;
    for (const auto& [v, p] : d.pos) {
        if (first || p.first < mx) mx = p.first;
        if (first || p.second < my) my = p.second;
        first = false;
    }
    Layout l;
    l.kind = LayoutKind::Grid;
    for (const auto& [v, p] : d.pos)
        l.squares.push_back({v, Rat(2 * ((std::int64_t)p.first - mx)),
                             Rat(2 * ((std::int64_t)p.second - my))});
    return l;
}

Layout strengthen_weak_layout(const Layout& l, const Graph& g) {
    Graph cur = extract_graph(l);
    for (const auto& e : g.edges)
        if (!cur.has_edge(e.first, e.second))
            throw std::invalid_argument("strengthen_weak_layout: g is not a subgraph");
    Layout out = l;
    while (true) {
        std::vector<std::pair<int, int>> surplus;
        for (const auto& e : cur.edges)
            if (!g.has_edge(e.first, e.second)) surplus.push_back(e);
        if (surplus.empty()) return out;
        // Lexicographically first surplus edge; each shift must remove exactly
        // that edge and nothing else.
        auto e = surplus.front();
        out = delete_edge_shift(out, e.first, e.second);
        Graph next = extract_graph(out);
        if (next.m() + 1 != cur.m())
            throw std::logic_error("strengthen_weak_layout: shift changed extra edges");
        cur = std::move(next);
    }
}

} // namespace usv
