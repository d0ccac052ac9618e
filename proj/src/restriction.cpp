#include "usv/restriction.hpp"

#include <stdexcept>

namespace usv {

char lrdu_char(LrduLabel x) {
    switch (x) {
        case LrduLabel::L: return 'L';
        case LrduLabel::R: return 'R';
        case LrduLabel::D: return 'D';
        default: return 'U';
    }
}

char hv_char(HvLabel x) { return x == HvLabel::H ? 'H' : 'V'; }

namespace {

// Canonical geometric reading of an LRDU label: the ordered pair (a, b) such
// that the label asserts R_a ⊢ R_b on the given axis. R means u sees v
// rightward, L means v sees u rightward; D means u above v, U means v above u.
struct Port {
    int left_or_top;
    int right_or_bottom;
    Axis axis;
};

Port port_of(const std::pair<int, int>& e, LrduLabel x) {
    switch (x) {
        case LrduLabel::R: return {e.first, e.second, Axis::Horizontal};
        case LrduLabel::L: return {e.second, e.first, Axis::Horizontal};
        case LrduLabel::D: return {e.first, e.second, Axis::Vertical};
        default: return {e.second, e.first, Axis::Vertical};
    }
}

} // namespace

bool restriction_valid(const Graph& g, const Restriction& r) {
    if (r.mode == Restriction::Mode::Lrdu) {
        // Labeling must cover exactly E, one orientation per edge.
        std::set<std::pair<int, int>> covered;
        for (const auto& [e, lab] : r.lrdu) {
            auto key = std::minmax(e.first, e.second);
            if (!g.has_edge(e.first, e.second))
                throw std::invalid_argument("restriction references non-edge");
            if (!covered.insert({key.first, key.second}).second)
                throw std::invalid_argument("edge labeled twice");
        }
        if (covered.size() != g.m())
            throw std::invalid_argument("restriction does not cover E");
        // Validity: for every (u,v) labeled X and w outside {u,v}, no second
        // X leaving u or entering v, and no complement leaving v or entering
        // u. Normalizing each label to its geometric port pair, this is
        // exactly per-vertex uniqueness of each of the four ports.
        std::map<std::pair<int, int>, int> port_use; // (vertex, port id 0..3)
        for (const auto& [e, lab] : r.lrdu) {
            Port p = port_of(e, lab);
            int out_port = p.axis == Axis::Horizontal ? 0 : 2; // sees right / sees down
            int in_port = out_port + 1;
            if (++port_use[{p.left_or_top, out_port}] > 1) return false;
            if (++port_use[{p.right_or_bottom, in_port}] > 1) return false;
        }
        return true;
    }
    std::set<std::pair<int, int>> covered;
    std::map<int, int> hcount, vcount;
    for (const auto& [e, lab] : r.hv) {
        if (!g.has_edge(e.first, e.second))
            throw std::invalid_argument("restriction references non-edge");
        if (!covered.insert(e).second) throw std::invalid_argument("edge labeled twice");
        if (lab == HvLabel::H) { hcount[e.first]++; hcount[e.second]++; }
        else { vcount[e.first]++; vcount[e.second]++; }
    }
    if (covered.size() != g.m())
        throw std::invalid_argument("restriction does not cover E");
    for (auto& [v, c] : hcount)
        if (c > 2) return false;
    for (auto& [v, c] : vcount)
        if (c > 2) return false;
    return true;
}

bool layout_satisfies(const Layout& l, const Restriction& r) {
    Graph g = extract_graph(l);
    if (r.mode == Restriction::Mode::Lrdu) {
        std::set<std::pair<int, int>> covered;
        for (const auto& [e, lab] : r.lrdu) {
            auto key = std::minmax(e.first, e.second);
            covered.insert({key.first, key.second});
            Port p = port_of(e, lab);
            if (!sees(l, p.left_or_top, p.right_or_bottom, p.axis)) return false;
        }
        if (covered != g.edges)
            throw std::invalid_argument("restriction domain differs from layout edges");
        return true;
    }
    std::set<std::pair<int, int>> covered;
    for (const auto& [e, lab] : r.hv) {
        covered.insert(e);
        bool h = sees(l, e.first, e.second, Axis::Horizontal) ||
                 sees(l, e.second, e.first, Axis::Horizontal);
        bool v = sees(l, e.first, e.second, Axis::Vertical) ||
                 sees(l, e.second, e.first, Axis::Vertical);
        if (lab == HvLabel::H && !h) return false;
        if (lab == HvLabel::V && !v) return false;
    }
    if (covered != g.edges)
        throw std::invalid_argument("restriction domain differs from layout edges");
    return true;
}

} // namespace usv
