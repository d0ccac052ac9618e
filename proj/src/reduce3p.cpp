#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>

#include "usv/reduce.hpp"

namespace usv {

void ThreePartitionInstance::check() const {
    if (B <= 0 || items.empty() || items.size() % 3 != 0)
        throw std::invalid_argument("3-partition: need B > 0 and 3m items");
    std::int64_t sum = 0;
    for (auto a : items) {
        if (!(4 * a > B && 2 * a < B))
            throw std::invalid_argument("3-partition: item " + std::to_string(a) +
                                        " outside (B/4, B/2)");
        sum += a;
    }
    if (sum != (std::int64_t)m() * B)
        throw std::invalid_argument("3-partition: item sum differs from m*B");
}

std::optional<std::vector<std::array<int, 3>>> solve_3partition(
    const ThreePartitionInstance& inst) {
    inst.check();
    const int n = (int)inst.items.size();
    std::vector<char> used(n, 0);
    std::vector<std::array<int, 3>> triples;
    std::function<bool()> go = [&]() {
        int first = -1;
        for (int i = 0; i < n; ++i)
            if (!used[i]) { first = i; break; }
        if (first < 0) return true;
        used[first] = 1;
        for (int j = first + 1; j < n; ++j) {
            if (used[j]) continue;
            used[j] = 1;
            for (int k = j + 1; k < n; ++k) {
                if (used[k]) continue;
                if (inst.items[first] + inst.items[j] + inst.items[k] != inst.B) continue;
                used[k] = 1;
                triples.push_back({first, j, k});
                if (go()) return true;
                triples.pop_back();
                used[k] = 0;
            }
            used[j] = 0;
        }
        used[first] = 0;
        return false;
    };
    if (go()) return triples;
    return std::nullopt;
}

namespace {

// Vertex numbering for the reduction graph. Frame vertices first, then the
// item ladders; labels record the construction roles.
struct FrameIds {
    std::int64_t B;
    int m;
    int u(int i, int j) const { return (i - 1) * (int)(B + 1) + j; }      // 1<=i<=m, 0<=j<=B
    int base_v() const { return m * (int)(B + 1) + 1; }                   // after u_{m+1,0}
    int u_last() const { return m * (int)(B + 1); }                       // u_{m+1,0}
    int v(int i, int j) const { return base_v() + (i - 1) * (int)(B + 1) + j; }
    int v_last() const { return base_v() + m * (int)(B + 1); }            // v_{m+1,0}
    int w(int i, int k) const { return v_last() + 1 + (i - 1) * 2 + (k - 1); } // 1<=i<=m+1
    int frame_count() const { return v_last() + 1 + 2 * (m + 1); }
};

} // namespace

Graph reduce_3partition(const ThreePartitionInstance& inst) {
    inst.check();
    for (auto a : inst.items)
        if (a <= 2)
            throw std::invalid_argument("3-partition: items must exceed 2 (scale first)");
    const int m = inst.m();
    const std::int64_t B = inst.B;
    FrameIds F{B, m};
    Graph g;
    auto label = [&](int id, const std::string& s) { g.labels[id] = s; };

    for (int i = 1; i <= m; ++i) {
        for (int j = 0; j <= B; ++j) {
            g.add_vertex(F.u(i, j));
            g.add_vertex(F.v(i, j));
            label(F.u(i, j), "u_" + std::to_string(i) + "," + std::to_string(j));
            label(F.v(i, j), "v_" + std::to_string(i) + "," + std::to_string(j));
        }
    }
    g.add_vertex(F.u_last());
    g.add_vertex(F.v_last());
    label(F.u_last(), "u_" + std::to_string(m + 1) + ",0");
    label(F.v_last(), "v_" + std::to_string(m + 1) + ",0");
    for (int i = 1; i <= m + 1; ++i) {
        g.add_vertex(F.w(i, 1));
        g.add_vertex(F.w(i, 2));
        label(F.w(i, 1), "w_" + std::to_string(i) + ",1");
        label(F.w(i, 2), "w_" + std::to_string(i) + ",2");
    }

    auto u_at = [&](int i, int j) { return i == m + 1 ? F.u_last() : F.u(i, j); };
    auto v_at = [&](int i, int j) { return i == m + 1 ? F.v_last() : F.v(i, j); };
    for (int i = 1; i <= m; ++i) {
        for (int j = 0; j <= B - 1; ++j) {
            g.add_edge(F.u(i, j), F.u(i, j + 1));
            g.add_edge(F.v(i, j), F.v(i, j + 1));
        }
        g.add_edge(F.u(i, (int)B), u_at(i + 1, 0));
        g.add_edge(F.v(i, (int)B), v_at(i + 1, 0));
        for (int j = 1; j <= B; ++j) g.add_edge(F.u(i, j), F.v(i, j));
    }
    for (int i = 1; i <= m + 1; ++i) {
        g.add_edge(u_at(i, 0), v_at(i, 0));
        g.add_edge(v_at(i, 0), F.w(i, 1));
        g.add_edge(F.w(i, 1), F.w(i, 2));
    }

    // Item ladders b_{i,j} / c_{i,j}.
    int next = F.frame_count();
    for (int i = 1; i <= (int)inst.items.size(); ++i) {
        const int a = (int)inst.items[i - 1];
        int b0 = next;
        int c0 = next + a;
        next += 2 * a;
        for (int j = 1; j <= a; ++j) {
            g.add_vertex(b0 + j - 1);
            g.add_vertex(c0 + j - 1);
            label(b0 + j - 1, "b_" + std::to_string(i) + "," + std::to_string(j));
            label(c0 + j - 1, "c_" + std::to_string(i) + "," + std::to_string(j));
            g.add_edge(b0 + j - 1, c0 + j - 1);
            if (j > 1) {
                g.add_edge(b0 + j - 2, b0 + j - 1);
                g.add_edge(c0 + j - 2, c0 + j - 1);
            }
        }
    }
    return g;
}

int reduction_vertex(const Graph& g, const std::string& label) {
    for (const auto& [id, s] : g.labels)
        if (s == label) return id;
    throw std::invalid_argument("no vertex labeled " + label);
}

Layout frame_layout_3partition(std::int64_t B, int m) {
    FrameIds F{B, m};
    Layout l;
    l.kind = LayoutKind::Grid;
    for (int i = 1; i <= m; ++i) {
        for (int j = 0; j <= B; ++j) {
            Rat x((i - 1) * 2 * (B + 1) + 2 * j);
            l.squares.push_back({F.u(i, j), x, Rat(0)});
            l.squares.push_back({F.v(i, j), x, Rat(2)});
        }
    }
    Rat xe(m * 2 * (B + 1));
    l.squares.push_back({F.u_last(), xe, Rat(0)});
    l.squares.push_back({F.v_last(), xe, Rat(2)});
    for (int i = 1; i <= m + 1; ++i) {
        Rat x((i - 1) * 2 * (B + 1));
        l.squares.push_back({F.w(i, 1), x, Rat(4)});
        l.squares.push_back({F.w(i, 2), x, Rat(6)});
    }
    return l;
}

RectilinearDrawing drawing_3partition(const ThreePartitionInstance& inst,
                                      const std::vector<std::array<int, 3>>& partition) {
    Layout w = witness_layout_3partition(inst, partition);
    RectilinearDrawing d;
    d.graph = reduce_3partition(inst);
    // Every witness coordinate is even; halving merges the scale-2 gaps.
    for (const auto& s : w.squares)
        d.pos[s.id] = {(int)(s.x.num / 2), (int)(s.y.num / 2)};
    auto rep = drawing_valid(d);
    if (!rep.ok())
        throw std::logic_error("drawing_3partition: invalid drawing: " +
                               rep.violations.front().what);
    return d;
}

Layout witness_layout_3partition(const ThreePartitionInstance& inst,
                                 const std::vector<std::array<int, 3>>& partition) {
    inst.check();
    const int m = inst.m();
    const std::int64_t B = inst.B;
    if ((int)partition.size() != m)
        throw std::invalid_argument("witness_layout_3partition: need m triples");
    for (const auto& tr : partition)
        if (inst.items[tr[0]] + inst.items[tr[1]] + inst.items[tr[2]] != B)
            throw std::invalid_argument("witness_layout_3partition: triple sum != B");

    Layout l = frame_layout_3partition(B, m);
    FrameIds F{B, m};

    // Ladder vertex base ids mirror reduce_3partition's numbering.
    std::vector<int> b_base(inst.items.size() + 1), c_base(inst.items.size() + 1);
    int next = F.frame_count();
    for (int i = 1; i <= (int)inst.items.size(); ++i) {
        b_base[i] = next;
        c_base[i] = next + (int)inst.items[i - 1];
        next += 2 * (int)inst.items[i - 1];
    }

    for (int comp = 1; comp <= m; ++comp) {
        std::int64_t p = (std::int64_t)(comp - 1) * 2 * (B + 1);
        std::int64_t col = p + 2; // occupied coordinates are p+2x, 1 <= x <= B
        for (int t = 0; t < 3; ++t) {
            int item = partition[comp - 1][t] + 1;
            const int a = (int)inst.items[item - 1];
            for (int j = 1; j <= a; ++j) {
                l.squares.push_back({b_base[item] + j - 1, Rat(col), Rat(4)});
                l.squares.push_back({c_base[item] + j - 1, Rat(col), Rat(6)});
                col += 2;
            }
        }
    }
    return l;
}

} // namespace usv
