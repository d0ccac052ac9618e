#include "usv/families.hpp"

#include <array>
#include <functional>
#include <random>
#include <stdexcept>

namespace usv {

Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: n >= 3");
    Graph g;
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph make_clique(int n) {
    if (n < 1) throw std::invalid_argument("clique: n >= 1");
    Graph g;
    for (int i = 0; i < n; ++i) {
        g.add_vertex(i);
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    }
    return g;
}

Graph make_biclique(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("biclique: parts >= 1");
    Graph g;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

Graph make_path(int n) {
    if (n < 1) throw std::invalid_argument("path: n >= 1");
    Graph g;
    g.add_vertex(0);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph make_gn(int n) {
    if (n < 3) throw std::invalid_argument("gn: n >= 3");
    // Vertices: u_1..u_n -> 0..n-1, v_2..v_n -> n..2n-2, w -> 2n-1.
    Graph g;
    auto u = [&](int i) { return i - 1; };
    auto v = [&](int i) { return n + i - 2; };
    const int w = 2 * n - 1;
    for (int i = 2; i <= n - 1; ++i) {
        g.add_edge(u(i), u(i + 1));
        g.add_edge(v(i), v(i + 1));
        g.add_edge(u(i), v(i));
    }
    g.add_edge(u(1), u(2));
    g.add_edge(u(n), v(n));
    g.add_edge(u(1), w);
    g.add_edge(v(n), w);
    g.labels[w] = "w";
    for (int i = 1; i <= n; ++i) g.labels[u(i)] = "u_" + std::to_string(i);
    for (int i = 2; i <= n; ++i) g.labels[v(i)] = "v_" + std::to_string(i);
    return g;
}

Graph make_random_tree(int n, int maxdeg, std::uint64_t seed) {
    if (n < 1 || maxdeg < 1) throw std::invalid_argument("random_tree: bad parameters");
    std::mt19937_64 rng(seed);
    Graph g;
    g.add_vertex(0);
    for (int v = 1; v < n; ++v) {
        std::vector<int> candidates;
        for (int u = 0; u < v; ++u)
            if (g.degree(u) < maxdeg) candidates.push_back(u);
        if (candidates.empty()) throw std::logic_error("random_tree: stuck");
        int u = candidates[rng() % candidates.size()];
        g.add_edge(u, v);
    }
    return g;
}

VStructure v_structure(const Layout& l) {
    VStructure s;
    for (const auto& sq : l.squares) s.verts.push_back(sq.id);
    std::sort(s.verts.begin(), s.verts.end());
    for (const auto& f : visibility_relation(l)) {
        if (f.axis == Axis::Horizontal) s.hor.insert({f.from, f.to});
        else s.ver.insert({f.from, f.to});
    }
    return s;
}

namespace {

using Rel = std::set<std::pair<int, int>>;

Rel invert(const Rel& r) {
    Rel out;
    for (auto& p : r) out.insert({p.second, p.first});
    return out;
}

// Out/in degree profile per vertex in both relations; a cheap invariant for
// pruning the bijection search.
struct RelPair {
    Rel a, b;
};

bool rel_isomorphic(const std::vector<int>& v1, const RelPair& r1,
                    const std::vector<int>& v2, const RelPair& r2) {
    if (v1.size() != v2.size()) return false;
    if (r1.a.size() != r2.a.size() || r1.b.size() != r2.b.size()) return false;
    const std::size_t n = v1.size();
    auto profile = [](const std::vector<int>& vs, const RelPair& r) {
        std::map<int, std::array<int, 4>> p;
        for (int v : vs) p[v] = {0, 0, 0, 0};
        for (auto& e : r.a) { p[e.first][0]++; p[e.second][1]++; }
        for (auto& e : r.b) { p[e.first][2]++; p[e.second][3]++; }
        return p;
    };
    auto p1 = profile(v1, r1), p2 = profile(v2, r2);
    std::vector<int> map1(n, -1);
    std::vector<char> used(n, 0);
    std::function<bool(std::size_t)> go = [&](std::size_t k) {
        if (k == n) return true;
        int x = v1[k];
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j]) continue;
            int y = v2[j];
            if (p1.at(x) != p2.at(y)) continue;
            bool ok = true;
            for (std::size_t i = 0; i < k && ok; ++i) {
                int px = v1[i], py = v2[map1[i]];
                if (r1.a.count({x, px}) != r2.a.count({y, py})) ok = false;
                if (r1.a.count({px, x}) != r2.a.count({py, y})) ok = false;
                if (r1.b.count({x, px}) != r2.b.count({y, py})) ok = false;
                if (r1.b.count({px, x}) != r2.b.count({py, y})) ok = false;
            }
            if (!ok) continue;
            map1[k] = (int)j;
            used[j] = 1;
            if (go(k + 1)) return true;
            used[j] = 0;
        }
        return false;
    };
    return go(0);
}

} // namespace

bool v_isomorphic(const Layout& l1, const Layout& l2) {
    VStructure s1 = v_structure(l1), s2 = v_structure(l2);
    const Rel H = s1.hor, V = s1.ver;
    const Rel Hi = invert(H), Vi = invert(V);
    // (x, y) with x in {H, H^-1}, y in {V, V^-1}, matched as (x, y) or (y, x).
    const std::array<RelPair, 8> candidates = {{
        {H, V}, {Hi, V}, {H, Vi}, {Hi, Vi}, {V, H}, {Vi, H}, {V, Hi}, {Vi, Hi},
    }};
    for (const auto& c : candidates)
        if (rel_isomorphic(s1.verts, c, s2.verts, {s2.hor, s2.ver})) return true;
    return false;
}

ConditionVerdict necessary_conditions(const Graph& g, GraphClass cls) {
    if (cls == GraphClass::Usgv) {
        for (int v : g.verts)
            if (g.degree(v) > 4)
                return {false, "vertex " + std::to_string(v) + " has degree > 4"};
        IndexedGraph ig(g);
        for (std::size_t a = 0; a < ig.n(); ++a) {
            for (std::size_t b = a + 1; b < ig.n(); ++b) {
                int common = 0;
                for (int w : ig.nbr[a])
                    if (ig.adj[b][w]) ++common;
                if (ig.adj[a][b] && common > 0)
                    return {false, "adjacent vertices " + std::to_string(ig.ids[a]) +
                                       "," + std::to_string(ig.ids[b]) +
                                       " share a neighbor"};
                if (common > 2)
                    return {false, "vertices " + std::to_string(ig.ids[a]) + "," +
                                       std::to_string(ig.ids[b]) +
                                       " share more than 2 neighbors"};
            }
        }
        return {true, ""};
    }
    for (int v : g.verts) {
        if (g.degree(v) >= 7 && !graph_has_cycle_through(g, v))
            return {false, "degree-" + std::to_string(g.degree(v)) + " vertex " +
                               std::to_string(v) + " lies on no cycle"};
    }
    return {true, ""};
}

namespace {

bool is_cycle_graph(const Graph& g, int& len) {
    if (g.n() < 3 || g.m() != g.n() || !graph_connected(g)) return false;
    for (int v : g.verts)
        if (g.degree(v) != 2) return false;
    len = (int)g.n();
    return true;
}

bool is_clique_graph(const Graph& g, int& k) {
    std::size_t n = g.n();
    if (g.m() != n * (n - 1) / 2) return false;
    k = (int)n;
    return true;
}

bool is_biclique_graph(const Graph& g, int& a, int& b) {
    if (g.verts.empty() || g.m() == 0) return false;
    // Complete bipartite iff vertices split into two neighborhood classes,
    // each vertex adjacent to exactly the other class.
    std::map<std::vector<int>, std::vector<int>> nbclasses;
    for (int v : g.verts) {
        auto nb = g.neighbors(v);
        std::sort(nb.begin(), nb.end());
        nbclasses[nb].push_back(v);
    }
    if (nbclasses.size() != 2) return false;
    auto it = nbclasses.begin();
    auto& [nb1, side1] = *it;
    ++it;
    auto& [nb2, side2] = *it;
    std::vector<int> s1 = side1, s2 = side2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (nb1 != s2 || nb2 != s1) return false;
    a = (int)std::min(s1.size(), s2.size());
    b = (int)std::max(s1.size(), s2.size());
    return true;
}

} // namespace

Classification classify(const Graph& g, GraphClass cls) {
    int len = 0, k = 0, a = 0, b = 0;
    if (is_cycle_graph(g, len)) {
        if (cls == GraphClass::Usgv)
            return {len >= 4 ? ClassifyAnswer::Yes : ClassifyAnswer::No,
                    "cycle rule: C_i in USGV iff i >= 4"};
        return {ClassifyAnswer::Yes, "cycle rule: C_i in USV for every i"};
    }
    if (is_clique_graph(g, k)) {
        if (cls == GraphClass::Usgv)
            return {k <= 2 ? ClassifyAnswer::Yes : ClassifyAnswer::No,
                    "clique rule: K_i in USGV iff i <= 2"};
        return {k <= 4 ? ClassifyAnswer::Yes : ClassifyAnswer::No,
                "clique rule: K_i in USV iff i <= 4"};
    }
    if (is_biclique_graph(g, a, b)) {
        if (cls == GraphClass::Usgv) {
            bool yes = (a == 1 && b <= 4) || (a == 2 && b == 2);
            return {yes ? ClassifyAnswer::Yes : ClassifyAnswer::No,
                    "biclique rule: K_{i,j} in USGV iff (i=1, j<=4) or (i=j=2)"};
        }
        bool yes = (a <= 2 && b <= 6) || (a == 3 && b <= 4);
        return {yes ? ClassifyAnswer::Yes : ClassifyAnswer::No,
                "biclique rule: K_{i,j} in USV iff (i<=2, j<=6) or (i=3, 3<=j<=4)"};
    }
    if (graph_is_tree(g)) {
        int md = g.max_degree();
        if (cls == GraphClass::Usgv)
            return {md <= 4 ? ClassifyAnswer::Yes : ClassifyAnswer::No,
                    "tree rule: T in USGV iff max degree <= 4"};
        if (md <= 5) return {ClassifyAnswer::Yes, "tree rule: max degree <= 5"};
        if (md >= 7) return {ClassifyAnswer::No, "tree rule: degree-7 vertex on no cycle"};
        return {ClassifyAnswer::Unknown, "tree rule: degree-6 trees undecided here"};
    }
    auto nc = necessary_conditions(g, cls);
    if (!nc.pass) return {ClassifyAnswer::No, "necessary condition: " + nc.reason};
    return {ClassifyAnswer::Unknown, "no closed-form rule applies"};
}

} // namespace usv
