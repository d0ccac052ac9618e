#include "usv/graph.hpp"

#include <functional>
#include <queue>

namespace usv {

namespace {

// Iterated neighbor-degree refinement (1-WL colors). Cheap and enough to
// prune the backtracking for the instance sizes we care about.
std::vector<int> wl_colors(const IndexedGraph& g) {
    std::vector<int> color(g.n());
    for (std::size_t i = 0; i < g.n(); ++i) color[i] = g.degree((int)i);
    for (std::size_t round = 0; round < g.n(); ++round) {
        std::vector<std::vector<int>> sig(g.n());
        for (std::size_t i = 0; i < g.n(); ++i) {
            sig[i].push_back(color[i]);
            std::vector<int> nb;
            for (int j : g.nbr[i]) nb.push_back(color[j]);
            std::sort(nb.begin(), nb.end());
            sig[i].insert(sig[i].end(), nb.begin(), nb.end());
        }
        std::map<std::vector<int>, int> remap;
        std::vector<int> next(g.n());
        for (std::size_t i = 0; i < g.n(); ++i) {
            auto it = remap.find(sig[i]);
            if (it == remap.end()) it = remap.emplace(sig[i], (int)remap.size()).first;
            next[i] = it->second;
        }
        if (next == color) break;
        color = next;
    }
    return color;
}

} // namespace

bool graph_isomorphic(const Graph& g1, const Graph& g2) {
    if (g1.n() != g2.n() || g1.m() != g2.m()) return false;
    IndexedGraph a(g1), b(g2);
    auto ca = wl_colors(a), cb = wl_colors(b);
    {
        auto ha = ca, hb = cb;
        std::sort(ha.begin(), ha.end());
        std::sort(hb.begin(), hb.end());
        if (ha != hb) return false;
    }
    const std::size_t n = a.n();
    std::vector<int> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = (int)i;
    // Most-constrained first: high degree, then connectivity to placed.
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return a.degree(x) > a.degree(y); });
    std::vector<int> seq;
    std::vector<char> placed(n, 0);
    while (seq.size() < n) {
        int best = -1, bestScore = -1;
        for (int v : order) {
            if (placed[v]) continue;
            int score = 0;
            for (int w : a.nbr[v]) score += placed[w] ? 2 : 0;
            score = score * 100 + a.degree(v);
            if (score > bestScore) { bestScore = score; best = v; }
        }
        placed[best] = 1;
        seq.push_back(best);
    }

    std::vector<int> map_ab(n, -1), used(n, 0);
    std::function<bool(std::size_t)> go = [&](std::size_t k) {
        if (k == n) return true;
        int v = seq[k];
        for (std::size_t u = 0; u < n; ++u) {
            if (used[u] || cb[u] != ca[v]) continue;
            bool okc = true;
            for (int w : a.nbr[v]) {
                if (map_ab[w] >= 0 && !b.adj[u][map_ab[w]]) { okc = false; break; }
            }
            if (okc) {
                // Also forbid extra edges to placed non-neighbors.
                for (std::size_t w = 0; w < n && okc; ++w)
                    if (map_ab[w] >= 0 && b.adj[u][map_ab[w]] && !a.adj[v][w]) okc = false;
            }
            if (!okc) continue;
            map_ab[v] = (int)u;
            used[u] = 1;
            if (go(k + 1)) return true;
            map_ab[v] = -1;
            used[u] = 0;
        }
        return false;
    };
    return go(0);
}

bool graph_connected(const Graph& g) {
    if (g.verts.empty()) return true;
    IndexedGraph ig(g);
    std::vector<char> vis(ig.n(), 0);
    std::queue<int> q;
    q.push(0);
    vis[0] = 1;
    std::size_t cnt = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : ig.nbr[v])
            if (!vis[w]) { vis[w] = 1; ++cnt; q.push(w); }
    }
    return cnt == ig.n();
}

bool graph_is_tree(const Graph& g) {
    if (g.verts.empty()) return false;
    return graph_connected(g) && g.m() + 1 == g.n();
}

bool graph_has_cycle_through(const Graph& g, int v) {
    // v lies on a cycle iff two of its neighbors are connected in G - v.
    Graph h = g;
    h.remove_vertex(v);
    auto nbrs = g.neighbors(v);
    if (nbrs.size() < 2) return false;
    IndexedGraph ih(h);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
        std::vector<char> vis(ih.n(), 0);
        std::queue<int> q;
        int s = ih.index_of.at(nbrs[i]);
        q.push(s);
        vis[s] = 1;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int w : ih.nbr[x])
                if (!vis[w]) { vis[w] = 1; q.push(w); }
        }
        for (std::size_t j = i + 1; j < nbrs.size(); ++j)
            if (vis[ih.index_of.at(nbrs[j])]) return true;
    }
    return false;
}

} // namespace usv
