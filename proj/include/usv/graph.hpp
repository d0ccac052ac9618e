#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace usv {

/// Undirected simple graph over arbitrary non-negative integer vertex ids,
/// with optional role labels (used by the reduction generators).
struct Graph {
    std::set<int> verts;
    std::set<std::pair<int, int>> edges; // normalized a < b
    std::map<int, std::string> labels;

    void add_vertex(int v) { verts.insert(v); }

    void add_edge(int a, int b) {
        if (a == b) throw std::invalid_argument("Graph: loop edge");
        if (a > b) std::swap(a, b);
        verts.insert(a);
        verts.insert(b);
        edges.insert({a, b});
    }

    bool has_edge(int a, int b) const {
        if (a > b) std::swap(a, b);
        return edges.count({a, b}) > 0;
    }

    void remove_edge(int a, int b) {
        if (a > b) std::swap(a, b);
        edges.erase({a, b});
    }

    void remove_vertex(int v) {
        verts.erase(v);
        labels.erase(v);
        for (auto it = edges.begin(); it != edges.end();) {
            if (it->first == v || it->second == v) it = edges.erase(it);
            else ++it;
        }
    }

    std::size_t n() const { return verts.size(); }
    std::size_t m() const { return edges.size(); }

    int degree(int v) const {
        int d = 0;
        for (const auto& e : edges)
            if (e.first == v || e.second == v) ++d;
        return d;
    }

    std::vector<int> neighbors(int v) const {
        std::vector<int> out;
        for (const auto& e : edges) {
            if (e.first == v) out.push_back(e.second);
            else if (e.second == v) out.push_back(e.first);
        }
        return out;
    }

    int max_degree() const {
        int best = 0;
        for (int v : verts) best = std::max(best, degree(v));
        return best;
    }

    bool operator==(const Graph& o) const {
        return verts == o.verts && edges == o.edges;
    }
};

/// Adjacency-matrix view with contiguous indices; the workhorse for
/// isomorphism testing and the recognition solvers.
struct IndexedGraph {
    std::vector<int> ids;            // index -> original id
    std::map<int, int> index_of;     // original id -> index
    std::vector<std::vector<char>> adj;
    std::vector<std::vector<int>> nbr;

    explicit IndexedGraph(const Graph& g) {
        ids.assign(g.verts.begin(), g.verts.end());
        for (std::size_t i = 0; i < ids.size(); ++i) index_of[ids[i]] = (int)i;
        adj.assign(ids.size(), std::vector<char>(ids.size(), 0));
        nbr.assign(ids.size(), {});
        for (const auto& e : g.edges) {
            int a = index_of.at(e.first), b = index_of.at(e.second);
            adj[a][b] = adj[b][a] = 1;
            nbr[a].push_back(b);
            nbr[b].push_back(a);
        }
        for (auto& v : nbr) std::sort(v.begin(), v.end());
    }

    std::size_t n() const { return ids.size(); }
    int degree(int i) const { return (int)nbr[i].size(); }
};

bool graph_isomorphic(const Graph& g1, const Graph& g2);
bool graph_connected(const Graph& g);
bool graph_is_tree(const Graph& g);
bool graph_has_cycle_through(const Graph& g, int v);

} // namespace usv
