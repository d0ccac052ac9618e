#pragma once

#include <cstdint>
#include <string>

#include "usv/geometry.hpp"
#include "usv/graph.hpp"

namespace usv {

Graph make_cycle(int n);
Graph make_clique(int n);
Graph make_biclique(int a, int b);
Graph make_path(int n);
/// The family G_n separating USGV from finite forbidden-subgraph
/// characterisations: u_1..u_n, v_2..v_n and an apex w joined to u_1 and v_n.
Graph make_gn(int n);
Graph make_random_tree(int n, int maxdeg, std::uint64_t seed);

/// Relational structure of a layout: vertex set plus the two directed
/// visibility relations split by axis.
struct VStructure {
    std::vector<int> verts;
    std::set<std::pair<int, int>> hor; // (a, b): a sees b from the left
    std::set<std::pair<int, int>> ver; // (a, b): a above sees b
};

VStructure v_structure(const Layout& l);

/// True iff the relational structures are isomorphic allowing inversion of
/// either relation and swapping the two axes (8 candidate signatures).
bool v_isomorphic(const Layout& l1, const Layout& l2);

enum class GraphClass { Usgv, Usv };

struct ConditionVerdict {
    bool pass = true;
    std::string reason; // names the violated condition and a witness
};

/// Necessary membership conditions: the degree/common-neighborhood limits for
/// grid layouts, and the degree-7-on-a-cycle rule for free layouts.
ConditionVerdict necessary_conditions(const Graph& g, GraphClass cls);

enum class ClassifyAnswer { Yes, No, Unknown };

struct Classification {
    ClassifyAnswer answer = ClassifyAnswer::Unknown;
    std::string rule; // which closed-form rule fired
};

/// Closed-form classification for cycles, cliques, bicliques and trees, plus
/// the necessary conditions; anything else is Unknown.
Classification classify(const Graph& g, GraphClass cls);

} // namespace usv
