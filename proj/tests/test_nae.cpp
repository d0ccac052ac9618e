#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "usv/io.hpp"
#include "usv/reduce.hpp"

using namespace usv;

namespace {

std::vector<Clause> fig10() {
    return {{{1, -2, 3}}, {{1, 3, -4}}, {{-2, 3, 4}}};
}

Assignment assign(std::initializer_list<bool> vals, int total) {
    Assignment a;
    a.value.assign(total + 1, 0);
    int v = 1;
    for (bool b : vals) a.value[v++] = b;
    return a;
}

} // namespace

TEST_CASE("nae_satisfied basics") {
    std::vector<Clause> one{{{1, 2, 3}}};
    CHECK(nae_satisfied(one, assign({true, false, false}, 3)));
    CHECK_FALSE(nae_satisfied(one, assign({true, true, true}, 3)));
    // NAE is self-complementary.
    std::vector<Clause> both{{{1, 2, 3}}, {{-1, -2, -3}}};
    CHECK(nae_satisfied(both, assign({true, false, false}, 3)));
}

TEST_CASE("the fig10 formula: reference assignment NAE-satisfies it") {
    CHECK(nae_satisfied(fig10(), assign({false, true, true, false}, 4)));
    // x2 = false turns the first clause all-true.
    CHECK_FALSE(nae_satisfied(fig10(), assign({true, false, true, true}, 4)));
}

TEST_CASE("clause complementation happens for two negations") {
    std::vector<Clause> raw{{{1, -2, -3}}};
    NaeFormula f = normalize_nae(raw, 3);
    // The complemented clause {-1, 2, 3} must appear among the real clauses.
    bool found = false;
    for (const auto& c : f.clauses) {
        auto l = c.lits;
        std::sort(l.begin(), l.end());
        if (l == std::array<Lit, 3>{-1, 2, 3}) found = true;
        if (l == std::array<Lit, 3>{-3, -2, 1}) CHECK(false);
    }
    CHECK(found);
}

TEST_CASE("normalization invariants hold and are stable") {
    NaeFormula f = normalize_nae(fig10(), 4);
    CHECK(f.normalized);
    CHECK(nae_invariant_violations(f).empty());
    CHECK(f.clauses.size() % 2 == 0);
    // Determinism: same input, same output.
    NaeFormula g = normalize_nae(fig10(), 4);
    CHECK(f.clauses.size() == g.clauses.size());
    for (std::size_t i = 0; i < f.clauses.size(); ++i)
        CHECK(f.clauses[i].lits == g.clauses[i].lits);
}

TEST_CASE("normalization preserves NAE-satisfiability both ways") {
    std::mt19937_64 rng(51);
    int sat_count = 0, unsat_count = 0;
    for (int iter = 0; iter < 40; ++iter) {
        int n = 3 + (int)(rng() % 4);
        int m = 1 + (int)(rng() % 5);
        std::vector<Clause> raw;
        for (int j = 0; j < m; ++j) {
            std::vector<int> vars(n);
            for (int i = 0; i < n; ++i) vars[i] = i + 1;
            std::shuffle(vars.begin(), vars.end(), rng);
            Clause c{};
            for (int k = 0; k < 3; ++k)
                c.lits[k] = rng() % 2 ? vars[k] : -vars[k];
            raw.push_back(c);
        }
        // Reference satisfiability of the raw formula by brute force.
        bool raw_sat = false;
        for (std::uint64_t mask = 0; mask < (1ull << n) && !raw_sat; ++mask) {
            Assignment a;
            a.value.assign(n + 1, 0);
            for (int v = 1; v <= n; ++v) a.value[v] = (mask >> (v - 1)) & 1;
            raw_sat = nae_satisfied(raw, a);
        }
        NaeFormula f = normalize_nae(raw, n);
        CHECK(nae_invariant_violations(f).empty());
        auto phi = solve_nae(f);
        CHECK(phi.has_value() == raw_sat);
        if (phi) {
            CHECK(nae_satisfied(f.clauses, *phi));
            // The assignment projects onto the original variables.
            Assignment proj;
            proj.value.assign(n + 1, 0);
            for (int v = 1; v <= n; ++v) proj.value[v] = phi->value[v];
            CHECK(nae_satisfied(raw, proj));
            ++sat_count;
        } else {
            ++unsat_count;
        }
    }
    CHECK(sat_count > 0);
    CHECK(unsat_count > 0);
}

TEST_CASE("reduce_nae vertex count and gadget structure") {
    NaeFormula f = normalize_nae(fig10(), 4);
    Graph g = reduce_nae(f);
    int m = f.half(), n = f.nvars;
    CHECK((int)g.n() == 12 * m + 27 * n + 4);

    // Every {c_j, c^1_j, c^2_j, c_{j+1}} induces a K4.
    auto id = [&](const std::string& lab) { return reduction_vertex(g, lab); };
    for (int j = 0; j + 1 <= 2 * m; j += std::max(1, m / 2)) {
        int a = id("c_" + std::to_string(j));
        int b = id("c^1_" + std::to_string(j));
        int c = id("c^2_" + std::to_string(j));
        int d = id("c_" + std::to_string(j + 1));
        for (auto [u, v] : {std::pair{a, b}, {a, c}, {a, d}, {b, c}, {b, d}, {c, d}})
            CHECK(g.has_edge(u, v));
    }

    // Role-specific degrees, per the edge rules.
    CHECK(g.degree(id("c_0")) == 3);
    CHECK(g.degree(id("c_1")) == 9);   // two K4 triples + three literals
    CHECK(g.degree(id("c_" + std::to_string(2 * m))) == 9);
    CHECK(g.degree(id("c^1_0")) == 4);
    CHECK(g.degree(id("c^1_1")) == 5);
    CHECK(g.degree(id("x_1")) == 9);
    CHECK(g.degree(id("x_" + std::to_string(n + 1))) == 3);
    CHECK(g.degree(id("t_1")) == 5);
    CHECK(g.degree(id("f1_1")) == 5);
    CHECK(g.degree(id("l^1_1")) == 5);
    CHECK(g.degree(id("h1_t_1")) == 3);
    CHECK(g.degree(id("h2_t_1")) == 4);
    CHECK(g.degree(id("h0_t_1")) == 4);
    CHECK(g.degree(id("h3_t_1")) == 4);
    CHECK(g.degree(id("h4_t_1")) == 3);

    // t-arrow degree: pathway plus one edge per positive occurrence.
    int occ1 = 0;
    for (const auto& c : f.clauses)
        for (Lit l : c.lits) occ1 += l == 1;
    CHECK(g.degree(id("t>_1")) == 6 + occ1);
}

TEST_CASE("the N(t->) neighborhood forms the stated path") {
    NaeFormula f = normalize_nae(fig10(), 4);
    Graph g = reduce_nae(f);
    auto id = [&](const std::string& lab) { return reduction_vertex(g, lab); };
    // h^1 and h^4 are the path endpoints among N(t->): degree-3 vertices
    // adjacent to both arrows and exactly one other neighborhood member.
    int tr = id("t>_1"), tl = id("t<_1");
    auto nbrs = g.neighbors(tr);
    std::set<int> nset(nbrs.begin(), nbrs.end());
    int endpoints = 0;
    for (int v : nbrs) {
        int inside = 0;
        for (int w : g.neighbors(v)) inside += nset.count(w) && w != tl;
        if (inside == 1) ++endpoints;
    }
    CHECK(endpoints == 2);
    CHECK(nset.count(id("h1_t_1")) == 1);
    CHECK(nset.count(id("t_1")) == 1);
}

TEST_CASE("witness layout rejects a non-satisfying assignment") {
    NaeFormula f = normalize_nae(fig10(), 4);
    Assignment bad;
    bad.value.assign(f.nvars + 1, 1);
    bad.value[2] = 0; // first original clause becomes all-true
    CHECK_THROWS_AS(witness_layout_nae(f, bad), std::invalid_argument);
}

TEST_CASE("witness layout matches the reduction graph exactly") {
    NaeFormula f = normalize_nae(fig10(), 4);
    auto phi = solve_nae(f);
    REQUIRE(phi.has_value());
    Layout w = witness_layout_nae(f, *phi); // extraction equality asserted inside
    CHECK(validate_layout(w).ok());
    CHECK(w.kind == LayoutKind::Free);

    Graph g = reduce_nae(f);
    auto id = [&](const std::string& lab) { return reduction_vertex(g, lab); };
    // Backbone pattern: c^1 above the row, c^2 below.
    const Square* c0 = w.find(id("c_0"));
    const Square* c01 = w.find(id("c^1_0"));
    const Square* c02 = w.find(id("c^2_0"));
    CHECK(c0->y == Rat(0));
    CHECK(c01->y > Rat(0));
    CHECK(c02->y < Rat(0));
    CHECK(c01->x == c0->x + Rat(2));

    // x_i true iff x_i sees t_i downward (t_i below the backbone).
    for (int i = 1; i <= f.nvars; ++i) {
        if ((int)w.squares.size() == 0) break;
        const Square* t = w.find(id("t_" + std::to_string(i)));
        if (phi->get(i)) CHECK(t->y < Rat(0));
        else CHECK(t->y > Rat(0));
        CHECK(sees(w, phi->get(i) ? id("x_" + std::to_string(i)) : id("t_" + std::to_string(i)),
                   phi->get(i) ? id("t_" + std::to_string(i)) : id("x_" + std::to_string(i)),
                   Axis::Vertical));
    }
}

TEST_CASE("structure checks reject malformed formulas") {
    NaeFormula f;
    f.nvars = 3;
    f.clauses = {{{1, 2, 3}}};
    CHECK_THROWS_AS(check_nae_structure(f), std::invalid_argument); // odd count
    f.clauses = {{{1, 2, 3}}, {{1, 2, -3}}};
    CHECK_THROWS_AS(check_nae_structure(f), std::invalid_argument); // copies differ
    f.clauses = {{{1, 2, 2}}, {{1, 2, 2}}};
    CHECK_THROWS_AS(check_nae_structure(f), std::invalid_argument); // repeated var
    f.clauses = {{{-1, -2, 3}}, {{-1, -2, 3}}};
    CHECK_THROWS_AS(check_nae_structure(f), std::invalid_argument); // two negations
    f.clauses = {{{1, -2, 3}}, {{1, -2, 3}}};
    CHECK_NOTHROW(check_nae_structure(f));
}

TEST_CASE("normalization is idempotent up to metadata") {
    NaeFormula f = normalize_nae(fig10(), 4);
    NaeFormula again = normalize_nae(f.clauses, f.nvars);
    REQUIRE(again.clauses.size() == f.clauses.size());
    for (std::size_t i = 0; i < f.clauses.size(); ++i)
        CHECK(again.clauses[i].lits == f.clauses[i].lits);
}

TEST_CASE("the reduction pipeline is byte-deterministic") {
    NaeFormula f1 = normalize_nae(fig10(), 4);
    NaeFormula f2 = normalize_nae(fig10(), 4);
    CHECK(emit_graph(reduce_nae(f1)) == emit_graph(reduce_nae(f2)));
    auto phi = solve_nae(f1);
    CHECK(emit_layout(witness_layout_nae(f1, *phi)) ==
          emit_layout(witness_layout_nae(f2, *phi)));
}
