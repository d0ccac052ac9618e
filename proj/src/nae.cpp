#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>

#include "usv/reduce.hpp"

namespace usv {

namespace {

std::array<Lit, 3> sorted_lits(const Clause& c) {
    auto l = c.lits;
    std::sort(l.begin(), l.end());
    return l;
}

int neg_count(const Clause& c) {
    int k = 0;
    for (Lit l : c.lits) k += l < 0;
    return k;
}

void check_raw_clause(const Clause& c, int nvars) {
    std::set<int> vars;
    for (Lit l : c.lits) {
        int v = std::abs(l);
        if (v < 1 || v > nvars) throw std::invalid_argument("clause literal out of range");
        if (!vars.insert(v).second)
            throw std::invalid_argument("variable occurs twice in a clause");
    }
}

} // namespace

bool nae_satisfied(const std::vector<Clause>& clauses, const Assignment& a) {
    for (const auto& c : clauses) {
        bool any_true = false, any_false = false;
        for (Lit l : c.lits) {
            bool val = a.get(std::abs(l)) == (l > 0);
            (val ? any_true : any_false) = true;
        }
        if (!any_true || !any_false) return false;
    }
    return true;
}

void check_nae_structure(const NaeFormula& f) {
    if (f.clauses.empty() || f.clauses.size() % 2 != 0)
        throw std::invalid_argument("formula must have 2m clauses");
    const int m = f.half();
    for (const auto& c : f.clauses) {
        check_raw_clause(c, f.nvars);
        if (neg_count(c) > 1)
            throw std::invalid_argument("clause has more than one negated literal");
    }
    for (int j = 0; j < m; ++j)
        if (sorted_lits(f.clauses[j]) != sorted_lits(f.clauses[j + m]))
            throw std::invalid_argument("clause duplication c_{m+i} = c_i violated");
}

std::vector<std::string> nae_invariant_violations(const NaeFormula& f) {
    std::vector<std::string> out;
    try {
        check_nae_structure(f);
    } catch (const std::exception& e) {
        out.push_back(e.what());
        return out;
    }
    const int m = f.half();
    const int M = 2 * m;
    // Occurrence positions (1-based clause indices) per literal.
    std::map<Lit, std::vector<int>> occ;
    for (int j = 1; j <= M; ++j)
        for (Lit l : f.clauses[j - 1].lits) occ[l].push_back(j);
    for (auto& [lit, positions] : occ) {
        if ((int)positions.size() < 6) // >= 3 per half, and halves are copies
            out.push_back("literal " + std::to_string(lit) + " occurs fewer than 3 times per half");
        for (std::size_t k = 0; k + 1 < positions.size(); ++k)
            if (positions[k + 1] - positions[k] < 6)
                out.push_back("occurrences of literal " + std::to_string(lit) +
                              " at clauses " + std::to_string(positions[k]) + "," +
                              std::to_string(positions[k + 1]) + " are closer than 6");
    }
    // prev/succ of the distinct literals of one clause must be >= 6 apart
    // (the defaults -6 and 2m+6 are exempt).
    auto prev_of = [&](Lit l, int j) {
        const auto& v = occ[l];
        int best = -6;
        for (int p : v)
            if (p < j) best = p;
        return best;
    };
    auto succ_of = [&](Lit l, int j) {
        const auto& v = occ[l];
        for (int p : v)
            if (p > j) return p;
        return M + 6;
    };
    for (int j = 1; j <= M; ++j) {
        const auto& c = f.clauses[j - 1];
        for (int a = 0; a < 3; ++a) {
            for (int b = a + 1; b < 3; ++b) {
                int pa = prev_of(c.lits[a], j), pb = prev_of(c.lits[b], j);
                if (pa != -6 && pb != -6 && std::abs(pa - pb) < 6)
                    out.push_back("prev occurrences for clause " + std::to_string(j) +
                                  " literals " + std::to_string(c.lits[a]) + "," +
                                  std::to_string(c.lits[b]) + " are closer than 6");
                int sa = succ_of(c.lits[a], j), sb = succ_of(c.lits[b], j);
                if (sa != M + 6 && sb != M + 6 && std::abs(sa - sb) < 6)
                    out.push_back("succ occurrences for clause " + std::to_string(j) +
                                  " literals " + std::to_string(c.lits[a]) + "," +
                                  std::to_string(c.lits[b]) + " are closer than 6");
            }
        }
    }
    return out;
}

namespace {

// Fresh-variable pools for padding clauses. PT variables are designated true,
// PF false, Q true (so a ¬q literal is false). Every pool variable lands in
// exactly three padding clauses, and no two padding clauses share two
// variables.
struct PadBuilder {
    int next_var;
    std::map<int, bool>& designated;
    std::mt19937_64& rng;
    std::vector<int> pt, pf, q;
    std::map<int, int> capacity;
    std::set<std::pair<int, int>> pairs; // variable pairs already co-used

    PadBuilder(int first_fresh, std::map<int, bool>& desig, std::mt19937_64& r)
        : next_var(first_fresh), designated(desig), rng(r) {}

    void make_pool(std::vector<int>& pool, int count, bool value) {
        for (int k = 0; k < count; ++k) {
            pool.push_back(next_var);
            designated[next_var] = value;
            capacity[next_var] = 3;
            ++next_var;
        }
    }

    bool pair_ok(int a, int b) const {
        auto key = std::minmax(a, b);
        return !pairs.count({key.first, key.second});
    }

    void note_pair(int a, int b) {
        auto key = std::minmax(a, b);
        pairs.insert({key.first, key.second});
    }

    // Pick a pool variable compatible with the clause built so far; random
    // among the feasible ones so retries explore different pairings.
    int pick(std::vector<int>& pool, const std::vector<int>& have) {
        std::vector<int> feasible;
        for (int v : pool) {
            if (capacity[v] == 0) continue;
            bool ok = true;
            for (int h : have)
                if (h == v || !pair_ok(v, h)) { ok = false; break; }
            if (ok) feasible.push_back(v);
        }
        if (feasible.empty()) throw std::logic_error("padding pools exhausted");
        int best = feasible[rng() % feasible.size()];
        capacity[best]--;
        return best;
    }

    Clause fill(Lit carrier, const char* shape) {
        // shape: "TQ" = {carrier, pt, ~q}; "TF" = {carrier, pt, pf};
        //        "AQ" = {pt, pf, ~q};    "BQ" = {pt, pt, ~q}
        std::vector<int> have;
        if (carrier != 0) have.push_back(std::abs(carrier));
        Clause c{};
        int slot = carrier != 0 ? 1 : 0;
        if (carrier != 0) c.lits[0] = carrier;
        auto put = [&](std::vector<int>& pool, bool negated) {
            int v = pick(pool, have);
            for (int h : have) note_pair(v, h);
            have.push_back(v);
            c.lits[slot++] = negated ? -v : v;
        };
        std::string s = shape;
        if (s == "TQ") { put(pt, false); put(q, true); }
        else if (s == "TF") { put(pt, false); put(pf, false); }
        else if (s == "AQ") { put(pt, false); put(pf, false); put(q, true); }
        else { put(pt, false); put(pt, false); put(q, true); }
        return c;
    }
};

// Spacer clauses: three rotating fresh pools with periods 6/12/18 so that
// occurrences of a pool variable stay at least six clauses apart and the
// prev/succ values of one spacer clause never collide.
struct SpacerPools {
    std::vector<int> a, b, c;

    Clause clause(int s) const {
        return Clause{{a[s % 6], b[s % 12], -c[s % 18]}};
    }
};

} // namespace

NaeFormula normalize_nae(const std::vector<Clause>& raw, int nvars) {
    if (raw.empty()) throw std::invalid_argument("normalize_nae: empty formula");
    for (const auto& c : raw) check_raw_clause(c, nvars);

    NaeFormula f;
    f.original = raw;
    f.original_nvars = nvars;

    // An input that already satisfies every normalization invariant (e.g. a
    // previously normalized clause list) passes through unchanged, up to
    // metadata.
    {
        NaeFormula trial;
        trial.nvars = nvars;
        trial.clauses = raw;
        trial.original = raw;
        trial.original_nvars = nvars;
        trial.normalized = true;
        if (raw.size() % 2 == 0 && nae_invariant_violations(trial).empty()) return trial;
    }

    // (1) Complement clauses with two or more negated literals.
    std::vector<Clause> core;
    for (const auto& c : raw) {
        Clause d = c;
        if (neg_count(c) >= 2)
            for (auto& l : d.lits) l = -l;
        core.push_back(d);
    }

    std::mt19937_64 rng(0x5eedu);
    std::vector<std::string> last_violations;
    int pool_growth = 0;            // extra filler triples after pool deadlocks
    std::vector<Lit> breakers;      // extra pads separating co-occurring literals
    for (int attempt = 0; attempt < 400; ++attempt) {
        std::map<int, bool> designated;
        // (2) Occurrence boosting. Extra boosts accumulate across attempts if
        // the spacing step keeps failing.
        std::map<Lit, int> occ;
        for (const auto& c : core)
            for (Lit l : c.lits) occ[l]++;
        std::vector<Lit> carriers;
        for (auto& [lit, cnt] : occ)
            for (int k = cnt; k < 3; ++k) carriers.push_back(lit);
        carriers.insert(carriers.end(), breakers.begin(), breakers.end());
        Lit some_pos = 0;
        for (const auto& c : core)
            for (Lit l : c.lits)
                if (l > 0 && some_pos == 0) some_pos = l;

        int bpos = 0, bneg = 0;
        for (Lit l : carriers) (l > 0 ? bpos : bneg)++;
        // Pool slot accounting: solve for filler counts so that every pool's
        // slot total is divisible by three.
        int e = ((2 * bneg - bpos) % 3 + 3) % 3; // extra positive-carrier pads
        for (int k = 0; k < e; ++k) carriers.push_back(some_pos);
        bpos += e;
        int fA = ((-bneg) % 3 + 3) % 3 + 3 * pool_growth;
        int fB = bpos % 3;
        int PT = bpos + bneg + fA + 2 * fB;
        int PF = bneg + fA;
        int Q = bpos + fA + fB;
        while (fB > 0 && PT / 3 < 2) { fA += 3; PT += 3; PF += 3; Q += 3; }

        PadBuilder pads(nvars + 1, designated, rng);
        std::shuffle(carriers.begin(), carriers.end(), rng);
        pads.make_pool(pads.pt, PT / 3, true);
        pads.make_pool(pads.pf, PF / 3, false);
        pads.make_pool(pads.q, Q / 3, true);

        std::vector<Clause> reals = core;
        try {
            for (Lit carrier : carriers)
                reals.push_back(pads.fill(carrier, carrier > 0 ? "TQ" : "TF"));
            for (int k = 0; k < fA; ++k) reals.push_back(pads.fill(0, "AQ"));
            for (int k = 0; k < fB; ++k) reals.push_back(pads.fill(0, "BQ"));
        } catch (const std::logic_error&) {
            if (attempt % 4 == 3) ++pool_growth; // widen the pools if stuck
            continue;
        }

        // (4) Spacing: permute the real clauses, interleave five spacers after
        // each and pad with trailing spacers to a multiple of 36.
        std::shuffle(reals.begin(), reals.end(), rng);
        const int R = (int)reals.size();
        int S = std::max(5 * R, 54);
        S = (S + 35) / 36 * 36;

        SpacerPools sp;
        int sv = pads.next_var;
        auto pool = [&](std::vector<int>& p, int count, bool value) {
            for (int k = 0; k < count; ++k) {
                p.push_back(sv);
                designated[sv] = value;
                ++sv;
            }
            (void)value;
        };
        pool(sp.a, 6, true);
        pool(sp.b, 12, true);
        pool(sp.c, 18, true);

        std::vector<Clause> half;
        int spacer_idx = 0;
        for (int t = 0; t < R; ++t) {
            half.push_back(reals[t]);
            for (int k = 0; k < 5; ++k) half.push_back(sp.clause(spacer_idx++));
        }
        while (spacer_idx < S) half.push_back(sp.clause(spacer_idx++));

        // (3) Duplication.
        NaeFormula cand;
        cand.nvars = sv - 1;
        cand.original = raw;
        cand.original_nvars = nvars;
        cand.designated = designated;
        cand.clauses = half;
        cand.clauses.insert(cand.clauses.end(), half.begin(), half.end());
        cand.normalized = true;

        last_violations = nae_invariant_violations(cand);
        if (last_violations.empty()) return cand;
        // A prev/succ coincidence between two literals of one clause means
        // all their nearby occurrences sit in shared clauses; interpose an
        // extra pad carrying one of them and let the permutation retry.
        if (attempt % 6 == 5 && breakers.size() < 40) {
            const int M = (int)cand.clauses.size();
            std::map<Lit, std::vector<int>> occ2;
            for (int j = 1; j <= M; ++j)
                for (Lit l : cand.clauses[j - 1].lits) occ2[l].push_back(j);
            auto near = [&](Lit x, Lit y, int j) {
                int px = -6, py = -6, sx = M + 6, sy = M + 6;
                for (int p : occ2[x]) {
                    if (p < j) px = p;
                    if (p > j && sx == M + 6) sx = p;
                }
                for (int p : occ2[y]) {
                    if (p < j) py = p;
                    if (p > j && sy == M + 6) sy = p;
                }
                bool prev_bad = px != -6 && py != -6 && std::abs(px - py) < 6;
                bool succ_bad = sx != M + 6 && sy != M + 6 && std::abs(sx - sy) < 6;
                return prev_bad || succ_bad;
            };
            bool added = false;
            for (int j = 1; j <= M && !added; ++j) {
                const auto& c = cand.clauses[j - 1];
                for (int a = 0; a < 3 && !added; ++a)
                    for (int b = a + 1; b < 3 && !added; ++b)
                        if (near(c.lits[a], c.lits[b], j)) {
                            breakers.push_back(c.lits[a]);
                            added = true;
                        }
            }
        }
    }
    std::string msg = "normalize_nae: spacing search failed:";
    for (std::size_t i = 0; i < last_violations.size() && i < 6; ++i)
        msg += " [" + last_violations[i] + "]";
    throw std::logic_error(msg);
}

std::optional<Assignment> solve_nae(const NaeFormula& f) {
    int free_vars = f.normalized ? f.original_nvars : f.nvars;
    if (free_vars > 25) throw std::invalid_argument("solve_nae: too many variables");
    Assignment a;
    a.value.assign(f.nvars + 1, 0);
    for (const auto& [v, val] : f.designated) a.value[v] = val ? 1 : 0;
    for (std::uint64_t mask = 0; mask < (1ull << free_vars); ++mask) {
        for (int v = 1; v <= free_vars; ++v) a.value[v] = (mask >> (v - 1)) & 1;
        if (nae_satisfied(f.clauses, a)) return a;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Reduction graph
// ---------------------------------------------------------------------------

namespace {

struct NaeIds {
    int m = 0, n = 0;
    std::map<std::string, int> by_label;
    std::vector<std::string> labels;

    int fresh(const std::string& lab) {
        int id = (int)labels.size();
        labels.push_back(lab);
        by_label[lab] = id;
        return id;
    }
    int operator()(const std::string& lab) const { return by_label.at(lab); }

    static std::string c(int j) { return "c_" + std::to_string(j); }
    static std::string ch(int j, int h) {
        return "c^" + std::to_string(h) + "_" + std::to_string(j);
    }
    static std::string lj(int j, int r) {
        return "l^" + std::to_string(r) + "_" + std::to_string(j);
    }
    static std::string x(int i) { return "x_" + std::to_string(i); }
    static std::string xh(int i, int h) {
        return "x^" + std::to_string(h) + "_" + std::to_string(i);
    }
    static std::string t(int i) { return "t_" + std::to_string(i); }
    static std::string tar(int i, bool left) {
        return std::string(left ? "t<_" : "t>_") + std::to_string(i);
    }
    static std::string fs(int i, int s) {
        return "f" + std::to_string(s) + "_" + std::to_string(i);
    }
    static std::string far(int i, int s, bool left) {
        return "f" + std::to_string(s) + (left ? "<_" : ">_") + std::to_string(i);
    }
    static std::string ht(int i, int r) {
        return "h" + std::to_string(r) + "_t_" + std::to_string(i);
    }
    static std::string hf(int i, int s, int r) {
        return "h" + std::to_string(r) + "_f" + std::to_string(s) + "_" + std::to_string(i);
    }
};

NaeIds allocate_ids(const NaeFormula& f) {
    NaeIds ids;
    ids.m = f.half();
    ids.n = f.nvars;
    const int M = 2 * ids.m;
    for (int j = 0; j <= M; ++j) ids.fresh(NaeIds::c(j));
    for (int j = 0; j <= M - 1; ++j)
        for (int h = 1; h <= 2; ++h) ids.fresh(NaeIds::ch(j, h));
    for (int j = 1; j <= M; ++j)
        for (int r = 1; r <= 3; ++r) ids.fresh(NaeIds::lj(j, r));
    for (int i = 1; i <= ids.n + 1; ++i) {
        ids.fresh(NaeIds::x(i));
        ids.fresh(NaeIds::xh(i, 1));
        ids.fresh(NaeIds::xh(i, 2));
    }
    for (int i = 1; i <= ids.n; ++i) {
        ids.fresh(NaeIds::t(i));
        ids.fresh(NaeIds::tar(i, false));
        ids.fresh(NaeIds::tar(i, true));
        for (int s = 1; s <= 2; ++s) {
            ids.fresh(NaeIds::fs(i, s));
            ids.fresh(NaeIds::far(i, s, false));
            ids.fresh(NaeIds::far(i, s, true));
        }
    }
    for (int i = 1; i <= ids.n; ++i) {
        for (int r = 0; r <= 4; ++r) ids.fresh(NaeIds::ht(i, r));
        for (int s = 1; s <= 2; ++s)
            for (int r = 0; r <= 4; ++r) ids.fresh(NaeIds::hf(i, s, r));
    }
    return ids;
}

// Occurrences of the path literals: for t_i the positive occurrences of x_i,
// for f^1_i/f^2_i the negated occurrences in the first/second half.
std::vector<std::pair<int, int>> path_occurrences(const NaeFormula& f, int var, int kind) {
    std::vector<std::pair<int, int>> occ; // (clause j 1-based, literal slot r)
    const int M = (int)f.clauses.size();
    for (int j = 1; j <= M; ++j) {
        for (int r = 1; r <= 3; ++r) {
            Lit l = f.clauses[j - 1].lits[r - 1];
            if (kind == 0 && l == var) occ.push_back({j, r});
            if (kind == 1 && l == -var && j <= M / 2) occ.push_back({j, r});
            if (kind == 2 && l == -var && j > M / 2) occ.push_back({j, r});
        }
    }
    return occ;
}

} // namespace

Graph reduce_nae(const NaeFormula& f) {
    check_nae_structure(f);
    NaeIds ids = allocate_ids(f);
    const int M = 2 * ids.m, n = ids.n;
    Graph g;
    for (int v = 0; v < (int)ids.labels.size(); ++v) {
        g.add_vertex(v);
        g.labels[v] = ids.labels[v];
    }
    auto K4 = [&](int a, int b, int c, int d) {
        int q[4] = {a, b, c, d};
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) g.add_edge(q[i], q[j]);
    };
    for (int j = 0; j <= M - 1; ++j)
        K4(ids(NaeIds::c(j)), ids(NaeIds::ch(j, 1)), ids(NaeIds::ch(j, 2)),
           ids(NaeIds::c(j + 1)));
    for (int i = 1; i <= n; ++i)
        K4(ids(NaeIds::x(i)), ids(NaeIds::xh(i + 1, 1)), ids(NaeIds::xh(i + 1, 2)),
           ids(NaeIds::x(i + 1)));
    K4(ids(NaeIds::c(M)), ids(NaeIds::xh(1, 1)), ids(NaeIds::xh(1, 2)), ids(NaeIds::x(1)));
    // Backbone paths c^h_0 ... c^h_{M-1} x^h_1 ... x^h_{n+1}.
    for (int h = 1; h <= 2; ++h) {
        std::vector<int> path;
        for (int j = 0; j <= M - 1; ++j) path.push_back(ids(NaeIds::ch(j, h)));
        for (int i = 1; i <= n + 1; ++i) path.push_back(ids(NaeIds::xh(i, h)));
        for (std::size_t k = 0; k + 1 < path.size(); ++k) g.add_edge(path[k], path[k + 1]);
    }
    for (int i = 1; i <= n; ++i) {
        g.add_edge(ids(NaeIds::x(i)), ids(NaeIds::t(i)));
        g.add_edge(ids(NaeIds::x(i)), ids(NaeIds::fs(i, 1)));
        g.add_edge(ids(NaeIds::x(i)), ids(NaeIds::fs(i, 2)));
    }
    for (int j = 1; j <= M; ++j)
        for (int r = 1; r <= 3; ++r)
            g.add_edge(ids(NaeIds::c(j)), ids(NaeIds::lj(j, r)));
    // Literal-to-arrow edges.
    for (int j = 1; j <= M; ++j) {
        for (int r = 1; r <= 3; ++r) {
            Lit l = f.clauses[j - 1].lits[r - 1];
            int i = std::abs(l);
            int lid = ids(NaeIds::lj(j, r));
            if (l > 0) {
                g.add_edge(lid, ids(NaeIds::tar(i, false)));
                g.add_edge(lid, ids(NaeIds::tar(i, true)));
            } else {
                int s = j <= M / 2 ? 1 : 2;
                g.add_edge(lid, ids(NaeIds::far(i, s, false)));
                g.add_edge(lid, ids(NaeIds::far(i, s, true)));
            }
        }
    }
    // Assignment gadgets: arrows, h-vertices and the ordered paths.
    for (int i = 1; i <= n; ++i) {
        for (int sided = 0; sided < 3; ++sided) {
            int center, right, left;
            std::vector<int> hs(5);
            std::vector<std::pair<int, int>> occ;
            if (sided == 0) {
                center = ids(NaeIds::t(i));
                right = ids(NaeIds::tar(i, false));
                left = ids(NaeIds::tar(i, true));
                for (int r = 0; r <= 4; ++r) hs[r] = ids(NaeIds::ht(i, r));
                occ = path_occurrences(f, i, 0);
            } else {
                center = ids(NaeIds::fs(i, sided));
                right = ids(NaeIds::far(i, sided, false));
                left = ids(NaeIds::far(i, sided, true));
                for (int r = 0; r <= 4; ++r) hs[r] = ids(NaeIds::hf(i, sided, r));
                occ = path_occurrences(f, i, sided);
            }
            g.add_edge(center, right);
            g.add_edge(center, left);
            for (int r = 0; r <= 4; ++r) {
                g.add_edge(right, hs[r]);
                g.add_edge(left, hs[r]);
            }
            // Path order: h1, h2, literals by ascending clause, h0, center, h3, h4.
            std::vector<int> path{hs[1], hs[2]};
            for (auto& [j, r] : occ) path.push_back(ids(NaeIds::lj(j, r)));
            path.push_back(hs[0]);
            path.push_back(center);
            path.push_back(hs[3]);
            path.push_back(hs[4]);
            for (std::size_t k = 0; k + 1 < path.size(); ++k)
                g.add_edge(path[k], path[k + 1]);
        }
    }
    return g;
}

// ---------------------------------------------------------------------------
// Witness layout: the appendix coordinate table.
// ---------------------------------------------------------------------------

Layout witness_layout_nae(const NaeFormula& f, const Assignment& phi) {
    check_nae_structure(f);
    if ((int)phi.value.size() < f.nvars + 1)
        throw std::invalid_argument("witness_layout_nae: assignment incomplete");
    if (!nae_satisfied(f.clauses, phi))
        throw std::invalid_argument("witness_layout_nae: assignment is not NAE-satisfying");

    NaeIds ids = allocate_ids(f);
    const int m = ids.m, n = ids.n, M = 2 * m;
    const std::int64_t Dm = 2 * m + 8;

    Layout l;
    l.kind = LayoutKind::Free;
    auto put = [&](const std::string& lab, Rat x, Rat y) {
        l.squares.push_back({ids(lab), x, y});
    };
    // x_i is true iff R_{x_i} sees R_{t_i} downward, so t_i sits below the
    // backbone for true variables.
    auto sgn = [&](int i) { return phi.get(i) ? -1 : 1; };

    for (int j = 0; j <= M; ++j) put(NaeIds::c(j), Rat(4 * j), Rat(0));
    for (int j = 0; j <= M - 1; ++j)
        for (int h = 1; h <= 2; ++h)
            put(NaeIds::ch(j, h), Rat(4 * j + 2), Rat(2) - Rat(13 * h, 10));
    for (int i = 1; i <= n + 1; ++i) {
        put(NaeIds::x(i), Rat(8 * (m + i)), Rat(0));
        for (int h = 1; h <= 2; ++h)
            put(NaeIds::xh(i, h), Rat(8 * (m + i) - 6), Rat(2) - Rat(13 * h, 10));
    }
    for (int i = 1; i <= n; ++i) {
        const int s = sgn(i);
        put(NaeIds::t(i), Rat(8 * (m + i)),
            Rat(s * (5 * i + 2)) + Rat(1) - Rat(2 * m + 4, Dm));
        put(NaeIds::tar(i, false), Rat(-9 * i), Rat(s * (5 * i + 2)));
        put(NaeIds::tar(i, true), Rat(8 * (n + 1 + m) + 9 * i), Rat(s * (5 * i + 2) + 1));
        put(NaeIds::ht(i, 0), Rat(8 * (m + i) - 3),
            Rat(s * (5 * i + 2)) + Rat(1) - Rat(2 * m + 3, Dm));
        for (int r = 1; r <= 2; ++r)
            put(NaeIds::ht(i, r), Rat(-9 * i + 3 * r),
                Rat(s * (5 * i + 2)) + Rat(1) - Rat(r, Dm));
        for (int r = 3; r <= 4; ++r)
            put(NaeIds::ht(i, r), Rat(8 * (n + 1 + m) + 9 * i + 3 * r - 15),
                Rat(s * (5 * i + 2)) + Rat(5 - r, Dm));
        for (int h = 1; h <= 2; ++h) {
            const int sf = -s; // f-gadgets sit on the opposite side
            put(NaeIds::fs(i, h), Rat(8 * (m + i)) + Rat(3, 2) - Rat(h),
                Rat(sf * (5 * i + 2 * h)) + Rat(1) - Rat(2 * m + 4, Dm));
            put(NaeIds::far(i, h, false), Rat(-9 * i - h), Rat(sf * (5 * i + 2 * h)));
            put(NaeIds::far(i, h, true), Rat(8 * (n + 1 + m) + 9 * i - h),
                Rat(sf * (5 * i + 2 * h) + 1));
            put(NaeIds::hf(i, h, 0), Rat(8 * (m + i) - 2 * h),
                Rat(sf * (5 * i + 2 * h)) + Rat(1) - Rat(2 * m + 3, Dm));
            for (int r = 1; r <= 2; ++r)
                put(NaeIds::hf(i, h, r), Rat(-9 * i + 3 * r - h),
                    Rat(sf * (5 * i + 2 * h)) + Rat(1) - Rat(r, Dm));
            for (int r = 3; r <= 4; ++r)
                put(NaeIds::hf(i, h, r), Rat(8 * (n + 1 + m) + 9 * i + 3 * r - h - 15),
                    Rat(sf * (5 * i + 2 * h)) + Rat(5 - r, Dm));
        }
    }
    // Literal squares: the band of their assignment vertex, column of their
    // clause. Same-side literals of one clause take distinct +-1/2 offsets;
    // a lone literal sits aligned with the clause square.
    for (int j = 1; j <= M; ++j) {
        struct LitPos {
            int r;
            int side;      // +1 above, -1 below
            std::int64_t band;
        };
        std::vector<LitPos> lits;
        for (int r = 1; r <= 3; ++r) {
            Lit lit = f.clauses[j - 1].lits[r - 1];
            int i = std::abs(lit);
            int s = sgn(i);
            if (lit > 0) lits.push_back({r, s, (std::int64_t)5 * i + 2});
            else {
                int h = j <= m ? 1 : 2;
                lits.push_back({r, -s, (std::int64_t)5 * i + 2 * h});
            }
        }
        for (int side : {1, -1}) {
            std::vector<LitPos> same;
            for (auto& lp : lits)
                if (lp.side == side) same.push_back(lp);
            if (same.size() == 3)
                throw std::logic_error("witness_layout_nae: clause is not NAE under phi");
            for (std::size_t k = 0; k < same.size(); ++k) {
                Rat off(0);
                if (same.size() == 2) off = k == 0 ? Rat(-1, 2) : Rat(1, 2);
                put(NaeIds::lj(j, same[k].r), Rat(4 * j) + off,
                    Rat(side * same[k].band) + Rat(1) - Rat(j + 2, Dm));
            }
        }
    }

    auto rep = validate_layout(l);
    if (!rep.ok())
        throw std::logic_error("witness_layout_nae: invalid layout: " +
                               rep.violations.front().what);
    // Extraction equality is the construction's correctness oracle.
    Graph expect = reduce_nae(f);
    Graph got = extract_graph(l);
    if (!(got == expect)) {
        std::string msg = "witness_layout_nae: extraction mismatch;";
        int shown = 0;
        for (const auto& e : got.edges)
            if (!expect.has_edge(e.first, e.second) && shown++ < 4)
                msg += " extra {" + ids.labels[e.first] + "," + ids.labels[e.second] + "}";
        for (const auto& e : expect.edges)
            if (!got.has_edge(e.first, e.second) && shown++ < 8)
                msg += " missing {" + ids.labels[e.first] + "," + ids.labels[e.second] + "}";
        throw std::logic_error(msg);
    }
    return l;
}

} // namespace usv
