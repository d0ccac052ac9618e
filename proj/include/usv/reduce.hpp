#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "usv/geometry.hpp"
#include "usv/graph.hpp"
#include "usv/rectilinear.hpp"

namespace usv {

/// 3-Partition instance: 3m integers in (B/4, B/2) summing to mB.
struct ThreePartitionInstance {
    std::int64_t B = 0;
    std::vector<std::int64_t> items;

    int m() const { return (int)items.size() / 3; }
    void check() const;
};

/// Exhaustive search for a partition into m triples each summing to B.
std::optional<std::vector<std::array<int, 3>>> solve_3partition(
    const ThreePartitionInstance& inst);

/// Frame graph plus item ladders; vertex roles are recorded as labels.
Graph reduce_3partition(const ThreePartitionInstance& inst);

/// The constructive grid layout of the forward direction: a 7-row ladder
/// frame with the item ladders packed into the compartments given by the
/// partition. This is a weak layout: within each compartment, consecutive
/// ladder rows and the flanking w-stalks necessarily see each other.
Layout witness_layout_3partition(const ThreePartitionInstance& inst,
                                 const std::vector<std::array<int, 3>>& partition);

/// Frame-only layout of the u/v ladder with its w-stalks.
Layout frame_layout_3partition(std::int64_t B, int m);

/// Second output form of the same witness: merging the scale-2 gaps of the
/// grid layout yields a 4 x (mB+m+1) rectilinear drawing of the reduction
/// graph (non-edges need no spacing in a drawing).
RectilinearDrawing drawing_3partition(const ThreePartitionInstance& inst,
                                      const std::vector<std::array<int, 3>>& partition);

/// Id of a labeled reduction vertex, e.g. role "u", indices (i, j).
int reduction_vertex(const Graph& g, const std::string& label);

// --------------------------------------------------------------------------

/// Signed literal: variable index 1..n, negative means negated.
using Lit = int;

struct Clause {
    std::array<Lit, 3> lits;
};

/// Normalized not-all-equal 3-SAT formula: duplicated clause list c_{m+i}=c_i,
/// at most one negated literal per clause, every occurring literal appearing
/// at least three times per half, and prev/succ occurrence spacing >= 6.
struct NaeFormula {
    int nvars = 0;
    std::vector<Clause> clauses; // length 2m after normalization
    // Normalization metadata.
    int original_nvars = 0;
    std::vector<Clause> original;        // the input clauses, pre-normalization
    std::map<int, bool> designated;      // forced values for fresh variables
    bool normalized = false;

    int half() const { return (int)clauses.size() / 2; }
};

struct Assignment {
    std::vector<char> value; // 1-indexed by variable

    bool get(int var) const { return value[var] != 0; }
};

bool nae_satisfied(const std::vector<Clause>& clauses, const Assignment& a);

/// Applies, in order: clause complementation, occurrence boosting with
/// always-satisfiable padding clauses, duplication, and spacing.
NaeFormula normalize_nae(const std::vector<Clause>& raw, int nvars);

/// Brute force over assignments (original variables only when the formula is
/// normalized; fresh variables take their designated values).
std::optional<Assignment> solve_nae(const NaeFormula& f);

/// The clause/variable/assignment-gadget graph; 12m + 27n + 4 vertices.
Graph reduce_nae(const NaeFormula& f);

/// Free layout per the constructive direction's coordinate table. The
/// extracted graph must equal reduce_nae(f) exactly.
Layout witness_layout_nae(const NaeFormula& f, const Assignment& phi);

/// Structural invariant check used by reduce_nae/witness (throws on failure).
void check_nae_structure(const NaeFormula& f);
/// Full normalization invariants including occurrence counts and spacing.
std::vector<std::string> nae_invariant_violations(const NaeFormula& f);

} // namespace usv
