#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "usv/families.hpp"
#include "usv/geometry.hpp"
#include "usv/graph.hpp"
#include "usv/restriction.hpp"

namespace usv {

/// Resource limits for the exact solvers. An exhausted budget yields the
/// verdict Unknown, never a wrong yes/no.
struct SearchBudget {
    std::uint64_t max_nodes = 20'000'000;
    std::int64_t wall_ms = 0; // 0 = no wall-clock limit
    bool deterministic = true;
    int threads = 1;
};

enum class Answer { Yes, No, Unknown };

struct RecognitionResult {
    Answer answer = Answer::Unknown;
    std::optional<Layout> witness;
    std::uint64_t nodes = 0;
    std::string domain; // searched coordinate domain, for the report
    std::string engine;
};

/// Complete backtracking search for a unit square grid layout within a
/// width x height box (defaults 2n-1 x 2n-1), optionally under a restriction.
RecognitionResult recognize_usgv(const Graph& g, int width, int height,
                                 const Restriction* r, const SearchBudget& budget);
RecognitionResult recognize_usgv(const Graph& g, const SearchBudget& budget);

/// Complete search over the rational grid {a/den} with coordinates bounded by
/// `bound` units (defaults: den = n, bound = n). A `no` verdict is relative to
/// this domain; the result records it.
RecognitionResult recognize_usv(const Graph& g, int denominator, Rat bound,
                                const SearchBudget& budget);
RecognitionResult recognize_usv(const Graph& g, const SearchBudget& budget);

struct EnumerationResult {
    std::vector<Layout> representatives; // one per V-isomorphism class
    bool complete = true;                // false on budget exhaustion
    std::uint64_t nodes = 0;
    std::uint64_t layouts_seen = 0;
    std::string domain;
};

/// Complete enumeration of the layouts of g over the class's coordinate
/// domain, bucketed by V-isomorphism.
EnumerationResult enumerate_layout_classes(const Graph& g, GraphClass cls,
                                           int denominator,
                                           const SearchBudget& budget);

/// Constructive layout for a tree: grid variant for max degree <= 4, free
/// variant for max degree <= 5. The result is verified internally.
Layout tree_layout(const Graph& t, GraphClass cls);

} // namespace usv
