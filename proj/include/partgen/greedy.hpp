#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "partgen/partition.hpp"

namespace partgen {

/*
 * A witness that `source` generates `target`: assignment[j] is the 0-based
 * index of the target part that source part j is summed into. Every source
 * part goes to exactly one target, and each target's group sums to its value.
 */
struct GenerationPlan {
    Partition source;
    Partition target;
    std::vector<std::size_t> assignment;

    /// Source part indices grouped per target part.
    std::vector<std::vector<std::size_t>> groups() const;
    std::vector<Part> group_sums() const;

    /// "4 = 3+1; 3 = 2+1; 2 = 2"
    std::string to_string() const;

    friend bool operator==(const GenerationPlan&, const GenerationPlan&) = default;
};

/// Recomputes the plan from scratch: one target per source part, group sums match.
bool is_valid_plan(const GenerationPlan& plan);

struct GreedyStep {
    std::size_t part_index;
    std::size_t target_index;
    std::vector<Part> remaining; // capacity left on every target after this placement

    friend bool operator==(const GreedyStep&, const GreedyStep&) = default;
};

/*
 * Log of a greedy placement run. When `stuck_part` is set, that source part
 * fit on no target: every entry of `remaining_at_stop` is smaller than it.
 */
struct GreedyTrace {
    std::vector<GreedyStep> steps;
    std::optional<std::size_t> stuck_part;
    std::vector<Part> remaining_at_stop;
};

struct GreedyOutcome {
    std::optional<GenerationPlan> plan;
    GreedyTrace trace;

    bool succeeded() const noexcept { return plan.has_value(); }
};

/*
 * Places source parts largest first, each on the target with the largest
 * original value among those with enough remaining capacity. Ties go to the
 * larger remaining capacity, then the smaller index.
 *
 * When source generates every partition of its weight with at most
 * target.size() parts, this never gets stuck. For any other source a stuck
 * run proves nothing; use the exact search in oracle.hpp.
 *
 * Throws WeightMismatch if the weights differ.
 */
GreedyOutcome greedy_generate(const Partition& source, const Partition& target);

} // namespace partgen
