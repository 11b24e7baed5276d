#include "partgen/greedy.hpp"

#include <string>

namespace partgen {

std::vector<std::vector<std::size_t>> GenerationPlan::groups() const
{
    std::vector<std::vector<std::size_t>> out(target.size());
    for (std::size_t j = 0; j < assignment.size(); ++j)
        if (assignment[j] < out.size())
            out[assignment[j]].push_back(j);
    return out;
}

std::vector<Part> GenerationPlan::group_sums() const
{
    std::vector<Part> sums(target.size(), 0);
    for (std::size_t j = 0; j < assignment.size() && j < source.size(); ++j)
        if (assignment[j] < sums.size())
            sums[assignment[j]] += source[j];
    return sums;
}

std::string GenerationPlan::to_string() const
{
    std::string out;
    const auto grouped = groups();
    for (std::size_t i = 0; i < grouped.size(); ++i) {
        if (i)
            out += "; ";
        out += std::to_string(target[i]) + " =";
        for (std::size_t pos = 0; pos < grouped[i].size(); ++pos) {
            out += pos ? "+" : " ";
            out += std::to_string(source[grouped[i][pos]]);
        }
    }
    return out;
}

bool is_valid_plan(const GenerationPlan& plan)
{
    if (plan.source.weight() != plan.target.weight())
        return false;
    if (plan.assignment.size() != plan.source.size())
        return false;
    std::vector<Part> sums(plan.target.size(), 0);
    for (std::size_t j = 0; j < plan.assignment.size(); ++j) {
        const std::size_t i = plan.assignment[j];
        if (i >= sums.size())
            return false;
        sums[i] += plan.source[j];
    }
    for (std::size_t i = 0; i < sums.size(); ++i)
        if (sums[i] != plan.target[i])
            return false;
    return true;
}

GreedyOutcome greedy_generate(const Partition& source, const Partition& target)
{
    if (source.weight() != target.weight())
        throw WeightMismatch(source.weight(), target.weight());

    GreedyOutcome outcome;
    std::vector<Part> remaining(target.values());
    std::vector<std::size_t> assignment;
    assignment.reserve(source.size());

    for (std::size_t j = 0; j < source.size(); ++j) {
        const Part part = source[j];
        std::optional<std::size_t> best;
        for (std::size_t i = 0; i < remaining.size(); ++i) {
            if (remaining[i] < part)
                continue;
            if (!best) {
                best = i;
                continue;
            }
            // Largest original value, then largest remaining capacity; the
            // index order already prefers the smaller index on full ties.
            const std::size_t b = *best;
            if (target[i] > target[b] || (target[i] == target[b] && remaining[i] > remaining[b]))
                best = i;
        }
        if (!best) {
            outcome.trace.stuck_part = j;
            outcome.trace.remaining_at_stop = remaining;
            return outcome;
        }
        remaining[*best] -= part;
        assignment.push_back(*best);
        outcome.trace.steps.push_back({j, *best, remaining});
    }

    outcome.trace.remaining_at_stop = remaining;
    outcome.plan = GenerationPlan{source, target, std::move(assignment)};
    return outcome;
}

} // namespace partgen
