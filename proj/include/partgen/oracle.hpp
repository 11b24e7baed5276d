#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "partgen/greedy.hpp"
#include "partgen/partition.hpp"

namespace partgen {

/// Caps the number of search nodes an oracle call may expand; unset means unbounded.
struct SearchBudget {
    std::optional<std::uint64_t> max_nodes;
};

/// Raised by oracle calls that return a definite answer when the budget runs out first.
class SearchExhausted : public std::runtime_error {
public:
    explicit SearchExhausted(std::uint64_t nodes);
    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    std::uint64_t nodes_;
};

enum class SearchStatus { found, impossible, exhausted };

struct SearchResult {
    SearchStatus status = SearchStatus::impossible;
    std::optional<GenerationPlan> plan;
    std::uint64_t nodes = 0;
};

/*
 * Complete decision procedure for "source generates target".
 *
 * Depth-first: source parts are placed largest first onto targets with enough
 * room. Targets with equal remaining capacity are interchangeable, so only
 * one of them is tried per node. Failed (depth, capacity multiset) states are
 * memoized, which also removes the permutations of equal source parts. A
 * target left with room smaller than the smallest source part is pruned.
 *
 * Throws WeightMismatch if the weights differ.
 */
SearchResult search_generation(const Partition& source, const Partition& target, SearchBudget budget = {});

/// Unbounded search_generation: a plan iff one exists.
std::optional<GenerationPlan> generates_exact(const Partition& source, const Partition& target);

enum class VerifyMode { greedy_first, exact_only };
enum class Outcome { pass, fail, inconclusive };

std::string_view to_string(VerifyMode mode) noexcept;
std::string_view to_string(Outcome outcome) noexcept;

struct VerificationReport {
    Partition subject;
    Part n = 0;
    Part k = 0;
    VerifyMode mode = VerifyMode::greedy_first;
    Outcome outcome = Outcome::pass;
    std::optional<Partition> counterexample; // first failing target in enumeration order
    std::uint64_t partitions_checked = 0;
    std::uint64_t nodes_expanded = 0;

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/*
 * Checks subject against every partition of n with at most k parts, in
 * PartitionRange order, stopping at the first one it cannot generate.
 *
 * greedy_first tries greedy_generate and falls back to the exact search when
 * greedy gets stuck; exact_only goes straight to the search. The budget is
 * shared across all targets; running out yields Outcome::inconclusive.
 */
VerificationReport generates_all(const Partition& subject, Part n, Part k, VerifyMode mode,
                                 SearchBudget budget = {});

struct MinSizeResult {
    std::int64_t size = 0;
    Partition witness{1};
    std::uint64_t nodes = 0;
};

/*
 * Smallest number of parts of any partition of n that generates all
 * partitions of n with at most k parts, by trying every partition of n with
 * exactly 1, 2, 3, ... parts (exact mode). The witness is the first success
 * in enumeration order. Throws SearchExhausted if the budget runs out.
 */
MinSizeResult brute_force_min_size(Part n, Part k, SearchBudget budget = {});

/// Every partition of n that generates all k-partitions of n, in PartitionRange order.
std::vector<Partition> feasible_generators(Part n, Part k, SearchBudget budget = {});

struct PrefixCheck {
    bool holds = true;
    std::optional<std::size_t> first_violation; // 1-based prefix length m
};

/// Checks sum(lambda[0..m)) <= sum(mu[0..m)) for m = 1 .. min(|mu|, |lambda|).
PrefixCheck check_prefix_dominance(const Partition& mu, const Partition& lambda);

enum class SuffixCheck { holds, fails, not_a_generator, inconclusive };

std::string_view to_string(SuffixCheck check) noexcept;

/*
 * With lambda a generator of all k-partitions of its weight, checks that its
 * parts from 1-based position m onward generate all k-partitions of their own
 * sum. Returns not_a_generator when lambda itself fails that precondition.
 * Throws InputError unless 2 <= m <= |lambda|.
 */
SuffixCheck check_suffix_property(const Partition& lambda, Part k, std::size_t m, SearchBudget budget = {});

} // namespace partgen
