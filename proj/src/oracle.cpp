#include "partgen/oracle.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "partgen/enumerate.hpp"

namespace partgen {

namespace {

struct StateHash {
    std::size_t operator()(const std::vector<Part>& state) const noexcept
    {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        for (Part v : state)
            h ^= std::hash<Part>{}(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }
};

struct BudgetExceeded {};

class GenerationSearch {
public:
    GenerationSearch(const Partition& source, const Partition& target, SearchBudget budget)
        : source_(source)
        , budget_(budget)
        , capacity_(target.values())
        , assignment_(source.size(), 0)
    {
    }

    bool run() { return place(0); }
    std::uint64_t nodes() const noexcept { return nodes_; }
    std::vector<std::size_t> assignment() const { return assignment_; }

private:
    bool place(std::size_t j)
    {
        if (j == source_.size())
            return true;
        if (budget_.max_nodes && nodes_ >= *budget_.max_nodes)
            throw BudgetExceeded{};
        ++nodes_;

        std::vector<Part> key(capacity_);
        std::sort(key.begin(), key.end());
        key.push_back(static_cast<Part>(j));
        if (dead_.contains(key))
            return false;

        const Part part = source_[j];
        const Part floor = source_.smallest();
        std::vector<Part> tried;
        for (std::size_t i = 0; i < capacity_.size(); ++i) {
            const Part room = capacity_[i];
            if (room < part)
                continue;
            if (std::find(tried.begin(), tried.end(), room) != tried.end())
                continue;
            tried.push_back(room);
            const Part left = room - part;
            if (left > 0 && left < floor)
                continue;
            capacity_[i] = left;
            assignment_[j] = i;
            if (place(j + 1))
                return true;
            capacity_[i] = room;
        }
        dead_.insert(std::move(key));
        return false;
    }

    const Partition& source_;
    SearchBudget budget_;
    std::vector<Part> capacity_;
    std::vector<std::size_t> assignment_;
    std::unordered_set<std::vector<Part>, StateHash> dead_;
    std::uint64_t nodes_ = 0;
};

SearchBudget remaining_budget(SearchBudget budget, std::uint64_t used)
{
    if (budget.max_nodes)
        budget.max_nodes = *budget.max_nodes > used ? *budget.max_nodes - used : 0;
    return budget;
}

void require_positive(Part value, const char* name)
{
    if (value < 1)
        throw InputError(std::string(name) + " must be a positive integer, got " + std::to_string(value));
}

} // namespace

SearchExhausted::SearchExhausted(std::uint64_t nodes)
    : std::runtime_error("search budget exhausted after " + std::to_string(nodes) + " nodes")
    , nodes_(nodes)
{
}

SearchResult search_generation(const Partition& source, const Partition& target, SearchBudget budget)
{
    if (source.weight() != target.weight())
        throw WeightMismatch(source.weight(), target.weight());

    GenerationSearch search(source, target, budget);
    SearchResult result;
    try {
        if (search.run()) {
            result.status = SearchStatus::found;
            result.plan = GenerationPlan{source, target, search.assignment()};
        }
    } catch (const BudgetExceeded&) {
        result.status = SearchStatus::exhausted;
    }
    result.nodes = search.nodes();
    return result;
}

std::optional<GenerationPlan> generates_exact(const Partition& source, const Partition& target)
{
    return search_generation(source, target).plan;
}

std::string_view to_string(VerifyMode mode) noexcept
{
    return mode == VerifyMode::greedy_first ? "greedy-first" : "exact-only";
}

std::string_view to_string(Outcome outcome) noexcept
{
    switch (outcome) {
    case Outcome::pass:
        return "pass";
    case Outcome::fail:
        return "fail";
    case Outcome::inconclusive:
        break;
    }
    return "inconclusive";
}

std::string_view to_string(SuffixCheck check) noexcept
{
    switch (check) {
    case SuffixCheck::holds:
        return "holds";
    case SuffixCheck::fails:
        return "fails";
    case SuffixCheck::not_a_generator:
        return "not-a-generator";
    case SuffixCheck::inconclusive:
        break;
    }
    return "inconclusive";
}

VerificationReport generates_all(const Partition& subject, Part n, Part k, VerifyMode mode,
                                 SearchBudget budget)
{
    require_positive(n, "n");
    require_positive(k, "k");
    if (subject.weight() != n)
        throw WeightMismatch(subject.weight(), n);

    VerificationReport report{subject, n, k, mode, Outcome::pass, std::nullopt, 0, 0};
    for (const Partition& target : PartitionRange(n, static_cast<std::size_t>(k))) {
        ++report.partitions_checked;
        if (mode == VerifyMode::greedy_first && greedy_generate(subject, target).succeeded())
            continue;
        const SearchResult found = search_generation(subject, target, remaining_budget(budget, report.nodes_expanded));
        report.nodes_expanded += found.nodes;
        if (found.status == SearchStatus::found)
            continue;
        if (found.status == SearchStatus::exhausted) {
            report.outcome = Outcome::inconclusive;
            return report;
        }
        report.outcome = Outcome::fail;
        report.counterexample = target;
        return report;
    }
    return report;
}

MinSizeResult brute_force_min_size(Part n, Part k, SearchBudget budget)
{
    require_positive(n, "n");
    require_positive(k, "k");
    std::uint64_t nodes = 0;
    for (Part size = 1; size <= n; ++size) {
        for (const Partition& candidate : partitions_with_size(n, static_cast<std::size_t>(size))) {
            const VerificationReport report =
                generates_all(candidate, n, k, VerifyMode::exact_only, remaining_budget(budget, nodes));
            nodes += report.nodes_expanded;
            if (report.outcome == Outcome::inconclusive)
                throw SearchExhausted(nodes);
            if (report.outcome == Outcome::pass)
                return {size, candidate, nodes};
        }
    }
    // The all-ones partition always generates everything, so this is unreachable.
    throw std::logic_error("no generator found for n = " + std::to_string(n));
}

std::vector<Partition> feasible_generators(Part n, Part k, SearchBudget budget)
{
    require_positive(n, "n");
    require_positive(k, "k");
    std::vector<Partition> out;
    std::uint64_t nodes = 0;
    for (const Partition& candidate : PartitionRange(n, static_cast<std::size_t>(n))) {
        const VerificationReport report =
            generates_all(candidate, n, k, VerifyMode::exact_only, remaining_budget(budget, nodes));
        nodes += report.nodes_expanded;
        if (report.outcome == Outcome::inconclusive)
            throw SearchExhausted(nodes);
        if (report.outcome == Outcome::pass)
            out.push_back(candidate);
    }
    return out;
}

PrefixCheck check_prefix_dominance(const Partition& mu, const Partition& lambda)
{
    const std::size_t limit = std::min(mu.size(), lambda.size());
    Part mu_sum = 0;
    Part lambda_sum = 0;
    for (std::size_t m = 0; m < limit; ++m) {
        mu_sum += mu[m];
        lambda_sum += lambda[m];
        if (lambda_sum > mu_sum)
            return {false, m + 1};
    }
    return {};
}

SuffixCheck check_suffix_property(const Partition& lambda, Part k, std::size_t m, SearchBudget budget)
{
    require_positive(k, "k");
    if (m < 2 || m > lambda.size())
        throw InputError("suffix position m = " + std::to_string(m) + " must lie in [2, "
                         + std::to_string(lambda.size()) + "]");

    const VerificationReport whole = generates_all(lambda, lambda.weight(), k, VerifyMode::exact_only, budget);
    if (whole.outcome == Outcome::inconclusive)
        return SuffixCheck::inconclusive;
    if (whole.outcome == Outcome::fail)
        return SuffixCheck::not_a_generator;

    const Partition tail = lambda.suffix(m - 1);
    const VerificationReport rest = generates_all(tail, tail.weight(), k, VerifyMode::exact_only,
                                                  remaining_budget(budget, whole.nodes_expanded));
    switch (rest.outcome) {
    case Outcome::pass:
        return SuffixCheck::holds;
    case Outcome::fail:
        return SuffixCheck::fails;
    case Outcome::inconclusive:
        break;
    }
    return SuffixCheck::inconclusive;
}

} // namespace partgen
