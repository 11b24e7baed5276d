#include <doctest.h>

#include <vector>

#include "partgen/enumerate.hpp"
#include "partgen/generator.hpp"
#include "partgen/oracle.hpp"
#include "support/oracles.hpp"
#include "support/table1.hpp"

using namespace partgen;

TEST_CASE("generates_exact worked examples")
{
    const auto plan = generates_exact(Partition{2, 2, 1}, Partition{4, 1});
    REQUIRE(plan.has_value());
    CHECK(plan->assignment == std::vector<std::size_t>{0, 0, 1});
    CHECK(is_valid_plan(*plan));

    CHECK_FALSE(generates_exact(Partition{3, 1}, Partition{2, 2}).has_value());

    const auto mixed = generates_exact(Partition{3, 2, 2, 1, 1}, Partition{4, 3, 2});
    REQUIRE(mixed.has_value());
    CHECK(is_valid_plan(*mixed));
}

TEST_CASE("generates_exact weight mismatch")
{
    CHECK_THROWS_AS(generates_exact(Partition{5}, Partition{9}), WeightMismatch);
    CHECK_THROWS_AS(generates_all(Partition{5}, 9, 3, VerifyMode::exact_only), WeightMismatch);
}

TEST_CASE("exact search agrees with trying every assignment")
{
    for (Part n = 1; n <= 9; ++n)
        for (const Partition& source : PartitionRange(n, static_cast<std::size_t>(n)))
            for (const Partition& target : PartitionRange(n, 4)) {
                const SearchResult r = search_generation(source, target);
                const bool expected = testing::naive_generates(source.values(), target.values());
                REQUIRE(r.status != SearchStatus::exhausted);
                REQUIRE((r.status == SearchStatus::found) == expected);
                REQUIRE(r.plan.has_value() == expected);
                if (r.plan)
                    REQUIRE(is_valid_plan(*r.plan));
            }
}

TEST_CASE("generates_all on the 9 / 3 examples")
{
    const auto ok = generates_all(Partition{3, 2, 2, 1, 1}, 9, 3, VerifyMode::exact_only);
    CHECK(ok.outcome == Outcome::pass);
    CHECK(ok.partitions_checked == 12);
    CHECK_FALSE(ok.counterexample.has_value());
    CHECK(generates_all(Partition{3, 2, 2, 1, 1}, 9, 3, VerifyMode::greedy_first).outcome == Outcome::pass);

    // First failure in enumeration order is (8, 1) for both subjects.
    const auto single = generates_all(Partition{9}, 9, 3, VerifyMode::greedy_first);
    CHECK(single.outcome == Outcome::fail);
    REQUIRE(single.counterexample.has_value());
    CHECK(*single.counterexample == Partition{8, 1});
    CHECK_FALSE(generates_exact(Partition{9}, Partition{3, 3, 3}).has_value());

    const auto threes = generates_all(Partition{3, 3, 3}, 9, 3, VerifyMode::exact_only);
    CHECK(threes.outcome == Outcome::fail);
    REQUIRE(threes.counterexample.has_value());
    CHECK(*threes.counterexample == Partition{8, 1});
    CHECK_FALSE(generates_exact(Partition{3, 3, 3}, Partition{4, 4, 1}).has_value());
    CHECK_FALSE(generates_exact(Partition{3, 3, 3}, *threes.counterexample).has_value());
}

TEST_CASE("greedy-first and exact-only reports agree on the outcome")
{
    for (Part n = 1; n <= 10; ++n)
        for (const Partition& mu : PartitionRange(n, static_cast<std::size_t>(n)))
            for (Part k = 1; k <= 4; ++k) {
                const auto g = generates_all(mu, n, k, VerifyMode::greedy_first);
                const auto e = generates_all(mu, n, k, VerifyMode::exact_only);
                REQUIRE(g.outcome == e.outcome);
                REQUIRE(g.counterexample == e.counterexample);
            }
}

TEST_CASE("search budget exhaustion is reported, never guessed")
{
    const auto r = search_generation(Partition{3, 2, 2, 1, 1}, Partition{4, 3, 2}, SearchBudget{0});
    CHECK(r.status == SearchStatus::exhausted);
    CHECK_FALSE(r.plan.has_value());

    const auto report = generates_all(Partition{1, 1, 1, 1, 1, 1}, 6, 3, VerifyMode::exact_only, SearchBudget{3});
    CHECK(report.outcome == Outcome::inconclusive);
    CHECK_FALSE(report.counterexample.has_value());

    CHECK_THROWS_AS(brute_force_min_size(12, 4, SearchBudget{10}), SearchExhausted);
    CHECK_THROWS_AS(feasible_generators(8, 2, SearchBudget{10}), SearchExhausted);
    CHECK(check_suffix_property(Partition{3, 2, 2, 1, 1}, 3, 2, SearchBudget{2}) == SuffixCheck::inconclusive);
}

TEST_CASE("brute_force_min_size examples")
{
    const auto nine = brute_force_min_size(9, 3);
    CHECK(nine.size == 5);
    CHECK(generates_all(nine.witness, 9, 3, VerifyMode::exact_only).outcome == Outcome::pass);
    CHECK(brute_force_min_size(8, 2).size == 4);
    for (Part n = 1; n <= 8; ++n) {
        const auto one = brute_force_min_size(n, 1);
        CHECK(one.size == 1);
        CHECK(one.witness == Partition{n});
    }
}

TEST_CASE("brute force agrees with the published table on a small corner")
{
    for (Part k = 1; k <= 5; ++k)
        for (Part n = 1; n <= 10; ++n)
            REQUIRE(brute_force_min_size(n, k).size == testing::published_size(n, k));
}

TEST_CASE("feasible_generators of 4 with k = 2")
{
    const auto found = feasible_generators(4, 2);
    CHECK(found == std::vector<Partition>{Partition{2, 1, 1}, Partition{1, 1, 1, 1}});
    CHECK(feasible_generators(6, 1) == enumerate_partitions(6, 6));
}

TEST_CASE("check_prefix_dominance")
{
    const Partition mu{3, 2, 2, 1, 1};
    CHECK(check_prefix_dominance(mu, Partition{2, 2, 2, 1, 1, 1}).holds);
    CHECK(generates_all(Partition{2, 2, 2, 1, 1, 1}, 9, 3, VerifyMode::exact_only).outcome == Outcome::pass);
    CHECK(check_prefix_dominance(mu, mu).holds);
    CHECK(check_prefix_dominance(mu, Partition{1, 1, 1, 1, 1, 1, 1, 1, 1}).holds);

    const auto bad = check_prefix_dominance(Partition{2, 1, 1}, Partition{3, 1});
    CHECK_FALSE(bad.holds);
    CHECK(bad.first_violation == 1);
    const auto later = check_prefix_dominance(Partition{3, 1, 1, 1}, Partition{3, 2, 1});
    CHECK(later.first_violation == 2);
}

TEST_CASE("check_suffix_property")
{
    const Partition lambda{3, 2, 2, 1, 1};
    CHECK(check_suffix_property(lambda, 3, 2) == SuffixCheck::holds);
    CHECK(check_suffix_property(lambda, 3, 4) == SuffixCheck::holds);
    CHECK(check_suffix_property(lambda, 3, 5) == SuffixCheck::holds);
    CHECK(check_suffix_property(Partition{3, 3, 3}, 3, 2) == SuffixCheck::not_a_generator);
    CHECK_THROWS_AS(check_suffix_property(lambda, 3, 1), InputError);
    CHECK_THROWS_AS(check_suffix_property(lambda, 3, 6), InputError);
}

TEST_CASE("tail of the minimal generator generates the residual")
{
    for (Part k = 1; k <= 5; ++k)
        for (Part n = 1; n <= 24; ++n) {
            const Partition mu = minimal_generator(n, k);
            for (std::size_t m = 0; m < mu.size(); ++m) {
                const Partition tail = mu.suffix(m);
                REQUIRE(tail.weight() == n - mu.prefix_sum(m));
                REQUIRE(generates_all(tail, tail.weight(), k, VerifyMode::exact_only).outcome == Outcome::pass);
            }
        }
}
