#include <doctest.h>

#include <vector>

#include "partgen/enumerate.hpp"
#include "partgen/generator.hpp"
#include "partgen/greedy.hpp"

using namespace partgen;

TEST_CASE("greedy reproduces the (3+1, 2+1, 2) placement")
{
    const auto out = greedy_generate(Partition{3, 2, 2, 1, 1}, Partition{4, 3, 2});
    REQUIRE(out.succeeded());
    CHECK(out.plan->assignment == std::vector<std::size_t>{0, 1, 2, 0, 1});
    CHECK(out.plan->group_sums() == std::vector<Part>{4, 3, 2});
    CHECK(out.plan->to_string() == "4 = 3+1; 3 = 2+1; 2 = 2");
    CHECK(is_valid_plan(*out.plan));
    REQUIRE(out.trace.steps.size() == 5);
    CHECK(out.trace.steps[0].remaining == std::vector<Part>{1, 3, 2});
    CHECK(out.trace.steps[4].remaining == std::vector<Part>{0, 0, 0});
    CHECK_FALSE(out.trace.stuck_part.has_value());
}

TEST_CASE("greedy identity plan")
{
    const auto out = greedy_generate(Partition{5}, Partition{5});
    REQUIRE(out.succeeded());
    CHECK(out.plan->to_string() == "5 = 5");
    CHECK(out.plan->groups() == std::vector<std::vector<std::size_t>>{{0}});
}

TEST_CASE("greedy failure records the stuck part and the capacities")
{
    const auto out = greedy_generate(Partition{3, 1}, Partition{2, 2});
    CHECK_FALSE(out.succeeded());
    REQUIRE(out.trace.stuck_part.has_value());
    CHECK(*out.trace.stuck_part == 0); // first source part (1-based position 1)
    CHECK(out.trace.steps.empty());
    CHECK(out.trace.remaining_at_stop == std::vector<Part>{2, 2});
}

TEST_CASE("greedy prefers the larger original target, then the larger remaining capacity")
{
    // The first 2 fits on both targets; the original 3 wins.
    auto out = greedy_generate(Partition{2, 2, 1}, Partition{3, 2});
    REQUIRE(out.succeeded());
    CHECK(out.plan->assignment == std::vector<std::size_t>{0, 1, 0});

    // Equal originals: the second part goes to the target with more room left.
    out = greedy_generate(Partition{1, 1, 1, 1}, Partition{2, 2});
    REQUIRE(out.succeeded());
    CHECK(out.plan->assignment == std::vector<std::size_t>{0, 1, 0, 1});
}

TEST_CASE("greedy weight mismatch is a contract error, not a failure")
{
    CHECK_THROWS_AS(greedy_generate(Partition{5}, Partition{3, 3}), WeightMismatch);
}

TEST_CASE("stuck invariant: every remaining capacity is below the stuck part")
{
    for (Part n = 1; n <= 12; ++n)
        for (const Partition& mu : PartitionRange(n, static_cast<std::size_t>(n)))
            for (const Partition& gamma : PartitionRange(n, 4)) {
                const auto out = greedy_generate(mu, gamma);
                for (const auto& step : out.trace.steps)
                    for (const Part r : step.remaining)
                        REQUIRE(r >= 0);
                if (out.succeeded()) {
                    REQUIRE(is_valid_plan(*out.plan));
                    continue;
                }
                const Part stuck = mu[*out.trace.stuck_part];
                for (const Part r : out.trace.remaining_at_stop)
                    REQUIRE(r < stuck);
            }
}

TEST_CASE("is_valid_plan rejects broken plans")
{
    GenerationPlan plan{Partition{2, 2, 1}, Partition{4, 1}, {0, 0, 1}};
    CHECK(is_valid_plan(plan));
    plan.assignment = {0, 1, 0};
    CHECK_FALSE(is_valid_plan(plan));
    plan.assignment = {0, 0};
    CHECK_FALSE(is_valid_plan(plan));
    plan.assignment = {0, 0, 2};
    CHECK_FALSE(is_valid_plan(plan));
}
