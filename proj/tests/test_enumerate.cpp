#include <doctest.h>

#include <set>
#include <vector>

#include "partgen/enumerate.hpp"
#include "support/oracles.hpp"

using namespace partgen;

namespace {

std::vector<std::vector<Part>> listing(Part n, std::size_t m)
{
    std::vector<std::vector<Part>> out;
    for (const Partition& p : PartitionRange(n, m))
        out.push_back(p.values());
    return out;
}

} // namespace

TEST_CASE("enumeration of 4 into at most 2 parts")
{
    CHECK(listing(4, 2) == std::vector<std::vector<Part>>{{4}, {3, 1}, {2, 2}});
    CHECK(count_partitions(4, 2) == 3);
}

TEST_CASE("enumeration order is lexicographically decreasing")
{
    const auto all = listing(9, 3);
    CHECK(all.size() == 12);
    CHECK(count_partitions(9, 3) == 12);
    CHECK(all.front() == std::vector<Part>{9});
    CHECK(all[1] == std::vector<Part>{8, 1});
    CHECK(all.back() == std::vector<Part>{3, 3, 3});
    for (std::size_t i = 1; i < all.size(); ++i)
        CHECK(all[i - 1] > all[i]);
}

TEST_CASE("single part and all parts")
{
    for (Part n = 1; n <= 15; ++n)
        CHECK(listing(n, 1) == std::vector<std::vector<Part>>{{n}});
    CHECK(listing(5, 99).size() == 7);
    CHECK(listing(1, 3) == std::vector<std::vector<Part>>{{1}});
}

TEST_CASE("count_partitions base cases")
{
    for (std::size_t m = 1; m <= 5; ++m)
        CHECK(count_partitions(0, m) == 1);
    CHECK(count_partitions(100, 100) == 190569292ull);
    CHECK_THROWS_AS(count_partitions(-1, 3), InputError);
    CHECK_THROWS_AS(count_partitions(5, 0), InputError);
}

TEST_CASE("enumeration matches the counting recurrence and a naive listing")
{
    for (Part n = 1; n <= 40; ++n)
        for (std::size_t m = 1; m <= 8; ++m) {
            const auto all = listing(n, m);
            const std::set<std::vector<Part>> unique(all.begin(), all.end());
            REQUIRE(unique.size() == all.size());
            REQUIRE(all.size() == count_partitions(n, m));
            for (const auto& p : all)
                REQUIRE(p.size() <= m);
            if (n <= 22)
                REQUIRE(unique == testing::naive_partitions(n, m));
        }
}

TEST_CASE("partitions_with_size keeps exactly that many parts")
{
    const auto three = partitions_with_size(9, 3);
    CHECK(three.size() == 7);
    for (const auto& p : three)
        CHECK(p.size() == 3);
    CHECK(partitions_with_size(4, 4) == std::vector<Partition>{Partition{1, 1, 1, 1}});
}

TEST_CASE("range rejects bad domains")
{
    CHECK_THROWS_AS(PartitionRange(0, 3), InputError);
    CHECK_THROWS_AS(PartitionRange(3, 0), InputError);
}
