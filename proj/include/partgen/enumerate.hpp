#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <vector>

#include "partgen/partition.hpp"

namespace partgen {

/*
 * Range over the partitions of n with at most max_parts parts.
 *
 * Order is lexicographically decreasing: (n) first, then (n-1, 1), ... For
 * n = 9, max_parts = 3 that is 9 | 8 1 | 7 2 | 7 1 1 | 6 3 | ... | 3 3 3.
 * Each partition appears exactly once.
 *
 *     for (const Partition& p : PartitionRange(9, 3)) { ... }
 */
class PartitionRange {
public:
    PartitionRange(Part n, std::size_t max_parts);

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Partition;
        using difference_type = std::ptrdiff_t;
        using pointer = const Partition*;
        using reference = const Partition&;

        iterator() = default;

        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }
        iterator& operator++();
        void operator++(int) { ++*this; }

        friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }

    private:
        friend class PartitionRange;
        iterator(Part n, std::size_t max_parts);

        std::size_t max_parts_ = 0;
        std::vector<Part> parts_;
        Partition current_{1};
        bool done_ = true;
    };

    iterator begin() const { return iterator(n_, max_parts_); }
    std::default_sentinel_t end() const { return {}; }

private:
    Part n_;
    std::size_t max_parts_;
};

/// All partitions of n with at most max_parts parts, in PartitionRange order.
std::vector<Partition> enumerate_partitions(Part n, std::size_t max_parts);

/// Partitions of n with exactly `parts` parts, in PartitionRange order.
std::vector<Partition> partitions_with_size(Part n, std::size_t parts);

/*
 * Number of partitions of n (n >= 0) into at most max_parts parts, by the
 * recurrence p(n, m) = p(n - m, m) + p(n, m - 1) with p(0, m) = 1.
 * Independent of PartitionRange. Throws std::overflow_error past 2^64 - 1.
 */
std::uint64_t count_partitions(Part n, std::size_t max_parts);

} // namespace partgen
