#include "partgen/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "partgen/generator.hpp"

namespace partgen {

namespace {

// Appends the lexicographically largest tail: as many `cap`s as fit, then the rest.
void fill_greedy(std::vector<Part>& parts, Part amount, Part cap)
{
    while (amount > 0) {
        const Part p = std::min(amount, cap);
        parts.push_back(p);
        amount -= p;
    }
}

} // namespace

PartitionRange::PartitionRange(Part n, std::size_t max_parts)
    : n_(n)
    , max_parts_(std::min(max_parts, static_cast<std::size_t>(n < 1 ? 1 : n)))
{
    if (n < 1)
        throw InputError("n must be a positive integer, got " + std::to_string(n));
    if (max_parts < 1)
        throw InputError("max_parts must be at least 1");
}

PartitionRange::iterator::iterator(Part n, std::size_t max_parts)
    : max_parts_(max_parts)
    , parts_{n}
    , current_(std::vector<Part>{n})
    , done_(false)
{
}

PartitionRange::iterator& PartitionRange::iterator::operator++()
{
    // Rightmost position that can drop by one while the freed amount plus
    // everything after it still fits in the remaining slots below the new cap.
    Part tail = 0;
    for (std::size_t i = parts_.size(); i-- > 0;) {
        const Part v = parts_[i];
        const Part amount = tail + 1;
        tail += v;
        if (v < 2)
            continue;
        const std::size_t slots = max_parts_ - i - 1;
        if (slots == 0)
            continue;
        if (ceil_div(amount, static_cast<Part>(slots)) > v - 1)
            continue;
        parts_.resize(i + 1);
        parts_[i] = v - 1;
        fill_greedy(parts_, amount, v - 1);
        current_ = Partition(parts_);
        return *this;
    }
    done_ = true;
    return *this;
}

std::vector<Partition> enumerate_partitions(Part n, std::size_t max_parts)
{
    std::vector<Partition> out;
    for (const Partition& p : PartitionRange(n, max_parts))
        out.push_back(p);
    return out;
}

std::vector<Partition> partitions_with_size(Part n, std::size_t parts)
{
    std::vector<Partition> out;
    for (const Partition& p : PartitionRange(n, parts))
        if (p.size() == parts)
            out.push_back(p);
    return out;
}

std::uint64_t count_partitions(Part n, std::size_t max_parts)
{
    if (n < 0)
        throw InputError("cannot count partitions of a negative number");
    if (max_parts < 1)
        throw InputError("max_parts must be at least 1");
    const auto size = static_cast<std::size_t>(n);
    const std::size_t m_top = std::min(max_parts, std::max<std::size_t>(size, 1));

    // row[j] holds p(j, m) for the current m; starts at p(j, 0).
    std::vector<std::uint64_t> row(size + 1, 0);
    row[0] = 1;
    for (std::size_t m = 1; m <= m_top; ++m)
        for (std::size_t j = m; j <= size; ++j)
            if (__builtin_add_overflow(row[j], row[j - m], &row[j]))
                throw std::overflow_error("partition count exceeds 64-bit range");
    return row[size];
}

} // namespace partgen
