#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace partgen {

/// Part values, weights and fleet sizes are all plain counts.
using Part = std::int64_t;

/// Malformed input: empty or non-positive parts, bad ranges, bad files.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Two partitions that are required to share a weight do not.
class WeightMismatch : public InputError {
public:
    WeightMismatch(Part source_weight, Part target_weight);

    Part source_weight() const noexcept { return source_weight_; }
    Part target_weight() const noexcept { return target_weight_; }

private:
    Part source_weight_;
    Part target_weight_;
};

/*
 * An integer partition: a non-increasing sequence of positive parts.
 *
 * Values are normalized (sorted) once at construction, so every consumer may
 * rely on parts()[0] >= parts()[1] >= ... >= parts()[size() - 1] >= 1.
 * The weight is accumulated with an overflow check.
 */
class Partition {
public:
    explicit Partition(std::vector<Part> values);
    Partition(std::initializer_list<Part> values)
        : Partition(std::vector<Part>(values))
    {
    }

    std::span<const Part> parts() const noexcept { return parts_; }
    const std::vector<Part>& values() const noexcept { return parts_; }
    Part weight() const noexcept { return weight_; }
    std::size_t size() const noexcept { return parts_.size(); }
    Part operator[](std::size_t i) const { return parts_[i]; }
    Part largest() const noexcept { return parts_.front(); }
    Part smallest() const noexcept { return parts_.back(); }

    /// Parts from 0-based index `first` to the end, as a partition of their own sum.
    Partition suffix(std::size_t first) const;

    /// Sum of the first `count` parts.
    Part prefix_sum(std::size_t count) const;

    /// Space separated parts, e.g. "3 2 2 1 1".
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b)
    {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<Part> parts_;
    Part weight_ = 0;
};

Partition make_partition(std::span<const Part> values);

/// Overflow-checked addition used by every weight/prefix accumulation.
Part checked_add(Part a, Part b);

} // namespace partgen
