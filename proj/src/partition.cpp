#include "partgen/partition.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace partgen {

WeightMismatch::WeightMismatch(Part source_weight, Part target_weight)
    : InputError("weight mismatch: source partition has weight " + std::to_string(source_weight)
                 + " but target has weight " + std::to_string(target_weight))
    , source_weight_(source_weight)
    , target_weight_(target_weight)
{
}

Part checked_add(Part a, Part b)
{
    Part out = 0;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("partition weight exceeds 64-bit range");
    return out;
}

Partition::Partition(std::vector<Part> values)
    : parts_(std::move(values))
{
    if (parts_.empty())
        throw InputError("a partition needs at least one part");
    for (Part p : parts_) {
        if (p < 1)
            throw InputError("partition parts must be positive, got " + std::to_string(p));
        weight_ = checked_add(weight_, p);
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition Partition::suffix(std::size_t first) const
{
    if (first >= parts_.size())
        throw InputError("suffix start " + std::to_string(first) + " is past the last part");
    return Partition(std::vector<Part>(parts_.begin() + static_cast<std::ptrdiff_t>(first), parts_.end()));
}

Part Partition::prefix_sum(std::size_t count) const
{
    count = std::min(count, parts_.size());
    Part sum = 0;
    for (std::size_t i = 0; i < count; ++i)
        sum += parts_[i];
    return sum;
}

std::string Partition::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += ' ';
        out += std::to_string(parts_[i]);
    }
    return out;
}

Partition make_partition(std::span<const Part> values)
{
    return Partition(std::vector<Part>(values.begin(), values.end()));
}

} // namespace partgen
