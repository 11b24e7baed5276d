#include "partgen/generator.hpp"

#include <algorithm>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace partgen {

namespace {

using BigInt = boost::multiprecision::cpp_int;

void require_domain(Part n, Part k)
{
    if (n < 1)
        throw InputError("n must be a positive integer, got " + std::to_string(n));
    if (k < 1)
        throw InputError("k must be a positive integer, got " + std::to_string(k));
}

} // namespace

Partition minimal_generator(Part n, Part k)
{
    require_domain(n, k);
    std::vector<Part> parts;
    for (Part residual = n; residual > 0;) {
        const Part part = ceil_div(residual, k);
        parts.push_back(part);
        residual -= part;
    }
    return Partition(std::move(parts));
}

std::int64_t generator_size(Part n, Part k)
{
    require_domain(n, k);
    std::int64_t size = 0;
    for (Part residual = n; residual > 0; ++size)
        residual -= ceil_div(residual, k);
    return size;
}

std::vector<std::int64_t> generator_size_column(Part k, Part n_max)
{
    if (k < 1)
        throw InputError("k must be a positive integer, got " + std::to_string(k));
    if (n_max < 0)
        throw InputError("n_max must be nonnegative");
    std::vector<std::int64_t> column(static_cast<std::size_t>(n_max) + 1, 0);
    for (Part n = 1; n <= n_max; ++n)
        column[n] = 1 + column[n - ceil_div(n, k)];
    return column;
}

std::int64_t size_upper_bound(Part n, Part k)
{
    require_domain(n, k);
    if (k == 1)
        return 1;
    BigInt grow = 1;  // k^t
    BigInt scaled = n; // n * (k-1)^t
    std::int64_t t = 0;
    while (grow < scaled) {
        grow *= k;
        scaled *= (k - 1);
        ++t;
    }
    return t + 1;
}

UpperBoundLadder::UpperBoundLadder(Part k, Part n_max)
    : k_(k)
    , n_max_(n_max)
{
    require_domain(n_max, k);
    if (k == 1) {
        thresholds_.push_back(n_max);
        return;
    }
    BigInt grow = 1;
    BigInt shrink = 1;
    for (;;) {
        const BigInt ratio = grow / shrink;
        if (ratio >= n_max) {
            thresholds_.push_back(n_max);
            break;
        }
        thresholds_.push_back(ratio.convert_to<Part>());
        grow *= k;
        shrink *= (k - 1);
    }
}

std::int64_t UpperBoundLadder::bound(Part n) const
{
    if (n < 1 || n > n_max_)
        throw InputError("n = " + std::to_string(n) + " is outside the ladder range [1, "
                         + std::to_string(n_max_) + "]");
    if (k_ == 1)
        return 1;
    const auto it = std::lower_bound(thresholds_.begin(), thresholds_.end(), n);
    return static_cast<std::int64_t>(it - thresholds_.begin()) + 1;
}

std::int64_t SizeTable::at(Part n, Part k) const
{
    if (n < 1 || n > n_max || k < 1 || k > k_max)
        throw InputError("table cell (n=" + std::to_string(n) + ", k=" + std::to_string(k)
                         + ") out of range");
    return entries[static_cast<std::size_t>((k - 1) * n_max + (n - 1))];
}

SizeTable make_size_table(Part n_max, Part k_max)
{
    require_domain(n_max, k_max);
    SizeTable table{n_max, k_max, {}};
    table.entries.reserve(static_cast<std::size_t>(n_max * k_max));
    for (Part k = 1; k <= k_max; ++k)
        for (Part n = 1; n <= n_max; ++n)
            table.entries.push_back(generator_size(n, k));
    return table;
}

} // namespace partgen
