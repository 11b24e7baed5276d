#pragma once

#include <cstdint>
#include <vector>

#include "partgen/partition.hpp"

namespace partgen {

/// ceil(a / b) for a >= 0, b >= 1.
constexpr Part ceil_div(Part a, Part b) noexcept
{
    return a / b + (a % b != 0 ? 1 : 0);
}

/*
 * The smallest partition of n that can be regrouped into every partition of n
 * with at most k parts.
 *
 * Built greedily: each part is ceil(residual / k) of what is still unassigned,
 * until nothing is left. Residuals strictly decrease, so the parts come out
 * non-increasing and the first part is always ceil(n / k).
 *
 * Throws InputError for n < 1 or k < 1.
 */
Partition minimal_generator(Part n, Part k);

/// Number of parts of minimal_generator(n, k), computed without materializing it.
std::int64_t generator_size(Part n, Part k);

/// generator_size(n, k) for every n in [0, n_max] at fixed k; entry 0 is 0.
std::vector<std::int64_t> generator_size_column(Part k, Part n_max);

/*
 * ceil(log_{k/(k-1)} n) + 1, evaluated exactly.
 *
 * Finds the smallest t >= 0 with k^t >= n * (k-1)^t by multiplying
 * arbitrary-precision integers, then adds one. No floating point is involved,
 * so exact powers (n = 16, k = 2) land on the right side. Returns 1 for k = 1.
 * Cost grows like k * log(n) big-integer steps.
 */
std::int64_t size_upper_bound(Part n, Part k);

/*
 * Precomputed size_upper_bound(., k) for all n up to a ceiling.
 *
 * Stores floor(k^t / (k-1)^t) for t = 0, 1, ... until it reaches n_max;
 * bound(n) is one plus the first t whose threshold is at least n. Same answer
 * as size_upper_bound, amortized for sweeps over n.
 */
class UpperBoundLadder {
public:
    UpperBoundLadder(Part k, Part n_max);

    std::int64_t bound(Part n) const;
    Part k() const noexcept { return k_; }
    Part n_max() const noexcept { return n_max_; }
    const std::vector<Part>& thresholds() const noexcept { return thresholds_; }

private:
    Part k_;
    Part n_max_;
    std::vector<Part> thresholds_;
};

/// Grid of generator sizes, n in [1, n_max] across, k in [1, k_max] down.
struct SizeTable {
    Part n_max = 0;
    Part k_max = 0;
    std::vector<std::int64_t> entries; // row-major by k

    std::int64_t at(Part n, Part k) const;
};

SizeTable make_size_table(Part n_max, Part k_max);

} // namespace partgen
