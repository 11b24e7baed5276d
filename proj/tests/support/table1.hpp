#pragma once

#include <array>
#include <cstdint>

namespace partgen::testing {

// Published generator sizes, n = 1..20 across, k = 1..10 down.
inline constexpr std::array<std::array<std::int64_t, 20>, 10> kPublishedSizes{{
    { 1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1,  1}, // k = 1
    { 1,  2,  2,  3,  3,  3,  3,  4,  4,  4,  4,  4,  4,  4,  4,  5,  5,  5,  5,  5}, // k = 2
    { 1,  2,  3,  3,  4,  4,  4,  5,  5,  5,  5,  6,  6,  6,  6,  6,  6,  7,  7,  7}, // k = 3
    { 1,  2,  3,  4,  4,  5,  5,  6,  6,  6,  7,  7,  7,  7,  8,  8,  8,  8,  8,  9}, // k = 4
    { 1,  2,  3,  4,  5,  5,  6,  6,  7,  7,  7,  8,  8,  8,  9,  9,  9,  9, 10, 10}, // k = 5
    { 1,  2,  3,  4,  5,  6,  6,  7,  7,  8,  8,  9,  9,  9, 10, 10, 10, 11, 11, 11}, // k = 6
    { 1,  2,  3,  4,  5,  6,  7,  7,  8,  8,  9,  9, 10, 10, 10, 11, 11, 11, 12, 12}, // k = 7
    { 1,  2,  3,  4,  5,  6,  7,  8,  8,  9,  9, 10, 10, 11, 11, 12, 12, 12, 13, 13}, // k = 8
    { 1,  2,  3,  4,  5,  6,  7,  8,  9,  9, 10, 10, 11, 11, 12, 12, 13, 13, 13, 14}, // k = 9
    { 1,  2,  3,  4,  5,  6,  7,  8,  9, 10, 10, 11, 11, 12, 12, 13, 13, 14, 14, 15}, // k = 10
}};

inline std::int64_t published_size(std::int64_t n, std::int64_t k)
{
    return kPublishedSizes[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(n - 1)];
}

} // namespace partgen::testing
