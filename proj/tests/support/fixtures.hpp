#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Frozen reference sets for the full-range fixtures. Sizes and dynamic
// ranges are pinned alongside the sets so drift in any direction fails.
namespace fixtures {

inline const std::vector<std::uint64_t> kSet32 = {32, 31, 29, 27, 25, 23,
                                                  19, 17, 13, 11, 7};
inline constexpr std::uint64_t kBits32 = 48;

inline const std::vector<std::uint64_t> kSet64 = {64, 61, 59, 53, 49, 47,
                                                  43, 41, 37, 31, 29, 27,
                                                  25, 23, 19, 17, 13, 11};
inline constexpr std::uint64_t kBits64 = 90;

inline const std::vector<std::uint64_t> kSet128 = {
    128, 127, 125, 121, 113, 109, 107, 103, 101, 97, 89, 83, 81, 79, 73, 71,
    67,  61,  59,  53,  49,  47,  43,  41,  37,  31, 29, 23, 19, 17, 13};
inline constexpr std::uint64_t kBits128 = 184;

inline const std::vector<std::uint64_t> kSet256 = {
    256, 251, 243, 241, 239, 233, 229, 227, 223, 211, 199, 197, 193, 191,
    181, 179, 173, 169, 167, 163, 157, 151, 149, 139, 137, 131, 127, 125,
    121, 113, 109, 107, 103, 101, 97,  89,  83,  79,  73,  71,  67,  61,
    59,  53,  49,  47,  43,  41,  37,  31,  29,  23,  19,  17};
inline constexpr std::uint64_t kBits256 = 363;

// The canonical text report for [2, 32], byte for byte.
inline const std::string kReport32 =
    "Range: from X=2 to Y=32\n"
    "The number of co-primes in the set is k=11\n"
    "The dynamic range is 48 bits\n"
    "The set of co-primes:\n"
    "    32    31    29    27    25    23    19    17    13    11\n"
    "     7\n";

}  // namespace fixtures
