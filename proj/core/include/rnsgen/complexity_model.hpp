#pragma once

#include <cstdint>
#include <span>

#include "rnsgen/bigint.hpp"

namespace rnsgen {

/// Closed-form operation-count estimate for generating a set of k moduli
/// over [range_lo, range_hi]:
///   operations = range_hi * (range_size^2 + set_size^3)
/// with range_size = range_hi - range_lo + 1.
struct ComplexityEstimate {
  std::uint64_t range_lo = 0;
  std::uint64_t range_hi = 0;
  std::uint64_t range_size = 0;
  std::uint64_t set_size = 0;
  BigInt operations;
};

/// Evaluates the closed form exactly in wide integers.
/// Throws std::invalid_argument unless 2 <= range_lo < range_hi and
/// set_size >= 1.
ComplexityEstimate estimate(std::uint64_t range_lo, std::uint64_t range_hi,
                            std::uint64_t set_size);

/// Reference operation counts for representative ranges. `consistent` marks
/// rows whose tabulated count matches the closed form for the tabulated set
/// size; three wide-range rows fail that check and are reported as-is with
/// the flag cleared rather than silently corrected.
struct ReferenceRow {
  std::uint64_t range_lo;
  std::uint64_t range_hi;
  std::uint64_t set_size;
  std::uint64_t operations;
  bool consistent;
};

std::span<const ReferenceRow> reference_table();

}  // namespace rnsgen
