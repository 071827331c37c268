#pragma once

#include <cstdint>
#include <span>

#include "rnsgen/bigint.hpp"

namespace rnsgen {

/// Exact product of a moduli set and its bit width.
/// bits == floor(log2(product)) + 1 == bit_length(product).
struct DynamicRange {
  BigInt product;
  std::uint64_t bits = 0;
};

/// Exact arbitrary-precision product and bit width. Throws std::domain_error
/// on an empty list or a modulus < 2.
DynamicRange exact_range(std::span<const std::uint64_t> moduli);

/// Bit width computed via segmented multiplication: moduli are grouped
/// greedily into consecutive segments whose exact products stay below
/// 2^segment_bit_limit, and the segment products are then combined exactly.
/// Always equals exact_range(moduli).bits; the segmentation exists to keep
/// intermediate products bounded. Throws std::domain_error if the limit is
/// smaller than a single modulus's bit length.
std::uint64_t segmented_bits(std::span<const std::uint64_t> moduli,
                             std::uint64_t segment_bit_limit = 1000);

}  // namespace rnsgen
