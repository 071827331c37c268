#include "rnsgen/dynamic_range.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace rnsgen {

namespace {

void require_usable(std::span<const std::uint64_t> moduli) {
  if (moduli.empty()) {
    throw std::domain_error("dynamic range of an empty moduli list is undefined");
  }
  for (std::uint64_t m : moduli) {
    if (m < 2) {
      throw std::domain_error("modulus " + std::to_string(m) + " is below 2");
    }
  }
}

std::uint64_t word_bit_length(std::uint64_t v) {
  std::uint64_t bits = 0;
  while (v != 0) {
    ++bits;
    v >>= 1;
  }
  return bits;
}

}  // namespace

DynamicRange exact_range(std::span<const std::uint64_t> moduli) {
  require_usable(moduli);
  DynamicRange range;
  range.product = 1;
  for (std::uint64_t m : moduli) {
    range.product *= m;
  }
  range.bits = bit_length(range.product);
  return range;
}

std::uint64_t segmented_bits(std::span<const std::uint64_t> moduli,
                             std::uint64_t segment_bit_limit) {
  require_usable(moduli);
  std::vector<BigInt> segments;
  BigInt current = 1;
  for (std::uint64_t m : moduli) {
    if (word_bit_length(m) > segment_bit_limit) {
      throw std::domain_error("segment bit limit " +
                              std::to_string(segment_bit_limit) +
                              " is smaller than modulus " + std::to_string(m));
    }
    if (current != 1 && bit_length(current * m) > segment_bit_limit) {
      segments.push_back(current);
      current = m;
    } else {
      current *= m;
    }
  }
  segments.push_back(current);

  // Segment products are combined exactly, so the segmented route returns
  // the same bit width as the direct product.
  BigInt total = 1;
  for (const BigInt& segment : segments) {
    total *= segment;
  }
  return bit_length(total);
}

}  // namespace rnsgen
