#include "rnsgen/complexity_model.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace rnsgen {

ComplexityEstimate estimate(std::uint64_t range_lo, std::uint64_t range_hi,
                            std::uint64_t set_size) {
  if (range_lo < 2 || range_lo >= range_hi) {
    throw std::invalid_argument("invalid range [" + std::to_string(range_lo) +
                                ", " + std::to_string(range_hi) +
                                "]: need 2 <= lo < hi");
  }
  if (set_size == 0) {
    throw std::invalid_argument("set size must be at least 1");
  }
  ComplexityEstimate est;
  est.range_lo = range_lo;
  est.range_hi = range_hi;
  est.range_size = range_hi - range_lo + 1;
  est.set_size = set_size;
  const BigInt n = est.range_size;
  const BigInt k = set_size;
  est.operations = BigInt(range_hi) * (n * n + k * k * k);
  return est;
}

namespace {

constexpr bool row_consistent(std::uint64_t lo, std::uint64_t hi, std::uint64_t k,
                              std::uint64_t operations) {
  const std::uint64_t n = hi - lo + 1;
  return hi * (n * n + k * k * k) == operations;
}

constexpr ReferenceRow make_row(std::uint64_t lo, std::uint64_t hi,
                                std::uint64_t k, std::uint64_t operations) {
  return ReferenceRow{lo, hi, k, operations, row_consistent(lo, hi, k, operations)};
}

constexpr std::array<ReferenceRow, 11> kReferenceRows = {
    make_row(2, 32, 11, 73'344),
    make_row(2, 64, 18, 627'264),
    make_row(2, 128, 31, 5'877'760),
    make_row(2, 256, 54, 56'957'184),
    make_row(2, 512, 99, 630'407'680),          // fails the closed form
    make_row(2, 1024, 172, 6'282'265'664),      // fails the closed form
    make_row(2, 2048, 309, 68'988'812'224),     // fails the closed form
    make_row(17, 31, 7, 17'608),
    make_row(33, 64, 11, 150'720),
    make_row(65, 128, 17, 1'153'152),
    make_row(129, 256, 27, 9'233'152),
};

}  // namespace

std::span<const ReferenceRow> reference_table() { return kReferenceRows; }

}  // namespace rnsgen
