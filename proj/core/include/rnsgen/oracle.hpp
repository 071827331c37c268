#pragma once

#include <cstdint>

#include "rnsgen/bigint.hpp"
#include "rnsgen/generator.hpp"

namespace rnsgen {

/// Exhaustive-search ceiling on range_hi; the subset search is exponential.
inline constexpr std::uint64_t kOracleRangeLimit = 64;

struct OracleResult {
  ModuliSet best;
  BigInt best_product;
  std::uint64_t nodes_explored = 0;
};

/// True maximum-product pairwise co-prime subset of [range_lo, range_hi],
/// found by branch-and-bound: values are branched on in descending order and
/// a subtree is pruned when the current product times the product of all
/// remaining compatible values cannot beat the incumbent. Ties are broken
/// toward the lexicographically largest descending moduli list. Unlike the
/// greedy generator, no power-of-two membership is imposed; the result
/// measures pure product optimality. Throws std::invalid_argument when
/// range_hi exceeds kOracleRangeLimit.
OracleResult optimal_set(std::uint64_t range_lo, std::uint64_t range_hi);

}  // namespace rnsgen
