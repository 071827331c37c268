#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rnsgen/bigint.hpp"

namespace rnsgen {

/// Precomputed reconstruction data for one moduli set p_1..p_n:
///   modulus_product      P = p_1 * ... * p_n
///   partial_products     P / p_i
///   inverses             q_i with q_i * (P / p_i) = 1 (mod p_i)
///   constants            C_i = (P / p_i) * q_i
/// so C_i = 1 (mod p_i), C_i = 0 (mod p_j) for j != i, and sum C_i = 1 (mod P).
/// Immutable after construction; shareable across threads.
struct RnsContext {
  std::vector<std::uint64_t> moduli;
  BigInt modulus_product;
  std::vector<BigInt> partial_products;
  std::vector<std::uint64_t> inverses;
  std::vector<BigInt> constants;

  std::size_t channels() const { return moduli.size(); }
};

/// Residue tuple aligned channel-by-channel with an RnsContext:
/// 0 <= residues[i] < moduli[i].
struct RnsVector {
  std::vector<std::uint64_t> residues;

  bool operator==(const RnsVector&) const = default;
};

enum class ChannelOp { kAdd, kSub, kMul };

/// Builds the CRT constants for a pairwise co-prime moduli list (each
/// modulus in [2, 2^32 - 1]); inverses are found with the extended
/// Euclidean algorithm. Throws std::invalid_argument naming the offending
/// pair and shared factor when the list is not pairwise co-prime.
RnsContext make_context(std::span<const std::uint64_t> moduli);

/// Forward conversion: residues[i] = value mod p_i.
/// Throws std::out_of_range unless 0 <= value < P.
RnsVector to_rns(const RnsContext& ctx, const BigInt& value);

/// Reverse conversion, the CRT evaluation
///   S = (S_1 * C_1 + ... + S_n * C_n) mod P.
/// Throws std::invalid_argument on a channel-count mismatch.
BigInt from_rns(const RnsContext& ctx, const RnsVector& v);

/// Channelwise modular arithmetic: result[i] = (a[i] op b[i]) mod p_i.
/// Subtraction wraps into [0, p_i). Channels are independent.
RnsVector channel_op(const RnsContext& ctx, const RnsVector& a,
                     const RnsVector& b, ChannelOp op);

}  // namespace rnsgen
