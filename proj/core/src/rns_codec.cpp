#include "rnsgen/rns_codec.hpp"

#include <stdexcept>
#include <string>

#include "rnsgen/number_theory.hpp"

namespace rnsgen {

namespace {

constexpr std::uint64_t kMaxModulus = 0xFFFFFFFFull;  // keeps channel ops in u64

// Inverse of a modulo m via the extended Euclidean algorithm.
// Requires gcd(a, m) = 1 and m >= 2; result lies in (0, m).
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
  std::int64_t old_r = static_cast<std::int64_t>(a % m);
  std::int64_t r = static_cast<std::int64_t>(m);
  std::int64_t old_s = 1;
  std::int64_t s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) {
    throw std::logic_error("modular inverse of " + std::to_string(a) +
                           " mod " + std::to_string(m) + " does not exist");
  }
  const std::int64_t inv = old_s % static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(inv < 0 ? inv + static_cast<std::int64_t>(m) : inv);
}

void require_shape(const RnsContext& ctx, const RnsVector& v) {
  if (v.residues.size() != ctx.channels()) {
    throw std::invalid_argument(
        "residue vector has " + std::to_string(v.residues.size()) +
        " channels, context has " + std::to_string(ctx.channels()));
  }
  for (std::size_t i = 0; i < ctx.channels(); ++i) {
    if (v.residues[i] >= ctx.moduli[i]) {
      throw std::invalid_argument("residue " + std::to_string(v.residues[i]) +
                                  " is not reduced modulo " +
                                  std::to_string(ctx.moduli[i]));
    }
  }
}

}  // namespace

RnsContext make_context(std::span<const std::uint64_t> moduli) {
  if (moduli.empty()) {
    throw std::invalid_argument("context requires at least one modulus");
  }
  for (std::uint64_t m : moduli) {
    if (m < 2) {
      throw std::invalid_argument("modulus " + std::to_string(m) + " is below 2");
    }
    if (m > kMaxModulus) {
      throw std::invalid_argument("modulus " + std::to_string(m) +
                                  " exceeds 2^32 - 1");
    }
  }
  if (auto violation = find_coprime_violation(moduli)) {
    throw std::invalid_argument(
        "moduli " + std::to_string(violation->first) + " and " +
        std::to_string(violation->second) + " share factor " +
        std::to_string(violation->shared_factor));
  }

  RnsContext ctx;
  ctx.moduli.assign(moduli.begin(), moduli.end());
  ctx.modulus_product = 1;
  for (std::uint64_t m : moduli) {
    ctx.modulus_product *= m;
  }
  ctx.partial_products.reserve(moduli.size());
  ctx.inverses.reserve(moduli.size());
  ctx.constants.reserve(moduli.size());
  for (std::uint64_t m : moduli) {
    BigInt partial = ctx.modulus_product / m;
    const std::uint64_t reduced = static_cast<std::uint64_t>(partial % m);
    const std::uint64_t inverse = mod_inverse(reduced, m);
    ctx.constants.push_back(partial * inverse);
    ctx.partial_products.push_back(std::move(partial));
    ctx.inverses.push_back(inverse);
  }
  return ctx;
}

RnsVector to_rns(const RnsContext& ctx, const BigInt& value) {
  if (value < 0 || value >= ctx.modulus_product) {
    throw std::out_of_range("value " + value.str() +
                            " is outside [0, P) with P = " +
                            ctx.modulus_product.str());
  }
  RnsVector v;
  v.residues.reserve(ctx.channels());
  for (std::uint64_t m : ctx.moduli) {
    v.residues.push_back(static_cast<std::uint64_t>(value % m));
  }
  return v;
}

BigInt from_rns(const RnsContext& ctx, const RnsVector& v) {
  require_shape(ctx, v);
  BigInt sum = 0;
  for (std::size_t i = 0; i < ctx.channels(); ++i) {
    sum += ctx.constants[i] * v.residues[i];
  }
  return sum % ctx.modulus_product;
}

RnsVector channel_op(const RnsContext& ctx, const RnsVector& a,
                     const RnsVector& b, ChannelOp op) {
  require_shape(ctx, a);
  require_shape(ctx, b);
  RnsVector result;
  result.residues.reserve(ctx.channels());
  for (std::size_t i = 0; i < ctx.channels(); ++i) {
    const std::uint64_t m = ctx.moduli[i];
    const std::uint64_t x = a.residues[i];
    const std::uint64_t y = b.residues[i];
    std::uint64_t r = 0;
    switch (op) {
      case ChannelOp::kAdd:
        r = (x + y) % m;
        break;
      case ChannelOp::kSub:
        r = (x + m - y) % m;
        break;
      case ChannelOp::kMul:
        r = (x * y) % m;
        break;
    }
    result.residues.push_back(r);
  }
  return result;
}

}  // namespace rnsgen
