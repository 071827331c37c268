#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace rnsgen {

/// Distinct prime factors of a positive integer, ascending. Exponents are
/// deliberately not tracked: co-primality testing only needs to know which
/// primes are present.
struct PrimeFactorSet {
  std::uint64_t value = 0;
  std::vector<std::uint64_t> primes;

  bool operator==(const PrimeFactorSet&) const = default;
};

/// Prime factorization by trial division. Divisors run from 2 up to the
/// square root of the not-yet-factored remainder; each divisor is divided
/// out to exhaustion before advancing, so the bound shrinks as factors are
/// found. Throws std::domain_error for n < 2.
PrimeFactorSet factorize(std::uint64_t n);

bool is_prime(std::uint64_t n);

/// Base prime q when n = q^e for some e >= 1, std::nullopt otherwise.
/// Throws std::domain_error for n < 2.
std::optional<std::uint64_t> prime_power_base(std::uint64_t n);

/// Co-primality via factor-set intersection: true iff the distinct prime
/// factors of a and b are disjoint. 1 is co-prime to everything.
bool are_coprime(std::uint64_t a, std::uint64_t b);

struct CoprimeViolation {
  std::uint64_t first = 0;
  std::uint64_t second = 0;
  std::uint64_t shared_factor = 0;
};

/// First pair (in list order) of values sharing a prime factor, if any.
std::optional<CoprimeViolation> find_coprime_violation(
    std::span<const std::uint64_t> values);

}  // namespace rnsgen
