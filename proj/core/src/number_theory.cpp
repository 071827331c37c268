#include "rnsgen/number_theory.hpp"

#include <stdexcept>
#include <string>

namespace rnsgen {

PrimeFactorSet factorize(std::uint64_t n) {
  if (n < 2) {
    throw std::domain_error("factorization undefined for n = " + std::to_string(n));
  }
  PrimeFactorSet result;
  result.value = n;
  std::uint64_t remaining = n;
  // d <= remaining / d avoids the d * d overflow near 2^64.
  for (std::uint64_t d = 2; d <= remaining / d; ++d) {
    if (remaining % d == 0) {
      result.primes.push_back(d);
      while (remaining % d == 0) {
        remaining /= d;
      }
    }
  }
  if (remaining > 1) {
    result.primes.push_back(remaining);
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) {
    return false;
  }
  const PrimeFactorSet factors = factorize(n);
  return factors.primes.size() == 1 && factors.primes.front() == n;
}

std::optional<std::uint64_t> prime_power_base(std::uint64_t n) {
  const PrimeFactorSet factors = factorize(n);
  if (factors.primes.size() == 1) {
    return factors.primes.front();
  }
  return std::nullopt;
}

namespace {

bool disjoint(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia == *ib) {
      return false;
    }
    if (*ia < *ib) {
      ++ia;
    } else {
      ++ib;
    }
  }
  return true;
}

}  // namespace

bool are_coprime(std::uint64_t a, std::uint64_t b) {
  if (a == 1 || b == 1) {
    return true;
  }
  return disjoint(factorize(a).primes, factorize(b).primes);
}

std::optional<CoprimeViolation> find_coprime_violation(
    std::span<const std::uint64_t> values) {
  std::vector<PrimeFactorSet> factors;
  factors.reserve(values.size());
  for (std::uint64_t v : values) {
    factors.push_back(v == 1 ? PrimeFactorSet{1, {}} : factorize(v));
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      for (std::uint64_t p : factors[i].primes) {
        for (std::uint64_t q : factors[j].primes) {
          if (p == q) {
            return CoprimeViolation{values[i], values[j], p};
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace rnsgen
