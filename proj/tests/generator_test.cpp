#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "rnsgen/bigint.hpp"
#include "rnsgen/generator.hpp"
#include "support/fixtures.hpp"

using namespace rnsgen;

namespace {

const CandidateRecord& record_for(const std::vector<CandidateRecord>& records,
                                  std::uint64_t value) {
  const auto it =
      std::find_if(records.begin(), records.end(),
                   [&](const CandidateRecord& r) { return r.value == value; });
  REQUIRE(it != records.end());
  return *it;
}

bool contains(const std::vector<std::uint64_t>& values, std::uint64_t v) {
  return std::find(values.begin(), values.end(), v) != values.end();
}

BigInt product_of(const std::vector<std::uint64_t>& values) {
  BigInt product = 1;
  for (std::uint64_t v : values) {
    product *= v;
  }
  return product;
}

bool naive_is_prime(std::uint64_t n) {
  if (n < 2) {
    return false;
  }
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      return false;
    }
  }
  return true;
}

// For each prime p <= y, the largest power p^e <= y; descending. A co-prime
// set over [2, y] can never beat the product of these.
std::vector<std::uint64_t> max_prime_powers_descending(std::uint64_t y) {
  std::vector<std::uint64_t> result;
  for (std::uint64_t p = 2; p <= y; ++p) {
    if (!naive_is_prime(p)) {
      continue;
    }
    std::uint64_t power = p;
    while (power <= y / p) {
      power *= p;
    }
    result.push_back(power);
  }
  std::sort(result.begin(), result.end(), std::greater<std::uint64_t>{});
  return result;
}

// Every structural promise a generated set makes, checked with plain gcd
// rather than the library's own co-primality test.
void check_set_invariants(const ModuliSet& set) {
  REQUIRE(std::is_sorted(set.moduli.begin(), set.moduli.end(),
                         std::greater<std::uint64_t>{}));
  REQUIRE(std::adjacent_find(set.moduli.begin(), set.moduli.end()) ==
          set.moduli.end());

  std::size_t evens = 0;
  for (std::uint64_t m : set.moduli) {
    REQUIRE(m >= set.range_lo);
    REQUIRE(m <= set.range_hi);
    if (m % 2 == 0) {
      ++evens;
      REQUIRE((m & (m - 1)) == 0);  // the only even member is a power of two
      REQUIRE(set.power_of_two == m);
    }
  }
  REQUIRE(evens <= 1);

  for (std::size_t i = 0; i < set.moduli.size(); ++i) {
    for (std::size_t j = i + 1; j < set.moduli.size(); ++j) {
      REQUIRE(std::gcd(set.moduli[i], set.moduli[j]) == 1);
    }
  }

  // The largest power of two in range must be a member whenever one exists.
  std::uint64_t largest_pot = 0;
  for (std::uint64_t v = set.range_hi;; --v) {
    if (v != 0 && (v & (v - 1)) == 0) {
      largest_pot = v;
      break;
    }
    if (v == set.range_lo) {
      break;
    }
  }
  if (largest_pot != 0) {
    REQUIRE(set.power_of_two == largest_pot);
    REQUIRE(contains(set.moduli, largest_pot));
  } else {
    REQUIRE_FALSE(set.power_of_two.has_value());
  }

  // Maximality over the odd values: anything odd and unselected must share
  // a factor with some member, otherwise substitution would have added it.
  for (std::uint64_t v = set.range_lo; v <= set.range_hi; ++v) {
    if (v % 2 == 0 || contains(set.moduli, v)) {
      continue;
    }
    const bool blocked =
        std::any_of(set.moduli.begin(), set.moduli.end(),
                    [&](std::uint64_t m) { return std::gcd(v, m) != 1; });
    REQUIRE(blocked);
  }

  // Replaying the decision trace must land exactly on the final set.
  std::set<std::uint64_t> replayed;
  for (const CandidateRecord& rec : set.trace) {
    REQUIRE(rec.decision.has_value());
    switch (*rec.decision) {
      case Decision::kSelected:
      case Decision::kSubstitutedIn:
        REQUIRE(replayed.insert(rec.value).second);
        break;
      case Decision::kSubstitutedOut:
        REQUIRE(replayed.erase(rec.value) == 1);
        break;
      case Decision::kRejected:
        break;
    }
  }
  REQUIRE(replayed ==
          std::set<std::uint64_t>(set.moduli.begin(), set.moduli.end()));
}

}  // namespace

TEST_CASE("identify_candidates classifies a small range") {
  const auto records = identify_candidates(2, 8);
  REQUIRE(records.size() == 7);
  CHECK(records.front().value == 8);  // descending scan
  CHECK(records.back().value == 2);
  CHECK(record_for(records, 8).kind == ValueKind::kPrimePower);
  CHECK(record_for(records, 7).kind == ValueKind::kPrime);
  CHECK(record_for(records, 6).kind == ValueKind::kEvenComposite);
  CHECK(record_for(records, 5).kind == ValueKind::kPrime);
  CHECK(record_for(records, 4).kind == ValueKind::kPrimePower);
  CHECK(record_for(records, 3).kind == ValueKind::kPrime);
  CHECK(record_for(records, 2).kind == ValueKind::kPrime);
  for (const CandidateRecord& rec : records) {
    CHECK_FALSE(rec.decision.has_value());  // no phase has ruled yet
    CHECK(rec.factors.value == rec.value);
  }
}

TEST_CASE("identify_candidates over [17, 31]") {
  const auto records = identify_candidates(17, 31);
  for (std::uint64_t p : {17, 19, 23, 29, 31}) {
    CHECK(record_for(records, p).kind == ValueKind::kPrime);
  }
  CHECK(record_for(records, 25).kind == ValueKind::kPrimePower);
  CHECK(record_for(records, 27).kind == ValueKind::kPrimePower);
  CHECK(record_for(records, 21).kind == ValueKind::kComposite);
  CHECK(record_for(records, 18).kind == ValueKind::kEvenComposite);
  CHECK(record_for(records, 24).kind == ValueKind::kEvenComposite);
}

TEST_CASE("identify_candidates over [129, 256] spot values") {
  const auto records = identify_candidates(129, 256);
  CHECK(record_for(records, 243).kind == ValueKind::kPrimePower);
  CHECK(record_for(records, 243).factors.primes ==
        std::vector<std::uint64_t>{3});
  CHECK(record_for(records, 255).kind == ValueKind::kComposite);
  CHECK(record_for(records, 254).kind == ValueKind::kEvenComposite);
  CHECK(record_for(records, 256).kind == ValueKind::kPrimePower);
}

TEST_CASE("identify_candidates rejects bad ranges") {
  CHECK_THROWS_AS(identify_candidates(1, 5), std::invalid_argument);
  CHECK_THROWS_AS(identify_candidates(5, 5), std::invalid_argument);
  CHECK_THROWS_AS(identify_candidates(8, 2), std::invalid_argument);
}

TEST_CASE("filter_evens keeps only the largest power of two") {
  const auto records = filter_evens(identify_candidates(2, 32));
  for (const CandidateRecord& rec : records) {
    if (rec.value % 2 != 0) {
      CHECK_FALSE(rec.decision.has_value());
    } else if (rec.value == 32) {
      CHECK_FALSE(rec.decision.has_value());
    } else {
      CHECK(rec.decision == Decision::kRejected);
    }
  }
}

TEST_CASE("filter_evens rejects every even when no power of two is in range") {
  const auto records = filter_evens(identify_candidates(17, 31));
  for (const CandidateRecord& rec : records) {
    if (rec.value % 2 == 0) {
      CHECK(rec.decision == Decision::kRejected);
    } else {
      CHECK_FALSE(rec.decision.has_value());
    }
  }
}

TEST_CASE("greedy_select reproduces the full-range selections") {
  const ModuliSet set32 = greedy_select(filter_evens(identify_candidates(2, 32)));
  CHECK(set32.moduli == fixtures::kSet32);
  CHECK(set32.power_of_two == 32);

  const ModuliSet set64 = greedy_select(filter_evens(identify_candidates(2, 64)));
  CHECK(set64.moduli == fixtures::kSet64);
}

TEST_CASE("greedy_select over an all-odd range") {
  const ModuliSet set = greedy_select(filter_evens(identify_candidates(17, 31)));
  CHECK(set.moduli ==
        std::vector<std::uint64_t>{31, 29, 27, 25, 23, 19, 17});
  CHECK_FALSE(set.power_of_two.has_value());
}

TEST_CASE("substitution swaps 255 in for 243 over [129, 256]") {
  const auto candidates = filter_evens(identify_candidates(129, 256));
  const ModuliSet greedy = greedy_select(candidates);
  CHECK(contains(greedy.moduli, 243));
  CHECK(contains(greedy.moduli, 169));

  const ModuliSet refined = substitute_pass(greedy, candidates);
  CHECK(contains(refined.moduli, 255));   // 255 = 3*5*17 beats 243 = 3^5
  CHECK(contains(refined.moduli, 247));   // 247 = 13*19 beats 169 = 13^2
  CHECK(contains(refined.moduli, 253));   // 253 = 11*23, no conflict at all
  CHECK(contains(refined.moduli, 217));   // 217 = 7*31, no conflict at all
  CHECK_FALSE(contains(refined.moduli, 243));
  CHECK_FALSE(contains(refined.moduli, 169));
  CHECK(refined.size() == 28);
  CHECK(product_of(refined.moduli) > product_of(greedy.moduli));

  const auto out_243 = std::find_if(
      refined.trace.begin(), refined.trace.end(), [](const CandidateRecord& r) {
        return r.value == 243 && r.decision == Decision::kSubstitutedOut;
      });
  CHECK(out_243 != refined.trace.end());
  const auto in_255 = std::find_if(
      refined.trace.begin(), refined.trace.end(), [](const CandidateRecord& r) {
        return r.value == 255 && r.decision == Decision::kSubstitutedIn;
      });
  CHECK(in_255 != refined.trace.end());
}

TEST_CASE("substitution leaves a full range untouched") {
  const auto candidates = filter_evens(identify_candidates(2, 256));
  const ModuliSet greedy = greedy_select(candidates);
  const ModuliSet refined = substitute_pass(greedy, candidates);
  CHECK(refined.moduli == greedy.moduli);
}

TEST_CASE("substitution inserts plain composites when nothing conflicts") {
  // No primes or prime powers at all in [33, 35]; the set is built purely
  // by insertion.
  const ModuliSet set = generate(33, 35);
  CHECK(set.moduli == std::vector<std::uint64_t>{35, 33});
}

TEST_CASE("generate matches the frozen full-range sets") {
  CHECK(generate(2, 32).moduli == fixtures::kSet32);
  CHECK(generate(2, 64).moduli == fixtures::kSet64);
  CHECK(generate(2, 128).moduli == fixtures::kSet128);
  CHECK(generate(2, 256).moduli == fixtures::kSet256);
}

TEST_CASE("generate over [2, 20]") {
  CHECK(generate(2, 20).moduli ==
        std::vector<std::uint64_t>{19, 17, 16, 13, 11, 9, 7, 5});
}

TEST_CASE("generate is deterministic, trace included") {
  const ModuliSet a = generate(60, 420);
  const ModuliSet b = generate(60, 420);
  CHECK(a.moduli == b.moduli);
  CHECK(a.power_of_two == b.power_of_two);
  CHECK(a.warnings == b.warnings);
  REQUIRE(a.trace.size() == b.trace.size());
  for (std::size_t i = 0; i < a.trace.size(); ++i) {
    CHECK(a.trace[i].value == b.trace[i].value);
    CHECK(a.trace[i].kind == b.trace[i].kind);
    CHECK(a.trace[i].decision == b.trace[i].decision);
  }
}

TEST_CASE("generate warns when the range has no power of two") {
  const ModuliSet set = generate(17, 31);
  REQUIRE(set.warnings.size() == 1);
  CHECK(set.warnings.front().find("no power of two") != std::string::npos);
  CHECK(generate(2, 32).warnings.empty());
}

TEST_CASE("generate rejects bad ranges") {
  CHECK_THROWS_AS(generate(1, 10), std::invalid_argument);
  CHECK_THROWS_AS(generate(5, 5), std::invalid_argument);
  CHECK_THROWS_AS(generate(10, 2), std::invalid_argument);
  CHECK_THROWS_AS(generate(2, 0x100000000ull), std::invalid_argument);
}

TEST_CASE("full ranges collapse to the maximal prime powers") {
  for (std::uint64_t y : {32, 64, 128, 256, 512}) {
    const ModuliSet set = generate(2, y);
    CHECK(set.moduli == max_prime_powers_descending(y));
  }
}

TEST_CASE("set invariants hold on the fixture ranges") {
  for (std::uint64_t y : {32, 64, 128, 256}) {
    check_set_invariants(generate(2, y));
  }
  check_set_invariants(generate(17, 31));
  check_set_invariants(generate(33, 128));
  check_set_invariants(generate(65, 128));
  check_set_invariants(generate(129, 256));
}

TEST_CASE("set invariants hold on random ranges") {
  std::mt19937_64 rng(20241105);
  std::uniform_int_distribution<std::uint64_t> lo_dist(2, 1500);
  std::uniform_int_distribution<std::uint64_t> len_dist(1, 1500);
  for (int i = 0; i < 40; ++i) {
    const std::uint64_t lo = lo_dist(rng);
    const std::uint64_t hi = lo + len_dist(rng);
    CAPTURE(lo);
    CAPTURE(hi);
    const ModuliSet set = generate(lo, hi);
    check_set_invariants(set);

    // Substitution may only improve on the greedy product.
    const auto candidates = filter_evens(identify_candidates(lo, hi));
    const ModuliSet greedy = greedy_select(candidates);
    CHECK(product_of(set.moduli) >= product_of(greedy.moduli));
  }
}
