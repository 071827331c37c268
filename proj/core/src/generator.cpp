#include "rnsgen/generator.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace rnsgen {

namespace {

constexpr std::uint64_t kMaxUpperBound = 0xFFFFFFFFull;  // 2^32 - 1

bool is_power_of_two(std::uint64_t v) { return v != 0 && (v & (v - 1)) == 0; }

ValueKind classify(const PrimeFactorSet& factors) {
  if (factors.primes.size() == 1) {
    return factors.primes.front() == factors.value ? ValueKind::kPrime
                                                   : ValueKind::kPrimePower;
  }
  // Two or more distinct primes; an even value here is never a power of two.
  return factors.value % 2 == 0 ? ValueKind::kEvenComposite : ValueKind::kComposite;
}

bool is_candidate(const CandidateRecord& rec) {
  return rec.kind == ValueKind::kPrime || rec.kind == ValueKind::kPrimePower;
}

bool rejected(const CandidateRecord& rec) {
  return rec.decision == Decision::kRejected;
}

void require_valid_range(std::uint64_t lo, std::uint64_t hi) {
  if (lo < 2 || lo >= hi) {
    throw std::invalid_argument("invalid range [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "]: need 2 <= lo < hi");
  }
}

}  // namespace

std::vector<CandidateRecord> identify_candidates(std::uint64_t range_lo,
                                                 std::uint64_t range_hi) {
  require_valid_range(range_lo, range_hi);
  std::vector<CandidateRecord> records;
  records.reserve(range_hi - range_lo + 1);
  for (std::uint64_t v = range_hi;; --v) {
    CandidateRecord rec;
    rec.value = v;
    rec.factors = factorize(v);
    rec.kind = classify(rec.factors);
    records.push_back(std::move(rec));
    if (v == range_lo) {
      break;
    }
  }
  return records;
}

std::vector<CandidateRecord> filter_evens(std::vector<CandidateRecord> candidates) {
  // Records are descending, so the first power of two is the largest.
  std::optional<std::uint64_t> kept;
  for (const CandidateRecord& rec : candidates) {
    if (is_power_of_two(rec.value)) {
      kept = rec.value;
      break;
    }
  }
  for (CandidateRecord& rec : candidates) {
    if (rec.value % 2 == 0 && rec.value != kept) {
      rec.decision = Decision::kRejected;
    }
  }
  return candidates;
}

ModuliSet greedy_select(const std::vector<CandidateRecord>& candidates) {
  if (candidates.empty()) {
    throw std::invalid_argument("empty candidate list");
  }
  ModuliSet set;
  set.range_hi = candidates.front().value;
  set.range_lo = candidates.back().value;

  // Phase-2 rejections enter the trace first, in scan order.
  for (const CandidateRecord& rec : candidates) {
    if (rejected(rec)) {
      set.trace.push_back(rec);
    }
  }

  // A candidate is co-prime to every selected modulus iff none of its
  // primes is already claimed.
  std::unordered_set<std::uint64_t> claimed_primes;
  for (const CandidateRecord& rec : candidates) {
    if (rejected(rec) || !is_candidate(rec)) {
      continue;
    }
    const bool compatible =
        std::none_of(rec.factors.primes.begin(), rec.factors.primes.end(),
                     [&](std::uint64_t p) { return claimed_primes.contains(p); });
    CandidateRecord decided = rec;
    decided.decision = compatible ? Decision::kSelected : Decision::kRejected;
    set.trace.push_back(decided);
    if (compatible) {
      set.moduli.push_back(rec.value);
      claimed_primes.insert(rec.factors.primes.begin(), rec.factors.primes.end());
      if (is_power_of_two(rec.value)) {
        set.power_of_two = rec.value;
      }
    }
  }
  return set;
}

ModuliSet substitute_pass(ModuliSet set,
                          const std::vector<CandidateRecord>& candidates) {
  std::unordered_map<std::uint64_t, const CandidateRecord*> by_value;
  for (const CandidateRecord& rec : candidates) {
    by_value.emplace(rec.value, &rec);
  }

  // Selected moduli have disjoint factor sets, so each prime is claimed by
  // at most one of them.
  std::unordered_map<std::uint64_t, std::uint64_t> owner_of_prime;
  std::unordered_set<std::uint64_t> selected(set.moduli.begin(), set.moduli.end());
  for (std::uint64_t m : set.moduli) {
    for (std::uint64_t p : by_value.at(m)->factors.primes) {
      owner_of_prime[p] = m;
    }
  }

  const auto even_rejected = [&](std::uint64_t v) {
    return v % 2 == 0 && v != set.power_of_two;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (const CandidateRecord& rec : candidates) {
      const std::uint64_t c = rec.value;
      if (selected.contains(c) || even_rejected(c)) {
        continue;
      }
      // Selected moduli sharing a prime factor with c.
      std::vector<std::uint64_t> conflicts;
      for (std::uint64_t p : rec.factors.primes) {
        auto it = owner_of_prime.find(p);
        if (it != owner_of_prime.end() &&
            std::find(conflicts.begin(), conflicts.end(), it->second) ==
                conflicts.end()) {
          conflicts.push_back(it->second);
        }
      }
      // c beats the conflict product? Compare without forming a product
      // that could overflow: once the partial product passes c the rule
      // cannot fire.
      std::uint64_t conflict_product = 1;
      bool exceeds_c = false;
      for (std::uint64_t m : conflicts) {
        if (conflict_product > c / m) {
          exceeds_c = true;
          break;
        }
        conflict_product *= m;
      }
      if (exceeds_c || c <= conflict_product) {
        continue;
      }

      for (std::uint64_t m : conflicts) {
        selected.erase(m);
        set.moduli.erase(std::find(set.moduli.begin(), set.moduli.end(), m));
        const CandidateRecord* removed = by_value.at(m);
        for (std::uint64_t p : removed->factors.primes) {
          owner_of_prime.erase(p);
        }
        CandidateRecord out = *removed;
        out.decision = Decision::kSubstitutedOut;
        set.trace.push_back(std::move(out));
      }
      selected.insert(c);
      set.moduli.insert(
          std::lower_bound(set.moduli.begin(), set.moduli.end(), c,
                           std::greater<std::uint64_t>{}),
          c);
      for (std::uint64_t p : rec.factors.primes) {
        owner_of_prime[p] = c;
      }
      CandidateRecord in = rec;
      in.decision = Decision::kSubstitutedIn;
      set.trace.push_back(std::move(in));
      changed = true;
    }
  }
  return set;
}

ModuliSet generate(std::uint64_t range_lo, std::uint64_t range_hi) {
  require_valid_range(range_lo, range_hi);
  if (range_hi > kMaxUpperBound) {
    throw std::invalid_argument("upper bound " + std::to_string(range_hi) +
                                " exceeds 2^32 - 1");
  }
  const std::vector<CandidateRecord> candidates =
      filter_evens(identify_candidates(range_lo, range_hi));
  ModuliSet set = substitute_pass(greedy_select(candidates), candidates);
  if (!set.power_of_two) {
    set.warnings.push_back("range [" + std::to_string(range_lo) + ", " +
                           std::to_string(range_hi) +
                           "] contains no power of two; all even values were "
                           "excluded from the set");
  }
  return set;
}

}  // namespace rnsgen
