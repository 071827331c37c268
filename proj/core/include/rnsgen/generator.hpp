#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rnsgen/number_theory.hpp"

namespace rnsgen {

enum class ValueKind {
  kPrime,
  kPrimePower,     // q^e with e >= 2
  kComposite,      // odd, two or more distinct primes
  kEvenComposite,  // even, not a power of two
};

enum class Decision {
  kSelected,
  kRejected,
  kSubstitutedIn,
  kSubstitutedOut,
};

/// One integer of the scanned range together with its classification and,
/// once a phase has ruled on it, the decision taken.
struct CandidateRecord {
  std::uint64_t value = 0;
  PrimeFactorSet factors;
  ValueKind kind = ValueKind::kComposite;
  std::optional<Decision> decision;
};

/// A pairwise co-prime moduli set over [range_lo, range_hi].
///
/// Invariants: `moduli` is strictly descending; every modulus lies in the
/// range; at most one modulus is even and if so it is a power of two; the
/// largest in-range power of two is a member whenever one exists. `trace`
/// is the chronological log of every accept/reject/substitute decision, so
/// a run can be audited after the fact.
struct ModuliSet {
  std::vector<std::uint64_t> moduli;
  std::uint64_t range_lo = 0;
  std::uint64_t range_hi = 0;
  std::optional<std::uint64_t> power_of_two;
  std::vector<CandidateRecord> trace;
  std::vector<std::string> warnings;

  std::size_t size() const { return moduli.size(); }
};

/// Phase 1: classify every integer in [range_lo, range_hi], descending.
/// Primes and prime powers are the co-prime candidates for phase 3.
/// Throws std::invalid_argument unless 2 <= range_lo < range_hi.
std::vector<CandidateRecord> identify_candidates(std::uint64_t range_lo,
                                                 std::uint64_t range_hi);

/// Phase 2: keep the largest power of two in range and mark every other
/// even value rejected. If the range contains no power of two, every even
/// value is rejected.
std::vector<CandidateRecord> filter_evens(std::vector<CandidateRecord> candidates);

/// Phase 3: descending greedy scan over the surviving prime and prime-power
/// candidates; a candidate is selected iff its factors are disjoint from
/// every previously selected modulus.
ModuliSet greedy_select(const std::vector<CandidateRecord>& candidates);

/// Phase 4: substitution refinement, iterated to a fixpoint. Each pass
/// scans every currently unselected, non-even-rejected value c descending;
/// where c exceeds the product of the selected moduli it conflicts with
/// (empty product = 1), those moduli are removed and c inserted. Every
/// substitution strictly increases the set product, so the loop terminates.
ModuliSet substitute_pass(ModuliSet set,
                          const std::vector<CandidateRecord>& candidates);

/// Full pipeline: identify_candidates -> filter_evens -> greedy_select ->
/// substitute_pass. Requires 2 <= range_lo < range_hi <= 2^32 - 1. Attaches
/// a warning (not an error) when the range contains no power of two.
ModuliSet generate(std::uint64_t range_lo, std::uint64_t range_hi);

}  // namespace rnsgen
