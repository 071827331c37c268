#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rnsgen/generator.hpp"

namespace rnsgen {

/// The fields a generation run reports: the range, the moduli (descending),
/// the dynamic range in bits, and any warnings attached along the way.
struct ResultReport {
  std::uint64_t range_lo = 0;
  std::uint64_t range_hi = 0;
  std::vector<std::uint64_t> moduli;
  std::uint64_t dynamic_range_bits = 0;
  std::vector<std::string> warnings;

  std::size_t count() const { return moduli.size(); }

  bool operator==(const ResultReport&) const = default;
};

ResultReport make_report(const ModuliSet& set);

/// Canonical text layout, newline-terminated ASCII:
///
///   Range: from X=2 to Y=32
///   The number of co-primes in the set is k=11
///   The dynamic range is 48 bits
///   The set of co-primes:
///       32    31    29    27    25    23    19    17    13    11
///        7
///
/// Moduli are printed descending, ten per line, right-aligned in six-column
/// fields. Warnings are not part of the canonical layout.
std::string render_text(const ResultReport& report);

/// Structured counterpart of the text layout: same fields plus the full
/// decision trace.
nlohmann::json render_structured(const ModuliSet& set);

/// coprimes_result_<X>_<Y>.txt
std::string default_result_filename(std::uint64_t range_lo, std::uint64_t range_hi);

/// Parses the canonical text layout. Throws std::runtime_error on malformed
/// input (wrong header lines, moduli count disagreeing with k, ...).
ResultReport parse_report_text(std::istream& in);

/// Extracts a moduli list from canonical report text, a structured JSON
/// report, or a plain whitespace/comma separated list of integers.
/// Throws std::runtime_error when the content fits none of the three.
std::vector<std::uint64_t> parse_moduli(const std::string& content);

}  // namespace rnsgen
