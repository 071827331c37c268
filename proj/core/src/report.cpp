#include "rnsgen/report.hpp"

#include <charconv>
#include <cstddef>
#include <iomanip>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include "rnsgen/dynamic_range.hpp"

namespace rnsgen {

namespace {

constexpr int kColumnWidth = 6;
constexpr std::size_t kPerLine = 10;

constexpr const char* kRangePrefix = "Range: from X=";
constexpr const char* kRangeMid = " to Y=";
constexpr const char* kCountPrefix = "The number of co-primes in the set is k=";
constexpr const char* kBitsPrefix = "The dynamic range is ";
constexpr const char* kBitsSuffix = " bits";
constexpr const char* kSetHeader = "The set of co-primes:";

const char* kind_name(ValueKind kind) {
  switch (kind) {
    case ValueKind::kPrime:
      return "prime";
    case ValueKind::kPrimePower:
      return "prime_power";
    case ValueKind::kComposite:
      return "composite";
    case ValueKind::kEvenComposite:
      return "even_composite";
  }
  return "unknown";
}

const char* decision_name(Decision decision) {
  switch (decision) {
    case Decision::kSelected:
      return "selected";
    case Decision::kRejected:
      return "rejected";
    case Decision::kSubstitutedIn:
      return "substituted_in";
    case Decision::kSubstitutedOut:
      return "substituted_out";
  }
  return "unknown";
}

[[noreturn]] void malformed(const std::string& what) {
  throw std::runtime_error("malformed report: " + what);
}

std::uint64_t digits_to_u64(const std::string& text, const char* what) {
  std::uint64_t value = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    malformed(std::string("\"") + text + "\" is not a number (" + what + ")");
  }
  return value;
}

std::string take_line(std::istream& in, const char* what) {
  std::string line;
  if (!std::getline(in, line)) {
    malformed(std::string("missing ") + what + " line");
  }
  if (!line.empty() && line.back() == '\r') {
    line.pop_back();
  }
  return line;
}

// Parses "<prefix><number><suffix>"; the whole line must match.
std::uint64_t framed_number(const std::string& line, const std::string& prefix,
                            const std::string& suffix, const char* what) {
  if (line.size() < prefix.size() + suffix.size() + 1 ||
      line.compare(0, prefix.size(), prefix) != 0 ||
      line.compare(line.size() - suffix.size(), suffix.size(), suffix) != 0) {
    malformed(std::string("expected \"") + prefix + "...\" as the " + what +
              " line, got \"" + line + "\"");
  }
  return digits_to_u64(
      line.substr(prefix.size(), line.size() - prefix.size() - suffix.size()),
      what);
}

std::vector<std::uint64_t> moduli_from_json(const nlohmann::json& doc) {
  const nlohmann::json* list = &doc;
  if (doc.is_object()) {
    auto it = doc.find("moduli");
    if (it == doc.end()) {
      malformed("structured report has no \"moduli\" field");
    }
    list = &*it;
  }
  if (!list->is_array()) {
    malformed("\"moduli\" is not an array");
  }
  std::vector<std::uint64_t> moduli;
  moduli.reserve(list->size());
  for (const nlohmann::json& element : *list) {
    if (!element.is_number_unsigned()) {
      malformed("\"moduli\" contains a non-integer entry");
    }
    moduli.push_back(element.get<std::uint64_t>());
  }
  return moduli;
}

}  // namespace

ResultReport make_report(const ModuliSet& set) {
  ResultReport report;
  report.range_lo = set.range_lo;
  report.range_hi = set.range_hi;
  report.moduli = set.moduli;
  report.dynamic_range_bits =
      set.moduli.empty() ? 0 : exact_range(set.moduli).bits;
  report.warnings = set.warnings;
  return report;
}

std::string render_text(const ResultReport& report) {
  std::ostringstream out;
  out << kRangePrefix << report.range_lo << kRangeMid << report.range_hi
      << '\n';
  out << kCountPrefix << report.count() << '\n';
  out << kBitsPrefix << report.dynamic_range_bits << kBitsSuffix << '\n';
  out << kSetHeader << '\n';
  for (std::size_t i = 0; i < report.moduli.size(); ++i) {
    out << std::setw(kColumnWidth) << report.moduli[i];
    if ((i + 1) % kPerLine == 0 || i + 1 == report.moduli.size()) {
      out << '\n';
    }
  }
  return out.str();
}

nlohmann::json render_structured(const ModuliSet& set) {
  nlohmann::json doc;
  doc["range"] = {{"from", set.range_lo}, {"to", set.range_hi}};
  doc["count"] = set.size();
  doc["dynamic_range_bits"] =
      set.moduli.empty() ? 0 : exact_range(set.moduli).bits;
  doc["moduli"] = set.moduli;
  if (set.power_of_two) {
    doc["power_of_two"] = *set.power_of_two;
  } else {
    doc["power_of_two"] = nullptr;
  }
  doc["warnings"] = set.warnings;
  nlohmann::json trace = nlohmann::json::array();
  for (const CandidateRecord& record : set.trace) {
    nlohmann::json entry;
    entry["value"] = record.value;
    entry["kind"] = kind_name(record.kind);
    entry["primes"] = record.factors.primes;
    if (record.decision) {
      entry["decision"] = decision_name(*record.decision);
    } else {
      entry["decision"] = nullptr;
    }
    trace.push_back(std::move(entry));
  }
  doc["trace"] = std::move(trace);
  return doc;
}

std::string default_result_filename(std::uint64_t range_lo,
                                    std::uint64_t range_hi) {
  return "coprimes_result_" + std::to_string(range_lo) + "_" +
         std::to_string(range_hi) + ".txt";
}

ResultReport parse_report_text(std::istream& in) {
  ResultReport report;

  const std::string range_line = take_line(in, "range");
  if (range_line.compare(0, std::string(kRangePrefix).size(), kRangePrefix) !=
      0) {
    malformed(std::string("expected \"") + kRangePrefix +
              "...\" as the first line, got \"" + range_line + "\"");
  }
  const std::size_t mid =
      range_line.find(kRangeMid, std::string(kRangePrefix).size());
  if (mid == std::string::npos) {
    malformed(std::string("range line has no \"") + kRangeMid + "\" part");
  }
  const std::size_t lo_begin = std::string(kRangePrefix).size();
  report.range_lo =
      digits_to_u64(range_line.substr(lo_begin, mid - lo_begin), "range start");
  report.range_hi = digits_to_u64(
      range_line.substr(mid + std::string(kRangeMid).size()), "range end");

  const std::uint64_t count =
      framed_number(take_line(in, "count"), kCountPrefix, "", "count");
  report.dynamic_range_bits = framed_number(take_line(in, "dynamic range"),
                                            kBitsPrefix, kBitsSuffix,
                                            "dynamic range");
  if (take_line(in, "set header") != kSetHeader) {
    malformed(std::string("expected \"") + kSetHeader + "\"");
  }

  std::string token;
  while (in >> token) {
    report.moduli.push_back(digits_to_u64(token, "modulus"));
  }
  if (report.moduli.size() != count) {
    malformed("header says k=" + std::to_string(count) + " but " +
              std::to_string(report.moduli.size()) + " moduli follow");
  }
  return report;
}

std::vector<std::uint64_t> parse_moduli(const std::string& content) {
  const std::size_t start = content.find_first_not_of(" \t\r\n");
  if (start == std::string::npos) {
    malformed("input is empty");
  }
  if (content[start] == '{' || content[start] == '[') {
    try {
      return moduli_from_json(nlohmann::json::parse(content));
    } catch (const nlohmann::json::exception& error) {
      malformed(error.what());
    }
  }
  if (content.compare(start, std::string("Range:").size(), "Range:") == 0) {
    std::istringstream in(content.substr(start));
    return parse_report_text(in).moduli;
  }
  // Plain list: integers separated by whitespace and/or commas.
  std::string spaced = content;
  for (char& c : spaced) {
    if (c == ',') {
      c = ' ';
    }
  }
  std::istringstream in(spaced);
  std::vector<std::uint64_t> moduli;
  std::string token;
  while (in >> token) {
    moduli.push_back(digits_to_u64(token, "modulus"));
  }
  if (moduli.empty()) {
    malformed("no moduli found in the input");
  }
  return moduli;
}

}  // namespace rnsgen
