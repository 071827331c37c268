// rnsgen — co-prime moduli set generation and RNS conversion front end.
//
// Subcommands: generate, verify, convert, estimate, oracle.
// Exit codes: 0 success, 2 usage error, 3 domain error (invalid input values,
// failed verification, oracle guard), 4 I/O or parse error.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "rnsgen/complexity_model.hpp"
#include "rnsgen/dynamic_range.hpp"
#include "rnsgen/generator.hpp"
#include "rnsgen/number_theory.hpp"
#include "rnsgen/oracle.hpp"
#include "rnsgen/report.hpp"
#include "rnsgen/rns_codec.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitIo = 4;

constexpr std::uint64_t kMaxUpperBound = 0xFFFFFFFFull;

// Every range-taking subcommand accepts the endpoints either positionally
// (X Y) or via --min/--max, but not both at once.
struct RangeArgs {
  std::optional<std::uint64_t> pos_lo;
  std::optional<std::uint64_t> pos_hi;
  std::optional<std::uint64_t> flag_lo;
  std::optional<std::uint64_t> flag_hi;

  void attach(CLI::App* cmd) {
    cmd->add_option("X", pos_lo, "range start (alternative to --min)");
    cmd->add_option("Y", pos_hi, "range end (alternative to --max)");
    cmd->add_option("--min,-x", flag_lo, "range start");
    cmd->add_option("--max,-y", flag_hi, "range end");
  }

  std::pair<std::uint64_t, std::uint64_t> resolve() const {
    if ((pos_lo && flag_lo) || (pos_hi && flag_hi)) {
      throw CLI::ValidationError(
          "give the range either positionally or with --min/--max, not both");
    }
    const std::optional<std::uint64_t> lo = flag_lo ? flag_lo : pos_lo;
    const std::optional<std::uint64_t> hi = flag_hi ? flag_hi : pos_hi;
    if (!lo || !hi) {
      throw CLI::ValidationError(
          "both range ends are required: give X Y or --min/--max");
    }
    if (*lo < 2 || *lo >= *hi || *hi > kMaxUpperBound) {
      throw CLI::ValidationError(
          "invalid range [" + std::to_string(*lo) + ", " + std::to_string(*hi) +
          "]: need 2 <= X < Y <= " + std::to_string(kMaxUpperBound));
    }
    return {*lo, *hi};
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw std::runtime_error("error reading " + path);
  }
  return buffer.str();
}

std::string join(const std::vector<std::string>& parts) {
  std::string joined;
  for (const std::string& part : parts) {
    if (!joined.empty()) {
      joined.push_back(' ');
    }
    joined += part;
  }
  return joined;
}

void print_moduli_block(std::ostream& out,
                        const std::vector<std::uint64_t>& moduli) {
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    out << std::setw(6) << moduli[i];
    if ((i + 1) % 10 == 0 || i + 1 == moduli.size()) {
      out << '\n';
    }
  }
}

void require_moduli_floor(const std::vector<std::uint64_t>& moduli) {
  for (std::uint64_t m : moduli) {
    if (m < 2) {
      throw std::domain_error("modulus " + std::to_string(m) +
                              " is below 2; moduli must be at least 2");
    }
  }
}

int run_generate(const RangeArgs& range, const std::string& out_path,
                 const std::string& format, bool quiet) {
  const auto [lo, hi] = range.resolve();
  const rnsgen::ModuliSet set = rnsgen::generate(lo, hi);
  for (const std::string& warning : set.warnings) {
    std::cerr << "warning: " << warning << '\n';
  }

  std::string payload;
  if (format == "structured") {
    payload = rnsgen::render_structured(set).dump(2);
    payload.push_back('\n');
  } else {
    payload = rnsgen::render_text(rnsgen::make_report(set));
  }

  const std::string path =
      out_path.empty() ? rnsgen::default_result_filename(lo, hi) : out_path;
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open " + path + " for writing");
  }
  out << payload;
  out.close();
  if (!out) {
    throw std::runtime_error("error writing " + path);
  }

  if (!quiet) {
    std::cout << payload;
  }
  std::cerr << "report written to " << path << '\n';
  return 0;
}

int run_verify(const std::vector<std::string>& list_args,
               const std::string& file_path, bool quiet) {
  if (list_args.empty() == file_path.empty()) {
    throw CLI::ValidationError(
        "give the moduli either inline or with --file, exactly one of the two");
  }
  const std::string content =
      file_path.empty() ? join(list_args) : read_file(file_path);
  const std::vector<std::uint64_t> moduli = rnsgen::parse_moduli(content);
  require_moduli_floor(moduli);

  if (const auto violation = rnsgen::find_coprime_violation(moduli)) {
    if (!quiet) {
      std::cout << "FAIL: moduli " << violation->first << " and "
                << violation->second << " share factor "
                << violation->shared_factor << '\n';
    }
    return kExitDomain;
  }
  if (!quiet) {
    const rnsgen::DynamicRange range = rnsgen::exact_range(moduli);
    std::cout << "PASS: pairwise co-prime moduli\n";
    std::cout << "The number of co-primes in the set is k=" << moduli.size()
              << '\n';
    std::cout << "The dynamic range is " << range.bits << " bits\n";
  }
  return 0;
}

int run_convert(const std::vector<std::string>& moduli_args,
                const std::string& file_path, const std::string& forward_text,
                const std::vector<std::uint64_t>& backward_residues) {
  if (moduli_args.empty() == file_path.empty()) {
    throw CLI::ValidationError(
        "give the moduli either with --moduli or with --file, exactly one of "
        "the two");
  }
  if (forward_text.empty() == backward_residues.empty()) {
    throw CLI::ValidationError(
        "give exactly one direction: --forward <value> or --backward "
        "<residues...>");
  }
  const std::string content =
      file_path.empty() ? join(moduli_args) : read_file(file_path);
  const std::vector<std::uint64_t> moduli = rnsgen::parse_moduli(content);
  const rnsgen::RnsContext ctx = rnsgen::make_context(moduli);

  if (!forward_text.empty()) {
    for (char c : forward_text) {
      if (c < '0' || c > '9') {
        throw CLI::ValidationError("--forward expects a decimal integer, got " +
                                   forward_text);
      }
    }
    const rnsgen::BigInt value(forward_text);
    const rnsgen::RnsVector v = rnsgen::to_rns(ctx, value);
    for (std::size_t i = 0; i < v.residues.size(); ++i) {
      std::cout << (i == 0 ? "" : " ") << v.residues[i];
    }
    std::cout << '\n';
  } else {
    const rnsgen::RnsVector v{backward_residues};
    std::cout << rnsgen::from_rns(ctx, v) << '\n';
  }
  return 0;
}

int run_estimate(const RangeArgs& range, bool table) {
  if (table) {
    for (const rnsgen::ReferenceRow& row : rnsgen::reference_table()) {
      std::cout << "[" << row.range_lo << ", " << row.range_hi << "]"
                << "  k=" << row.set_size << "  T=" << row.operations;
      if (!row.consistent) {
        std::cout << "  (closed form gives "
                  << rnsgen::estimate(row.range_lo, row.range_hi, row.set_size)
                         .operations
                  << ")";
      }
      std::cout << '\n';
    }
    return 0;
  }

  const auto [lo, hi] = range.resolve();
  const rnsgen::ModuliSet set = rnsgen::generate(lo, hi);
  for (const std::string& warning : set.warnings) {
    std::cerr << "warning: " << warning << '\n';
  }
  const rnsgen::ComplexityEstimate est =
      rnsgen::estimate(lo, hi, set.size());
  std::cout << "Range: from X=" << lo << " to Y=" << hi << '\n';
  std::cout << "N = " << est.range_size << " values in range\n";
  std::cout << "k = " << est.set_size << " moduli\n";
  std::cout << "T = Y * (N^2 + k^3) = " << est.operations << " operations\n";
  return 0;
}

int run_oracle(const RangeArgs& range) {
  const auto [lo, hi] = range.resolve();
  const rnsgen::ModuliSet greedy = rnsgen::generate(lo, hi);
  for (const std::string& warning : greedy.warnings) {
    std::cerr << "warning: " << warning << '\n';
  }
  const rnsgen::OracleResult oracle = rnsgen::optimal_set(lo, hi);
  const rnsgen::DynamicRange greedy_range = rnsgen::exact_range(greedy.moduli);
  const rnsgen::DynamicRange oracle_range =
      rnsgen::exact_range(oracle.best.moduli);

  std::cout << "Range: from X=" << lo << " to Y=" << hi << '\n';
  std::cout << "Greedy dynamic range: " << greedy_range.bits
            << " bits (k=" << greedy.size() << ")\n";
  std::cout << "Oracle dynamic range: " << oracle_range.bits
            << " bits (k=" << oracle.best.size() << ")\n";
  if (oracle.best_product == greedy_range.product) {
    std::cout << "log2 gap: 0 (exact)\n";
  } else {
    const double gap = std::log2(oracle.best_product.convert_to<double>() /
                                 greedy_range.product.convert_to<double>());
    std::cout << "log2 gap: " << gap << '\n';
  }
  std::cout << "Oracle set:\n";
  print_moduli_block(std::cout, oracle.best.moduli);
  std::cout << "Nodes explored: " << oracle.nodes_explored << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Co-prime moduli set generation and RNS conversion utilities"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "rnsgen 1.0.0");

  int exit_code = 0;

  // generate
  RangeArgs gen_range;
  std::string gen_out;
  std::string gen_format = "text";
  bool gen_quiet = false;
  CLI::App* gen = app.add_subcommand(
      "generate", "Generate the optimal co-prime moduli set for a range");
  gen_range.attach(gen);
  gen->add_option("--out,-o", gen_out,
                  "output file (default: coprimes_result_<X>_<Y>.txt)");
  gen->add_option("--format,-f", gen_format, "output format")
      ->check(CLI::IsMember({"text", "structured"}));
  gen->add_flag("--quiet,-q", gen_quiet, "do not echo the report to stdout");
  gen->callback([&] {
    exit_code = run_generate(gen_range, gen_out, gen_format, gen_quiet);
  });

  // verify
  std::vector<std::string> verify_list;
  std::string verify_file;
  bool verify_quiet = false;
  CLI::App* verify = app.add_subcommand(
      "verify", "Check a moduli list or report file for pairwise co-primality");
  verify->add_option("moduli", verify_list,
                     "moduli given inline, e.g. \"32 31 29\" or 32 31 29");
  verify->add_option("--file", verify_file, "report or moduli file to check");
  verify->add_flag("--quiet,-q", verify_quiet,
                   "no output; the exit code carries the result");
  verify->callback(
      [&] { exit_code = run_verify(verify_list, verify_file, verify_quiet); });

  // convert
  std::vector<std::string> convert_moduli;
  std::string convert_file;
  std::string convert_forward;
  std::vector<std::uint64_t> convert_backward;
  CLI::App* convert = app.add_subcommand(
      "convert", "Forward/backward RNS conversion over a moduli set");
  convert->add_option("--moduli,-m", convert_moduli,
                      "moduli list, e.g. --moduli 2 3 5");
  convert->add_option("--file", convert_file, "report or moduli file");
  CLI::Option* fwd = convert->add_option(
      "--forward", convert_forward, "decimal value to convert to residues");
  CLI::Option* bwd = convert->add_option(
      "--backward", convert_backward, "residues to convert back to a value");
  fwd->excludes(bwd);
  convert->callback([&] {
    exit_code = run_convert(convert_moduli, convert_file, convert_forward,
                            convert_backward);
  });

  // estimate
  RangeArgs est_range;
  bool est_table = false;
  CLI::App* est = app.add_subcommand(
      "estimate", "Operation-count estimate T = Y * (N^2 + k^3) for a range");
  est_range.attach(est);
  est->add_flag("--table", est_table,
                "print the built-in reference table instead");
  est->callback([&] { exit_code = run_estimate(est_range, est_table); });

  // oracle
  RangeArgs oracle_range;
  CLI::App* oracle = app.add_subcommand(
      "oracle",
      "Compare the greedy set against the exhaustive optimum (Y <= 64)");
  oracle_range.attach(oracle);
  oracle->callback([&] { exit_code = run_oracle(oracle_range); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    const int code = app.exit(error);
    return code == 0 ? 0 : kExitUsage;
  } catch (const std::logic_error& error) {
    std::cerr << "error: " << error.what() << '\n';
    return kExitDomain;
  } catch (const std::runtime_error& error) {
    std::cerr << "error: " << error.what() << '\n';
    return kExitIo;
  }
  return exit_code;
}
