#include "rnsgen/oracle.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "rnsgen/number_theory.hpp"

namespace rnsgen {

namespace {

// The 18 primes up to 64; each candidate value's factor set becomes a bitmask
// over this list, making compatibility a single AND.
constexpr std::uint64_t kSmallPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23,
                                          29, 31, 37, 41, 43, 47, 53, 59, 61};

struct Item {
  std::uint64_t value;
  std::uint32_t prime_mask;
};

struct Search {
  std::vector<Item> items;  // descending by value
  BigInt best_product = 0;
  std::vector<std::uint64_t> best;
  std::vector<std::uint64_t> current;
  BigInt current_product = 1;
  std::uint64_t nodes = 0;

  void run(std::size_t index, std::uint32_t used_mask) {
    ++nodes;
    if (index == items.size()) {
      // Strict improvement only: with include-before-exclude branching the
      // first maximum found is the lexicographically largest descending set.
      if (current_product > best_product) {
        best_product = current_product;
        best = current;
      }
      return;
    }
    // Optimistic bound: everything still compatible gets multiplied in.
    BigInt bound = current_product;
    for (std::size_t i = index; i < items.size(); ++i) {
      if ((items[i].prime_mask & used_mask) == 0) {
        bound *= items[i].value;
        if (bound > best_product) {
          break;  // bound already clears the incumbent
        }
      }
    }
    if (bound <= best_product) {
      return;
    }
    const Item& item = items[index];
    if ((item.prime_mask & used_mask) == 0) {
      current.push_back(item.value);
      current_product *= item.value;
      run(index + 1, used_mask | item.prime_mask);
      current_product /= item.value;
      current.pop_back();
    }
    run(index + 1, used_mask);
  }
};

std::uint32_t mask_of(std::uint64_t value) {
  std::uint32_t mask = 0;
  for (std::uint64_t p : factorize(value).primes) {
    std::uint32_t bit = 0;
    for (std::uint64_t q : kSmallPrimes) {
      if (q == p) {
        break;
      }
      ++bit;
    }
    mask |= 1u << bit;
  }
  return mask;
}

}  // namespace

OracleResult optimal_set(std::uint64_t range_lo, std::uint64_t range_hi) {
  if (range_lo < 2 || range_lo >= range_hi) {
    throw std::invalid_argument("invalid range [" + std::to_string(range_lo) +
                                ", " + std::to_string(range_hi) +
                                "]: need 2 <= lo < hi");
  }
  if (range_hi > kOracleRangeLimit) {
    throw std::invalid_argument(
        "oracle guard: upper bound " + std::to_string(range_hi) +
        " exceeds the exhaustive-search limit of " +
        std::to_string(kOracleRangeLimit));
  }

  Search search;
  search.items.reserve(range_hi - range_lo + 1);
  for (std::uint64_t v = range_hi; v >= range_lo; --v) {
    search.items.push_back(Item{v, mask_of(v)});
  }
  search.run(0, 0);

  OracleResult result;
  result.best_product = search.best_product;
  result.nodes_explored = search.nodes;
  result.best.moduli = search.best;  // built descending
  result.best.range_lo = range_lo;
  result.best.range_hi = range_hi;
  for (std::uint64_t m : search.best) {
    if ((m & (m - 1)) == 0) {
      result.best.power_of_two = m;
      break;
    }
  }
  return result;
}

}  // namespace rnsgen
