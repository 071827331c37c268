#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace rnsgen {

using BigInt = boost::multiprecision::cpp_int;

/// Number of bits in the binary representation of `value`; 0 for value == 0.
inline std::uint64_t bit_length(const BigInt& value) {
  if (value == 0) {
    return 0;
  }
  return static_cast<std::uint64_t>(boost::multiprecision::msb(value)) + 1;
}

}  // namespace rnsgen
