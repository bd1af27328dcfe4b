#pragma once

// Exact integers for reduction-sized values and the base-D positional form
// x0 + x2*D^2 + ... + x8*D^8 used to audit start times.

#include <array>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace gadgetforge {

/// Arbitrary-precision signed integer. Nonnegativity of processing times and
/// start times is enforced by the operations that produce them.
using BigInt = boost::multiprecision::cpp_int;

BigInt pow(const BigInt& base, unsigned exponent);

/// Upper bound on every positional digit: 4z(7z+1).
std::int64_t digit_bound(std::int64_t z);

std::string to_decimal(const BigInt& v);
/// Parses a base-10 string (optional leading '-'); throws Error(kInvalidInput).
BigInt parse_decimal(const std::string& s);

/// Signed low part plus the digits of D^2..D^8. There is no D^1 digit: the
/// low part absorbs it and stays within [-zD, zD].
struct CoeffVector {
  static constexpr int kLowestPower = 2;
  static constexpr int kHighestPower = 8;

  BigInt x0 = 0;
  std::array<std::int64_t, 7> digits{};  // digits[k] multiplies D^(k+2)

  std::int64_t& at(int power) { return digits.at(static_cast<std::size_t>(power - kLowestPower)); }
  std::int64_t at(int power) const { return digits.at(static_cast<std::size_t>(power - kLowestPower)); }

  CoeffVector& operator+=(const CoeffVector& other);
  friend bool operator==(const CoeffVector&, const CoeffVector&) = default;
};

std::string to_string(const CoeffVector& c);

/// Unique decomposition of v with |x0| <= zD and digits <= 4z(7z+1).
/// Requires D > 4z(7z+1) (kParamViolation otherwise). Throws
/// kResidueOutOfRange when v mod D^2 falls in (zD, D^2 - zD) and
/// kDigitOverflow when a digit exceeds the bound or v needs a D^9 term.
CoeffVector decompose(const BigInt& v, std::int64_t z, const BigInt& D);

/// x0 + sum x_j D^j; throws kNegativeResult if the sum is negative.
BigInt compose(const CoeffVector& c, const BigInt& D);

}  // namespace gadgetforge
