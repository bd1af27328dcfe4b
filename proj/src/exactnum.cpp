#include "gadgetforge/exactnum.hpp"

#include <sstream>

#include "gadgetforge/error.hpp"

namespace gadgetforge {

BigInt pow(const BigInt& base, unsigned exponent) {
  BigInt result = 1;
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

std::int64_t digit_bound(std::int64_t z) { return 4 * z * (7 * z + 1); }

std::string to_decimal(const BigInt& v) { return v.str(); }

BigInt parse_decimal(const std::string& s) {
  std::size_t i = 0;
  if (!s.empty() && s[0] == '-') i = 1;
  if (i == s.size()) throw Error(Errc::kInvalidInput, "empty decimal string");
  for (std::size_t k = i; k < s.size(); ++k) {
    if (s[k] < '0' || s[k] > '9') throw Error(Errc::kInvalidInput, "not a decimal integer: '" + s + "'");
  }
  return BigInt(s);
}

CoeffVector& CoeffVector::operator+=(const CoeffVector& other) {
  x0 += other.x0;
  for (std::size_t k = 0; k < digits.size(); ++k) digits[k] += other.digits[k];
  return *this;
}

std::string to_string(const CoeffVector& c) {
  std::ostringstream os;
  os << "{x0:" << c.x0;
  for (int power = CoeffVector::kLowestPower; power <= CoeffVector::kHighestPower; ++power) {
    os << ",x" << power << ":" << c.at(power);
  }
  os << "}";
  return os.str();
}

CoeffVector decompose(const BigInt& v, std::int64_t z, const BigInt& D) {
  const std::int64_t bound = digit_bound(z);
  if (z < 1 || D <= bound) {
    throw Error(Errc::kParamViolation, "decompose needs D > 4z(7z+1) = " + std::to_string(bound));
  }
  if (v < 0) throw Error(Errc::kNegativeResult, "cannot decompose a negative value");

  const BigInt square = D * D;
  const BigInt low_limit = D * z;
  const BigInt residue = v % square;

  CoeffVector c;
  if (residue <= low_limit) {
    c.x0 = residue;
  } else if (residue >= square - low_limit) {
    c.x0 = residue - square;  // borrow one unit of D^2
  } else {
    throw Error(Errc::kResidueOutOfRange, "v mod D^2 = " + residue.str() + " outside [-zD, zD]");
  }

  BigInt quotient = (v - c.x0) / square;
  for (int power = CoeffVector::kLowestPower; power <= CoeffVector::kHighestPower; ++power) {
    const BigInt digit = quotient % D;
    quotient /= D;
    if (digit > bound) {
      throw Error(Errc::kDigitOverflow,
                  "digit of D^" + std::to_string(power) + " is " + digit.str() + " > " + std::to_string(bound));
    }
    c.at(power) = digit.convert_to<std::int64_t>();
  }
  if (quotient != 0) throw Error(Errc::kDigitOverflow, "value needs a digit above D^8");
  return c;
}

BigInt compose(const CoeffVector& c, const BigInt& D) {
  BigInt sum = c.x0;
  BigInt scale = D * D;
  for (int power = CoeffVector::kLowestPower; power <= CoeffVector::kHighestPower; ++power) {
    sum += scale * c.at(power);
    scale *= D;
  }
  if (sum < 0) throw Error(Errc::kNegativeResult, "composed value " + sum.str() + " is negative");
  return sum;
}

}  // namespace gadgetforge
