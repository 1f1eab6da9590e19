#ifndef BURNSIDE_SCALAR_HPP_
#define BURNSIDE_SCALAR_HPP_

// Exact scalars. Integers and rationals are arbitrary precision; the p-local
// ring Z_(p) (rationals with denominator prime to p) stands in for the
// p-adic integers, since every coefficient that arises is such a rational.

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "burnside/error.hpp"

namespace burnside {

  using Integer  = boost::multiprecision::cpp_int;
  using Rational = boost::multiprecision::cpp_rational;

  inline Integer numerator(Rational const& r) {
    return boost::multiprecision::numerator(r);
  }
  inline Integer denominator(Rational const& r) {
    return boost::multiprecision::denominator(r);
  }
  inline bool is_integer(Rational const& r) {
    return denominator(r) == 1;
  }
  inline bool is_p_integral(Rational const& r, int p) {
    return denominator(r) % p != 0;
  }

  inline std::string to_string(Rational const& r) {
    if (is_integer(r)) {
      return numerator(r).str();
    }
    return numerator(r).str() + "/" + denominator(r).str();
  }

  inline Integer pow_int(Integer base, unsigned exp) {
    Integer out = 1;
    while (exp-- > 0) {
      out *= base;
    }
    return out;
  }

  // The residue of a p-integral rational modulo p^digits, in [0, p^digits).
  inline Integer p_adic_residue(Rational const& r, int p, unsigned digits) {
    if (!is_p_integral(r, p)) {
      throw Error(ErrorKind::p_adic_integrality_violation,
                  to_string(r) + " is not " + std::to_string(p) + "-integral");
    }
    Integer const modulus = pow_int(p, digits);
    Integer       num     = numerator(r) % modulus;
    if (num < 0) {
      num += modulus;
    }
    Integer den = denominator(r) % modulus;
    // inverse of den modulo p^digits by the extended Euclidean algorithm
    Integer a = den, b = modulus, x0 = 1, x1 = 0;
    while (b != 0) {
      Integer q = a / b;
      Integer t = a - q * b;
      a         = b;
      b         = t;
      t         = x0 - q * x1;
      x0        = x1;
      x1        = t;
    }
    Integer inv = x0 % modulus;
    if (inv < 0) {
      inv += modulus;
    }
    return (num * inv) % modulus;
  }

  // Base-p digits of the residue modulo p^digits, most significant first,
  // prefixed with "..." to mark the truncation. Digits above 9 are written
  // in brackets.
  inline std::string p_adic_digits(Rational const& r, int p, unsigned digits) {
    Integer     v = p_adic_residue(r, p, digits);
    std::string out;
    for (unsigned i = 0; i < digits; ++i) {
      int const   d = static_cast<int>(v % p);
      std::string s = d < 10 ? std::string(1, static_cast<char>('0' + d))
                             : "[" + std::to_string(d) + "]";
      out           = s + out;
      v /= p;
    }
    return "..." + out;
  }

  // An element of Z_(p).
  class PLocalScalar {
   public:
    PLocalScalar(Rational value, int prime) : _value(std::move(value)), _prime(prime) {
      if (!is_p_integral(_value, _prime)) {
        throw Error(ErrorKind::p_adic_integrality_violation,
                    to_string(_value) + " is not " + std::to_string(_prime) + "-integral");
      }
    }

    Rational const& value() const noexcept {
      return _value;
    }
    int prime() const noexcept {
      return _prime;
    }

    friend bool operator==(PLocalScalar const& a, PLocalScalar const& b) {
      return a._prime == b._prime && a._value == b._value;
    }

   private:
    Rational _value;
    int      _prime;
  };

}  // namespace burnside

#endif  // BURNSIDE_SCALAR_HPP_
