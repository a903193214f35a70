// Exact rational scalars backed by GMP.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hodge {

using Integer = mpz_class;

/// Reduced fraction with positive denominator; 0 is 0/1.
/// Every arithmetic result of mpq_class is canonical, so only values built
/// from a raw numerator/denominator pair need to go through make_rational().
using Rational = mpq_class;

/// Thrown for inputs outside the domain of an integral or a formula:
/// unstable (g,n), negative genus, malformed exponent lists.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown when a recursive solver cannot isolate the requested value.
class Underdetermined : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Rational make_rational(const Integer& num, const Integer& den = 1) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(long num, long den) {
  return make_rational(Integer(num), Integer(den));
}

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// "p/q", with "/q" omitted when q = 1.
inline std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(Integer(std::string(text)));
    return make_rational(Integer(std::string(text.substr(0, slash))),
                         Integer(std::string(text.substr(slash + 1))));
  } catch (const std::invalid_argument&) {
    throw DomainError("not a rational: " + std::string(text));
  }
}

}  // namespace hodge
