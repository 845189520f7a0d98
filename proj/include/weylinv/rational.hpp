#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

namespace weylinv::exactla {

// Exact arbitrary-precision arithmetic.  Every computation in this library
// is exact; there is no floating point anywhere.  Rationals are kept in
// lowest terms with positive denominator (zero is 0/1) by the backend.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

// Canonical text form: "num" when the denominator is one, else "num/den".
inline std::string rational_to_string(const Rational& r) {
  if (denominator_of(r) == 1) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

inline Rational parse_rational(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
  const auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(Integer(std::string(s)));
    Integer num(std::string(s.substr(0, slash)));
    Integer den(std::string(s.substr(slash + 1)));
    if (den == 0) throw std::invalid_argument("parse_rational: zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument(std::string("parse_rational: ") + e.what());
  }
}

inline Integer factorial(unsigned n) {
  Integer f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

inline Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Integer b = 1;
  for (unsigned i = 1; i <= k; ++i) {
    b *= n - k + i;
    b /= i;
  }
  return b;
}

}  // namespace weylinv::exactla
