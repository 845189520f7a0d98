#pragma once

#include <string>
#include <vector>

#include "weylinv/rational.hpp"

namespace weylinv::combinat {

// Polynomial in one variable q with integer coefficients, dense storage,
// no trailing zeros.  Used for Kostka polynomials, graded ranks and
// Hilbert-series coefficients.
struct QPolynomial {
  std::vector<long long> coeffs;

  QPolynomial() = default;
  explicit QPolynomial(std::vector<long long> c) : coeffs(std::move(c)) { trim(); }

  static QPolynomial one() { return QPolynomial({1}); }
  static QPolynomial monomial(int power, long long c = 1) {
    std::vector<long long> v(static_cast<std::size_t>(power) + 1, 0);
    v.back() = c;
    return QPolynomial(std::move(v));
  }

  void trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  }

  long long coeff(int power) const {
    return (power >= 0 && power < static_cast<int>(coeffs.size()))
               ? coeffs[static_cast<std::size_t>(power)]
               : 0;
  }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  long long eval_at_one() const {
    long long s = 0;
    for (long long c : coeffs) s += c;
    return s;
  }

  QPolynomial& operator+=(const QPolynomial& o) {
    if (o.coeffs.size() > coeffs.size()) coeffs.resize(o.coeffs.size(), 0);
    for (std::size_t i = 0; i < o.coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
    trim();
    return *this;
  }

  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    if (a.coeffs.empty() || b.coeffs.empty()) return QPolynomial();
    std::vector<long long> c(a.coeffs.size() + b.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
    return QPolynomial(std::move(c));
  }

  friend QPolynomial operator*(long long c, const QPolynomial& p) {
    std::vector<long long> v = p.coeffs;
    for (auto& x : v) x *= c;
    return QPolynomial(std::move(v));
  }

  friend bool operator==(const QPolynomial& a, const QPolynomial& b) { return a.coeffs == b.coeffs; }

  std::string to_string() const {
    if (coeffs.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i] == 0) continue;
      if (!s.empty()) s += " + ";
      if (i == 0) {
        s += std::to_string(coeffs[i]);
      } else {
        if (coeffs[i] != 1) s += std::to_string(coeffs[i]) + " ";
        s += (i == 1) ? "q" : "q^" + std::to_string(i);
      }
    }
    return s.empty() ? "0" : s;
  }
};

// [k]_q! = prod_{i=1..k} (1 + q + ... + q^{i-1}).
inline QPolynomial q_factorial(int k) {
  QPolynomial f = QPolynomial::one();
  for (int i = 1; i <= k; ++i) {
    std::vector<long long> ones(static_cast<std::size_t>(i), 1);
    f = f * QPolynomial(std::move(ones));
  }
  return f;
}

// Coefficients 0..max_degree of numerator * prod_{i=1..k} (1 - q^i)^{-1}.
inline std::vector<long long> free_module_series(const QPolynomial& numerator, int k,
                                                 int max_degree) {
  std::vector<long long> c(static_cast<std::size_t>(max_degree) + 1, 0);
  for (int s = 0; s <= max_degree; ++s) c[static_cast<std::size_t>(s)] = numerator.coeff(s);
  for (int i = 1; i <= k; ++i)
    for (int s = i; s <= max_degree; ++s)
      c[static_cast<std::size_t>(s)] += c[static_cast<std::size_t>(s - i)];
  return c;
}

}  // namespace weylinv::combinat
