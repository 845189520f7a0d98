#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "weylinv/linalg.hpp"
#include "weylinv/monomial.hpp"
#include "weylinv/permutation.hpp"

namespace weylinv::polyring {

using exactla::Rational;

// Sparse multivariate polynomial over the rationals with a fixed variable
// count.  Terms are stored in descending grevlex order (leading term
// first); no zero coefficients are kept.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GrevlexDescending>;

  explicit Polynomial(int vars) : vars_(vars) {}

  static Polynomial zero(int vars) { return Polynomial(vars); }
  static Polynomial constant(int vars, Rational c) {
    Polynomial p(vars);
    p.add_term(Monomial::unit(vars), std::move(c));
    return p;
  }
  // t_i, 1-based, raised to the given power.
  static Polynomial variable_power(int vars, int i, int power) {
    if (i < 1 || i > vars) throw std::out_of_range("variable_power: index out of range");
    Monomial m = Monomial::unit(vars);
    m.exponents[static_cast<std::size_t>(i - 1)] = static_cast<std::uint32_t>(power);
    Polynomial p(vars);
    p.add_term(std::move(m), 1);
    return p;
  }

  int vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(Monomial m, Rational c) {
    if (m.vars() != vars_) throw std::invalid_argument("add_term: variable count mismatch");
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(std::move(m), std::move(c));
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const Monomial& leading_monomial() const {
    if (terms_.empty()) throw std::logic_error("leading_monomial of zero polynomial");
    return terms_.begin()->first;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
      if (m.degree() != d) return false;
    return true;
  }

  // Total degree of a homogeneous polynomial (-1 for zero).
  int degree() const {
    if (terms_.empty()) return -1;
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_vars(o);
    for (const auto& [m, c] : o.terms_) {
      auto [it, inserted] = terms_.emplace(m, c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
      }
    }
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_vars(o);
    for (const auto& [m, c] : o.terms_) {
      auto [it, inserted] = terms_.emplace(m, -c);
      if (!inserted) {
        it->second -= c;
        if (it->second == 0) terms_.erase(it);
      }
    }
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Rational& c, const Polynomial& p) {
    Polynomial r(p.vars_);
    if (c == 0) return r;
    for (const auto& [m, v] : p.terms_) r.terms_.emplace(m, c * v);
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_vars(b);
    Polynomial r(a.vars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  // Coordinates of a homogeneous polynomial in the degree-d monomial table.
  exactla::SparseVector to_sparse(const MonomialTable& table) const {
    std::vector<std::pair<exactla::ColIndex, Rational>> entries;
    entries.reserve(terms_.size());
    for (const auto& [m, c] : terms_) entries.emplace_back(table.index_of(m), c);
    return exactla::make_sparse(std::move(entries));
  }

  static Polynomial from_sparse(const exactla::SparseVector& v, const MonomialTable& table, int vars) {
    Polynomial p(vars);
    for (const auto& [idx, c] : v.entries) p.add_term(table.at(idx), c);
    return p;
  }

 private:
  void check_vars(const Polynomial& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("polynomial arithmetic: variable count mismatch");
  }

  int vars_;
  TermMap terms_;
};

// Right action of S_k permuting the variables: the exponent of t_i in the
// result is the exponent of t_{s(i)} in f.  Satisfies
// act(act(f,s),u) == act(f, compose(s,u)).
inline Polynomial act(const Polynomial& f, const combinat::Permutation& s) {
  if (s.degree() != f.vars()) throw std::invalid_argument("act: permutation degree mismatch");
  Polynomial r(f.vars());
  for (const auto& [m, c] : f.terms()) {
    Monomial pm = Monomial::unit(f.vars());
    for (int i = 0; i < f.vars(); ++i)
      pm.exponents[static_cast<std::size_t>(i)] = m.exponents[static_cast<std::size_t>(s(i))];
    r.add_term(std::move(pm), c);
  }
  return r;
}

// Elementary symmetric polynomial e_j in k variables.
inline Polynomial elementary_symmetric(int j, int k) {
  if (j < 1 || j > k) throw std::out_of_range("elementary_symmetric: j out of range");
  Polynomial p(k);
  std::vector<int> subset;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(subset.size()) == j) {
      Monomial m = Monomial::unit(k);
      for (int v : subset) m.exponents[static_cast<std::size_t>(v)] = 1;
      p.add_term(std::move(m), 1);
      return;
    }
    for (int v = next; v < k; ++v) {
      subset.push_back(v);
      self(self, v + 1);
      subset.pop_back();
    }
  };
  rec(rec, 0);
  return p;
}

// Complete homogeneous polynomial of degree d in the variables
// t_first..t_k (1-based, inclusive).
inline Polynomial complete_homogeneous(int d, int first, int k) {
  Polynomial p(k);
  Monomial m = Monomial::unit(k);
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == k) {
      m.exponents[static_cast<std::size_t>(var - 1)] = static_cast<std::uint32_t>(remaining);
      p.add_term(m, 1);
      m.exponents[static_cast<std::size_t>(var - 1)] = 0;
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      m.exponents[static_cast<std::size_t>(var - 1)] = static_cast<std::uint32_t>(e);
      self(self, var + 1, remaining - e);
    }
    m.exponents[static_cast<std::size_t>(var - 1)] = 0;
  };
  if (first > k) {
    if (d == 0) p.add_term(Monomial::unit(k), 1);
    return p;
  }
  rec(rec, first, d);
  return p;
}

// Embed a polynomial on `inner` variables into `outer` variables, shifting
// every variable index up by `offset`.
inline Polynomial embed(const Polynomial& f, int outer, int offset) {
  if (offset + f.vars() > outer) throw std::invalid_argument("embed: block does not fit");
  Polynomial r(outer);
  for (const auto& [m, c] : f.terms()) {
    Monomial em = Monomial::unit(outer);
    for (int i = 0; i < f.vars(); ++i)
      em.exponents[static_cast<std::size_t>(offset + i)] = m.exponents[static_cast<std::size_t>(i)];
    r.add_term(std::move(em), c);
  }
  return r;
}

// --- canonical text form -------------------------------------------------
//
// Terms in descending grevlex order; each term is the coefficient in
// "num" or "num/den" form followed by the variables with positive
// exponent, e.g. "1 t1^2 t3 - 2/3 t2".  Round-trips bit-exactly.

inline std::string to_text(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    if (first) {
      if (negative) os << "-";
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    os << exactla::rational_to_string(negative ? Rational(-c) : c);
    for (int i = 0; i < m.vars(); ++i) {
      const auto e = m.exponents[static_cast<std::size_t>(i)];
      if (e == 0) continue;
      os << " t" << (i + 1);
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

inline Polynomial parse_polynomial(std::string_view text, int vars) {
  Polynomial p(vars);
  std::size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && text[i] == ' ') ++i; };
  skip_ws();
  if (text.substr(i) == "0") return p;
  bool first = true;
  while (i < text.size()) {
    int sign = 1;
    skip_ws();
    if (!first || (i < text.size() && (text[i] == '+' || text[i] == '-'))) {
      if (i >= text.size()) break;
      if (text[i] == '-') sign = -1;
      else if (text[i] != '+') throw std::invalid_argument("parse_polynomial: expected sign");
      ++i;
      skip_ws();
    }
    first = false;
    std::size_t start = i;
    while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) ++i;
    if (start == i) throw std::invalid_argument("parse_polynomial: expected coefficient");
    Rational c = exactla::parse_rational(text.substr(start, i - start));
    if (sign < 0) c = -c;
    Monomial m = Monomial::unit(vars);
    while (true) {
      skip_ws();
      if (i >= text.size() || text[i] != 't') break;
      ++i;
      start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      const int var = std::stoi(std::string(text.substr(start, i - start)));
      if (var < 1 || var > vars) throw std::invalid_argument("parse_polynomial: variable out of range");
      int e = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        e = std::stoi(std::string(text.substr(start, i - start)));
      }
      m.exponents[static_cast<std::size_t>(var - 1)] += static_cast<std::uint32_t>(e);
    }
    p.add_term(std::move(m), std::move(c));
    skip_ws();
  }
  return p;
}

}  // namespace weylinv::polyring
