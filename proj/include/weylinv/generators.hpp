#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "weylinv/partition.hpp"
#include "weylinv/permutation.hpp"
#include "weylinv/polynomial.hpp"

namespace weylinv::generators {

using combinat::Partition;
using polyring::Polynomial;

// A partition xi_1 >= ... >= xi_{n+1} > 0 of k together with the block
// data k_i = xi_i - xi_{i+1}: the ring splits as
// A_1^{k_1} (x) A_2^{k_2} (x) ... (x) A_{n+1}^{k_{n+1}}.
struct Shape {
  Partition xi;

  Shape() = default;
  explicit Shape(Partition p) : xi(std::move(p)) {
    if (xi.num_parts() == 0) throw std::invalid_argument("Shape: empty partition");
  }

  int k() const { return xi.size(); }
  int rows() const { return xi.num_parts(); }       // n + 1
  int n() const { return xi.num_parts() - 1; }
  int diff(int i) const { return xi.part(i) - xi.part(i + 1); }  // k_i, 1-based

  std::string to_string() const { return xi.to_string(); }
};

// Generator index: for each row l in 2..n+1, a list of xi_l non-negative
// integers.  rows[l-2] holds row l.
struct IndexTuple {
  std::vector<std::vector<int>> rows;

  int degree() const {
    int d = 0;
    for (const auto& r : rows) d = std::accumulate(r.begin(), r.end(), d);
    return d;
  }

  bool conforms(const Shape& shape) const {
    if (static_cast<int>(rows.size()) != std::max(shape.rows() - 1, 0)) return false;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (static_cast<int>(rows[i].size()) != shape.xi.part(static_cast<int>(i) + 2)) return false;
    for (const auto& r : rows)
      for (int v : r)
        if (v < 0) return false;
    return true;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i) s += ",";
      s += "[";
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        if (j) s += ",";
        s += std::to_string(rows[i][j]);
      }
      s += "]";
    }
    return s + "]";
  }

  friend bool operator==(const IndexTuple& a, const IndexTuple& b) { return a.rows == b.rows; }
  friend bool operator<(const IndexTuple& a, const IndexTuple& b) { return a.rows < b.rows; }
};

// Index entries regrouped by column: groups[l-2] is the list of k_l
// tuples of length l-1 that feed the size-l tensor blocks.
struct ColumnGrouping {
  std::vector<std::vector<std::vector<int>>> groups;
};

// The column regrouping: row l occupies the right-aligned columns
// xi_2 - xi_l + 1 .. xi_2 of a grid, and column j collects the entries of
// the rows covering it, top to bottom.  Columns covered by rows 2..m
// contribute (m-1)-tuples; scanning columns left to right groups them by
// increasing block size.
inline ColumnGrouping phi(const Shape& shape, const IndexTuple& r) {
  if (!r.conforms(shape)) throw std::invalid_argument("phi: index does not conform to shape");
  ColumnGrouping out;
  out.groups.assign(static_cast<std::size_t>(std::max(shape.rows() - 1, 0)), {});
  const int xi2 = shape.xi.part(2);
  for (int j = 1; j <= xi2; ++j) {
    std::vector<int> tuple;
    int m = 1;
    for (int l = 2; l <= shape.rows(); ++l) {
      const int start = xi2 - shape.xi.part(l) + 1;
      if (j < start) break;
      tuple.push_back(r.rows[static_cast<std::size_t>(l - 2)][static_cast<std::size_t>(j - start)]);
      m = l;
    }
    out.groups[static_cast<std::size_t>(m - 2)].push_back(std::move(tuple));
  }
  for (int l = 2; l <= shape.rows(); ++l)
    if (static_cast<int>(out.groups[static_cast<std::size_t>(l - 2)].size()) != shape.diff(l))
      throw std::logic_error("phi: block count mismatch");
  return out;
}

// Alternating sum over S_{l+1} with l exponents on l+1 variables:
// a(r_1..r_l) = sum_tau sgn(tau) t_{tau(1)}^{r_1} ... t_{tau(l)}^{r_l}.
// Vanishes when two exponents coincide or any exponent is zero.
inline Polynomial alt_poly(const std::vector<int>& exponents) {
  const int l = static_cast<int>(exponents.size());
  Polynomial p(l + 1);
  for (const auto& tau : combinat::all_permutations(l + 1)) {
    polyring::Monomial m = polyring::Monomial::unit(l + 1);
    for (int i = 0; i < l; ++i)
      m.exponents[static_cast<std::size_t>(tau(i))] = static_cast<std::uint32_t>(exponents[static_cast<std::size_t>(i)]);
    p.add_term(std::move(m), combinat::sign(tau));
  }
  return p;
}

// Tensor assembly: the first k_1 variables carry the constant factor, then
// each column group of size l-1 lands on a fresh block of l variables as
// an alt_poly factor.
inline Polynomial b_poly(const Shape& shape, const IndexTuple& r) {
  const ColumnGrouping grouping = phi(shape, r);
  const int k = shape.k();
  Polynomial result = Polynomial::constant(k, 1);
  int offset = shape.diff(1);
  for (int l = 2; l <= shape.rows(); ++l) {
    for (const auto& tuple : grouping.groups[static_cast<std::size_t>(l - 2)]) {
      result = result * polyring::embed(alt_poly(tuple), k, offset);
      offset += l;
      if (result.is_zero()) return result;
    }
  }
  return result;
}

namespace detail {

// Apply sigma = (sigma_2, ..., sigma_{n+1}) in S_xi, permuting the entries
// within each row.
inline IndexTuple permute_rows(const IndexTuple& r, const std::vector<combinat::Permutation>& sigma) {
  IndexTuple out = r;
  for (std::size_t row = 0; row < out.rows.size(); ++row) {
    const auto& s = sigma[row];
    for (std::size_t j = 0; j < out.rows[row].size(); ++j)
      out.rows[row][j] = r.rows[row][static_cast<std::size_t>(s(static_cast<int>(j)))];
  }
  return out;
}

template <typename F>
inline void for_each_in_product(const std::vector<std::vector<combinat::Permutation>>& factors,
                                std::vector<combinat::Permutation>& current, std::size_t at, F&& f) {
  if (at == factors.size()) {
    f(current);
    return;
  }
  for (const auto& s : factors[at]) {
    current.push_back(s);
    for_each_in_product(factors, current, at + 1, f);
    current.pop_back();
  }
}

}  // namespace detail

// The symmetrized generator p(r) = sum over S_xi = S_{xi_2} x ... x
// S_{xi_{n+1}} of b(sigma(r)); invariant under permuting entries within
// each row of r.
inline Polynomial p_poly(const Shape& shape, const IndexTuple& r) {
  if (!r.conforms(shape)) throw std::invalid_argument("p_poly: index does not conform to shape");
  std::vector<std::vector<combinat::Permutation>> factors;
  for (int l = 2; l <= shape.rows(); ++l)
    factors.push_back(combinat::all_permutations(shape.xi.part(l)));
  Polynomial sum(shape.k());
  std::vector<combinat::Permutation> current;
  detail::for_each_in_product(factors, current, 0, [&](const std::vector<combinat::Permutation>& sigma) {
    sum += b_poly(shape, detail::permute_rows(r, sigma));
  });
  return sum;
}

// All S_xi-orbit representatives (rows weakly increasing) of the given
// total degree, duplicate-free, in lexicographic order of the row data.
inline std::vector<IndexTuple> enumerate_indices(const Shape& shape, int degree) {
  std::vector<IndexTuple> out;
  IndexTuple cur;
  cur.rows.assign(static_cast<std::size_t>(std::max(shape.rows() - 1, 0)), {});
  auto fill_row = [&](auto&& self, std::size_t row, int remaining) -> void {
    if (row == cur.rows.size()) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    const int len = shape.xi.part(static_cast<int>(row) + 2);
    auto entries = [&](auto&& rec, int pos, int min_value, int left) -> void {
      if (pos == len) {
        self(self, row + 1, left);
        return;
      }
      // remaining entries must each be at least min_value
      for (int v = min_value; v * (len - pos) <= left; ++v) {
        cur.rows[row].push_back(v);
        rec(rec, pos + 1, v, left - v);
        cur.rows[row].pop_back();
      }
    };
    entries(entries, 0, 0, remaining);
  };
  if (cur.rows.empty()) {
    if (degree == 0) out.push_back(cur);
    return out;
  }
  fill_row(fill_row, 0, degree);
  return out;
}

}  // namespace weylinv::generators
