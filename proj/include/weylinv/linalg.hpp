#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "weylinv/rational.hpp"

namespace weylinv::exactla {

// Sparse exact linear algebra over the rationals.  Row reduction is fully
// deterministic: callers fix the column order (for us, the global monomial
// order) and the pivot of a row is always its first nonzero column.  The
// reduced row-echelon basis of a span is unique, so any two ways of feeding
// the same span produce identical objects.

using ColIndex = std::uint32_t;

struct SparseVector {
  // Entries sorted by strictly increasing column index, no zero values.
  std::vector<std::pair<ColIndex, Rational>> entries;

  bool is_zero() const { return entries.empty(); }
  ColIndex leading_index() const { return entries.front().first; }
  const Rational& leading_value() const { return entries.front().second; }

  void scale(const Rational& c) {
    if (c == 0) {
      entries.clear();
      return;
    }
    for (auto& [idx, v] : entries) v *= c;
  }

  friend bool operator==(const SparseVector& a, const SparseVector& b) { return a.entries == b.entries; }
};

inline SparseVector make_sparse(std::vector<std::pair<ColIndex, Rational>> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVector v;
  for (auto& [idx, val] : entries) {
    if (val == 0) continue;
    if (!v.entries.empty() && v.entries.back().first == idx)
      throw std::invalid_argument("make_sparse: duplicate column index");
    v.entries.emplace_back(idx, std::move(val));
  }
  return v;
}

// a + c*b, merged in one pass.
inline SparseVector add_scaled(const SparseVector& a, const Rational& c, const SparseVector& b) {
  SparseVector r;
  r.entries.reserve(a.entries.size() + b.entries.size());
  auto ia = a.entries.begin(), ib = b.entries.begin();
  while (ia != a.entries.end() && ib != b.entries.end()) {
    if (ia->first < ib->first) {
      r.entries.push_back(*ia++);
    } else if (ib->first < ia->first) {
      Rational v = c * ib->second;
      if (v != 0) r.entries.emplace_back(ib->first, std::move(v));
      ++ib;
    } else {
      Rational v = ia->second + c * ib->second;
      if (v != 0) r.entries.emplace_back(ia->first, std::move(v));
      ++ia, ++ib;
    }
  }
  for (; ia != a.entries.end(); ++ia) r.entries.push_back(*ia);
  for (; ib != b.entries.end(); ++ib) {
    Rational v = c * ib->second;
    if (v != 0) r.entries.emplace_back(ib->first, std::move(v));
  }
  return r;
}

class ReducedBasis {
 public:
  ReducedBasis() = default;

  std::size_t rank() const { return rows_.size(); }
  const std::vector<SparseVector>& rows() const { return rows_; }
  const std::vector<ColIndex>& pivots() const { return pivots_; }

  // Eliminates every pivot column from v; the residual has no support on
  // pivot columns of this basis.
  SparseVector reduce_vector(SparseVector v) const {
    SparseVector out;
    std::size_t i = 0;
    while (i < v.entries.size()) {
      const ColIndex col = v.entries[i].first;
      const auto row = row_with_pivot(col);
      if (row == nullptr) {
        ++i;
        continue;
      }
      Rational c = -v.entries[i].second;
      v = add_scaled(v, c, *row);
      // entries before position i are untouched (their columns precede col)
    }
    return v;
  }

  bool contains(const SparseVector& v) const { return reduce_vector(v).is_zero(); }

  // Inserts a vector into the basis, restoring reduced row-echelon form.
  // Returns true when the rank grew.
  bool insert(SparseVector v) {
    v = reduce_vector(std::move(v));
    if (v.is_zero()) return false;
    Rational inv_lead = Rational(1) / v.leading_value();
    v.scale(inv_lead);
    const ColIndex pivot = v.leading_index();
    // Clear the new pivot column from the existing rows.
    for (auto& row : rows_) {
      auto it = std::lower_bound(
          row.entries.begin(), row.entries.end(), pivot,
          [](const auto& e, ColIndex c) { return e.first < c; });
      if (it != row.entries.end() && it->first == pivot) {
        Rational c = -it->second;
        row = add_scaled(row, c, v);
      }
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
    const std::size_t at = static_cast<std::size_t>(pos - pivots_.begin());
    pivots_.insert(pos, pivot);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(at), std::move(v));
    return true;
  }

  static ReducedBasis reduce(const std::vector<SparseVector>& vectors) {
    ReducedBasis b;
    for (const auto& v : vectors) b.insert(v);
    return b;
  }

  // Adopts rows that are already in reduced row-echelon form (distinct
  // pivots with unit coefficient, pivot columns absent from other rows).
  // Structure is validated; spans built this way skip the O(n^2) insert path.
  static ReducedBasis adopt_echelon(std::vector<SparseVector> rows) {
    std::sort(rows.begin(), rows.end(), [](const SparseVector& a, const SparseVector& b) {
      return a.leading_index() < b.leading_index();
    });
    ReducedBasis b;
    b.pivots_.reserve(rows.size());
    for (const auto& r : rows) {
      if (r.is_zero() || r.leading_value() != 1)
        throw std::invalid_argument("adopt_echelon: row is not pivot-normalized");
      if (!b.pivots_.empty() && b.pivots_.back() >= r.leading_index())
        throw std::invalid_argument("adopt_echelon: duplicate pivot column");
      b.pivots_.push_back(r.leading_index());
    }
    for (const auto& r : rows)
      for (std::size_t j = 1; j < r.entries.size(); ++j)
        if (std::binary_search(b.pivots_.begin(), b.pivots_.end(), r.entries[j].first))
          throw std::invalid_argument("adopt_echelon: pivot column appears in a tail");
    b.rows_ = std::move(rows);
    return b;
  }

  friend bool operator==(const ReducedBasis& a, const ReducedBasis& b) {
    return a.pivots_ == b.pivots_ && a.rows_ == b.rows_;
  }

 private:
  const SparseVector* row_with_pivot(ColIndex col) const {
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), col);
    if (it == pivots_.end() || *it != col) return nullptr;
    return &rows_[static_cast<std::size_t>(it - pivots_.begin())];
  }

  std::vector<SparseVector> rows_;   // sorted by pivot column
  std::vector<ColIndex> pivots_;     // strictly increasing
};

inline std::size_t rank_of_union(const ReducedBasis& a, const ReducedBasis& b) {
  ReducedBasis u = a;
  for (const auto& row : b.rows()) u.insert(row);
  return u.rank();
}

inline bool same_span(const ReducedBasis& a, const ReducedBasis& b) {
  // Reduced bases are canonical, so equal span means equal object.
  return a == b;
}

// Left nullspace: all coefficient vectors c with sum_i c_i * rows[i] = 0.
// Returned as a canonical reduced basis over the coefficient coordinates.
inline std::vector<SparseVector> kernel_of_rows(const std::vector<SparseVector>& rows,
                                                ColIndex ambient) {
  ReducedBasis work;   // echelon over the first `ambient` columns, tails track coefficients
  ReducedBasis kernel; // canonicalizes the relations found
  for (std::size_t i = 0; i < rows.size(); ++i) {
    SparseVector aug = rows[i];
    aug.entries.emplace_back(ambient + static_cast<ColIndex>(i), Rational(1));
    aug = work.reduce_vector(std::move(aug));
    if (aug.is_zero() || aug.leading_index() >= ambient) {
      // No support left on the ambient columns: a relation among the rows.
      for (auto& [idx, v] : aug.entries) idx -= ambient;
      kernel.insert(std::move(aug));
    } else {
      work.insert(std::move(aug));
    }
  }
  return kernel.rows();
}

}  // namespace weylinv::exactla
