#pragma once

#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "weylinv/linalg.hpp"
#include "weylinv/monomial.hpp"
#include "weylinv/polynomial.hpp"

namespace weylinv::polyring {

// A subspace of the degree-d piece of the polynomial ring, held as a
// reduced row-echelon basis over the monomial coordinates (descending
// grevlex columns).
struct GradedSubspace {
  int vars = 0;
  int degree = 0;
  exactla::ReducedBasis basis;

  std::size_t rank() const { return basis.rank(); }
};

// Optional persistent store for computed ideal bases; installed by the CLI
// when a cache directory is configured.
struct BasisStore {
  virtual ~BasisStore() = default;
  virtual std::optional<GradedSubspace> load(int vars, int degree) = 0;
  virtual void store(int vars, int degree, const GradedSubspace& value) = 0;
};

namespace detail {

inline std::shared_ptr<BasisStore>& basis_store_slot() {
  static std::shared_ptr<BasisStore> store;
  return store;
}

// Standard monomials are the non-pivot monomials of the reduced ideal
// bases: exponent of t_i at most i-1 for every i.  The pivot monomials are
// those divisible by some t_i^i.
inline bool is_standard(const Monomial& m) {
  for (std::size_t i = 0; i < m.exponents.size(); ++i)
    if (m.exponents[i] > static_cast<std::uint32_t>(i)) return false;
  return true;
}

// Smallest i (1-based) with t_i^i dividing m, or 0 when m is standard.
inline int first_pivot_variable(const Monomial& m) {
  for (std::size_t i = 0; i < m.exponents.size(); ++i)
    if (m.exponents[i] >= static_cast<std::uint32_t>(i) + 1) return static_cast<int>(i) + 1;
  return 0;
}

inline GradedSubspace compute_ideal_degree_basis(int k, int s) {
  const auto table = MonomialTable::get(k, s);
  const int n_cols = static_cast<int>(table->size());

  // Rewriting family: g_i = h_i(t_i..t_k), the degree-i complete
  // homogeneous polynomial in the trailing variables.  Each g_i lies in
  // the augmentation ideal and its grevlex leading monomial is t_i^i, so
  // the rows g_i * m have pairwise distinct leading monomials that sweep
  // out exactly the non-standard monomials of degree s.
  std::vector<Polynomial> g;
  g.reserve(static_cast<std::size_t>(k) + 1);
  g.emplace_back(Polynomial::zero(k));  // placeholder for i = 0
  for (int i = 1; i <= std::min(k, s); ++i) {
    g.push_back(complete_homogeneous(i, i, k));
    Monomial expected_lead = Monomial::unit(k);
    expected_lead.exponents[static_cast<std::size_t>(i - 1)] = static_cast<std::uint32_t>(i);
    if (!(g.back().leading_monomial() == expected_lead))
      throw std::logic_error("ideal basis: unexpected leading monomial of rewriting family");
  }

  // Fully reduced rows are built smallest-lead first; every tail entry is
  // a standard monomial strictly below the lead, so a single substitution
  // pass per row suffices.
  std::vector<std::optional<exactla::SparseVector>> tail_of(static_cast<std::size_t>(n_cols));
  std::vector<exactla::SparseVector> rows;
  for (int col = n_cols - 1; col >= 0; --col) {
    const Monomial& u = table->at(static_cast<exactla::ColIndex>(col));
    const int i = first_pivot_variable(u);
    if (i == 0) continue;  // standard monomial: not a pivot
    Monomial quotient = u;
    quotient.exponents[static_cast<std::size_t>(i - 1)] -= static_cast<std::uint32_t>(i);
    std::map<exactla::ColIndex, exactla::Rational> acc;
    for (const auto& [gm, gc] : g[static_cast<std::size_t>(i)].terms()) {
      const Monomial w = gm * quotient;
      const auto w_col = table->index_of(w);
      if (w_col == static_cast<exactla::ColIndex>(col)) continue;  // the lead itself
      if (w_col < static_cast<exactla::ColIndex>(col))
        throw std::logic_error("ideal basis: tail monomial above the lead");
      if (is_standard(w)) {
        auto [it, inserted] = acc.emplace(w_col, gc);
        if (!inserted) it->second += gc;
      } else {
        const auto& sub = tail_of[w_col];
        if (!sub) throw std::logic_error("ideal basis: missing reduced row");
        for (const auto& [tc, tv] : sub->entries) {
          auto [it, inserted] = acc.emplace(tc, -(gc * tv));
          if (!inserted) it->second -= gc * tv;
        }
      }
    }
    exactla::SparseVector tail;
    for (auto& [c, v] : acc)
      if (v != 0) tail.entries.emplace_back(c, std::move(v));
    tail_of[static_cast<std::size_t>(col)] = tail;
    exactla::SparseVector row;
    row.entries.emplace_back(static_cast<exactla::ColIndex>(col), exactla::Rational(1));
    row.entries.insert(row.entries.end(), tail.entries.begin(), tail.entries.end());
    rows.push_back(std::move(row));
  }

  GradedSubspace out;
  out.vars = k;
  out.degree = s;
  out.basis = exactla::ReducedBasis::adopt_echelon(std::move(rows));

  // Audit: the degree-s piece of the ideal is spanned by e_j * m; every
  // such generator must reduce to zero against the computed basis,
  // otherwise the basis misses part of the span and the rank is wrong.
  for (int j = 1; j <= std::min(k, s); ++j) {
    const Polynomial ej = elementary_symmetric(j, k);
    const auto lower = MonomialTable::get(k, s - j);
    for (const auto& m : lower->list()) {
      Polynomial gen(k);
      for (const auto& [em, ec] : ej.terms()) gen.add_term(em * m, ec);
      if (!out.basis.contains(gen.to_sparse(*table)))
        throw std::logic_error("ideal basis audit failed: generator outside computed span");
    }
  }
  return out;
}

}  // namespace detail

inline void set_basis_store(std::shared_ptr<BasisStore> store) {
  detail::basis_store_slot() = std::move(store);
}

// Reduced basis of the degree-s piece of the ideal generated by the
// positive-degree symmetric invariants (equivalently by e_1..e_k).
// Memoized per (k, s) with compute-once semantics; concurrent readers of a
// completed entry never block each other.
inline std::shared_ptr<const GradedSubspace> ideal_degree_basis(int k, int s) {
  using Entry = std::shared_future<std::shared_ptr<const GradedSubspace>>;
  static std::map<std::pair<int, int>, Entry> cache;
  static std::mutex mutex;

  std::promise<std::shared_ptr<const GradedSubspace>> promise;
  std::optional<Entry> existing;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find({k, s});
    if (it != cache.end()) {
      existing = it->second;
    } else {
      cache.emplace(std::make_pair(k, s), promise.get_future().share());
    }
  }
  if (existing) return existing->get();
  try {
    std::shared_ptr<const GradedSubspace> value;
    auto store = detail::basis_store_slot();
    if (store) {
      if (auto loaded = store->load(k, s)) value = std::make_shared<const GradedSubspace>(std::move(*loaded));
    }
    if (!value) {
      value = std::make_shared<const GradedSubspace>(detail::compute_ideal_degree_basis(k, s));
      if (store) store->store(k, s, *value);
    }
    promise.set_value(value);
    return value;
  } catch (...) {
    std::lock_guard<std::mutex> lock(mutex);
    cache.erase({k, s});
    promise.set_exception(std::current_exception());
    throw;
  }
}

// Unique representative of a homogeneous f modulo the degree-matched piece
// of the augmentation ideal, supported on the non-pivot (standard)
// monomials.  The map is linear and kills the ideal.
inline Polynomial coinvariant_normal_form(const Polynomial& f) {
  if (!f.is_homogeneous()) throw std::invalid_argument("coinvariant_normal_form: input not homogeneous");
  if (f.is_zero()) return f;
  const int k = f.vars();
  const int s = f.degree();
  const auto table = MonomialTable::get(k, s);
  const auto basis = ideal_degree_basis(k, s);
  return Polynomial::from_sparse(basis->basis.reduce_vector(f.to_sparse(*table)), *table, k);
}

// Non-pivot monomials of degree s: the canonical basis of the degree-s
// coinvariant space, in descending grevlex order.
inline std::vector<Monomial> coinvariant_basis_monomials(int k, int s) {
  const auto table = MonomialTable::get(k, s);
  std::vector<Monomial> out;
  for (const auto& m : table->list())
    if (detail::is_standard(m)) out.push_back(m);
  return out;
}

// The Artin staircase: exponent of t_i at most k-i.  These monomials also
// descend to a basis of the coinvariant algebra (checked in the tests);
// they need not coincide with the pivot complement.
inline std::vector<Monomial> artin_staircase_monomials(int k, int s) {
  const auto table = MonomialTable::get(k, s);
  std::vector<Monomial> out;
  for (const auto& m : table->list()) {
    bool in_staircase = true;
    for (int i = 0; i < k && in_staircase; ++i)
      in_staircase = m.exponents[static_cast<std::size_t>(i)] <= static_cast<std::uint32_t>(k - 1 - i);
    if (in_staircase) out.push_back(m);
  }
  return out;
}

}  // namespace weylinv::polyring
