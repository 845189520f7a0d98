#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "weylinv/rational.hpp"

namespace weylinv::polyring {

// Exponent vector of a monomial in a fixed number of variables.
struct Monomial {
  std::vector<std::uint32_t> exponents;

  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> e) : exponents(std::move(e)) {}
  static Monomial unit(int vars) { return Monomial(std::vector<std::uint32_t>(static_cast<std::size_t>(vars), 0)); }

  int vars() const { return static_cast<int>(exponents.size()); }
  int degree() const {
    return static_cast<int>(std::accumulate(exponents.begin(), exponents.end(), 0u));
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.exponents.size() != b.exponents.size())
      throw std::invalid_argument("Monomial product: variable count mismatch");
    Monomial m = a;
    for (std::size_t i = 0; i < b.exponents.size(); ++i) m.exponents[i] += b.exponents[i];
    return m;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exponents == b.exponents; }
};

// The global monomial order: graded reverse-lexicographic.  Higher total
// degree is greater; at equal degree, the monomial with the smaller
// exponent on the last differing variable is greater.
inline bool grevlex_less(const Monomial& a, const Monomial& b) {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  for (std::size_t i = a.exponents.size(); i-- > 0;) {
    if (a.exponents[i] != b.exponents[i]) return a.exponents[i] > b.exponents[i];
  }
  return false;
}

inline bool grevlex_greater(const Monomial& a, const Monomial& b) { return grevlex_less(b, a); }

// Comparator putting the grevlex-greatest monomial first; this is the
// canonical term order for serialization and for column indexing.
struct GrevlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_less(b, a); }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (std::uint32_t e : m.exponents) h = (h * 1099511628211ull) ^ (e + 0x9e3779b9u + (h << 6));
    return h;
  }
};

// All monomials of a given degree, listed in descending grevlex order so
// that list position coincides with the column index used by the sparse
// linear algebra.  Shared per-(vars, degree) with compute-once semantics.
class MonomialTable {
 public:
  const std::vector<Monomial>& list() const { return list_; }
  std::size_t size() const { return list_.size(); }

  exactla::ColIndex index_of(const Monomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) throw std::out_of_range("MonomialTable: monomial not in table");
    return it->second;
  }
  const Monomial& at(exactla::ColIndex i) const { return list_[i]; }

  static std::shared_ptr<const MonomialTable> get(int vars, int degree);

 private:
  MonomialTable(int vars, int degree) {
    Monomial cur = Monomial::unit(vars);
    auto rec = [&](auto&& self, int var, int remaining) -> void {
      if (var == vars - 1) {
        cur.exponents[static_cast<std::size_t>(var)] = static_cast<std::uint32_t>(remaining);
        list_.push_back(cur);
        return;
      }
      for (int e = remaining; e >= 0; --e) {
        cur.exponents[static_cast<std::size_t>(var)] = static_cast<std::uint32_t>(e);
        self(self, var + 1, remaining - e);
      }
      cur.exponents[static_cast<std::size_t>(var)] = 0;
    };
    if (vars == 0) {
      if (degree == 0) list_.push_back(Monomial());
    } else {
      rec(rec, 0, degree);
    }
    std::sort(list_.begin(), list_.end(), GrevlexDescending{});
    index_.reserve(list_.size());
    for (std::size_t i = 0; i < list_.size(); ++i)
      index_.emplace(list_[i], static_cast<exactla::ColIndex>(i));
  }

  std::vector<Monomial> list_;
  std::unordered_map<Monomial, exactla::ColIndex, MonomialHash> index_;
};

inline std::shared_ptr<const MonomialTable> MonomialTable::get(int vars, int degree) {
  static std::map<std::pair<int, int>, std::shared_ptr<const MonomialTable>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{vars, degree}];
  if (!slot) slot = std::shared_ptr<const MonomialTable>(new MonomialTable(vars, degree));
  return slot;
}

}  // namespace weylinv::polyring
