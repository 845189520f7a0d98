#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <vector>

#include "weylinv/linalg.hpp"

using namespace weylinv::exactla;

namespace {

SparseVector sv(std::vector<std::pair<ColIndex, long long>> entries) {
  std::vector<std::pair<ColIndex, Rational>> e;
  for (auto& [i, v] : entries) e.emplace_back(i, Rational(v));
  return make_sparse(std::move(e));
}

// Independent rank oracle: largest size of a nonvanishing minor, with the
// determinant computed by cofactor expansion.
Rational det_expand(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Rational det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<Rational>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Rational> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    const Rational term = m[0][j] * det_expand(minor);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

int rank_by_minors(const std::vector<std::vector<Rational>>& m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  for (int r = std::min(rows, cols); r >= 1; --r) {
    std::vector<int> row_sel(static_cast<std::size_t>(rows), 0);
    std::fill(row_sel.begin(), row_sel.begin() + r, 1);
    std::sort(row_sel.begin(), row_sel.end(), std::greater<>());
    do {
      std::vector<int> col_sel(static_cast<std::size_t>(cols), 0);
      std::fill(col_sel.begin(), col_sel.begin() + r, 1);
      std::sort(col_sel.begin(), col_sel.end(), std::greater<>());
      do {
        std::vector<std::vector<Rational>> sub;
        for (int i = 0; i < rows; ++i) {
          if (!row_sel[static_cast<std::size_t>(i)]) continue;
          std::vector<Rational> row;
          for (int j = 0; j < cols; ++j)
            if (col_sel[static_cast<std::size_t>(j)]) row.push_back(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
          sub.push_back(std::move(row));
        }
        if (det_expand(sub) != 0) return r;
      } while (std::prev_permutation(col_sel.begin(), col_sel.end()));
    } while (std::prev_permutation(row_sel.begin(), row_sel.end()));
  }
  return 0;
}

}  // namespace

TEST_CASE("reduce on dependent rows") {
  // second row is twice the first
  auto b = ReducedBasis::reduce({sv({{0, 1}, {1, 2}}), sv({{0, 2}, {1, 4}})});
  REQUIRE(b.rank() == 1);
  REQUIRE(b.pivots() == std::vector<ColIndex>{0});
}

TEST_CASE("reduce of empty input") {
  auto b = ReducedBasis::reduce({});
  REQUIRE(b.rank() == 0);
}

TEST_CASE("reduce detects a linear relation") {
  // third = first - second
  auto b = ReducedBasis::reduce(
      {sv({{0, 1}, {1, 1}}), sv({{1, 1}, {2, 1}}), sv({{0, 1}, {2, -1}})});
  REQUIRE(b.rank() == 2);
}

TEST_CASE("contains") {
  auto b = ReducedBasis::reduce({sv({{0, 1}})});
  REQUIRE(b.contains(sv({{0, 3}})));
  REQUIRE_FALSE(b.contains(sv({{1, 1}})));

  auto b2 = ReducedBasis::reduce({sv({{0, 1}, {1, 1}}), sv({{1, 1}, {2, 1}})});
  REQUIRE(b2.contains(sv({{0, 1}, {2, -1}})));
}

TEST_CASE("rank_of_union") {
  auto e0 = ReducedBasis::reduce({sv({{0, 1}})});
  auto e1 = ReducedBasis::reduce({sv({{1, 1}})});
  REQUIRE(rank_of_union(e0, e0) == 1);
  REQUIRE(rank_of_union(e0, e1) == 2);

  auto d1 = ReducedBasis::reduce({sv({{0, 1}, {1, 1}})});
  auto d2 = ReducedBasis::reduce({sv({{0, 1}, {1, -1}})});
  REQUIRE(rank_of_union(d1, d2) == 2);
  REQUIRE(rank_of_union(d1, d2) >= std::max(d1.rank(), d2.rank()));
}

TEST_CASE("reduce is idempotent and order-independent") {
  std::mt19937_64 rng(20240817);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<SparseVector> vecs;
    const int nvecs = 2 + static_cast<int>(rng() % 5);
    for (int i = 0; i < nvecs; ++i) {
      std::vector<std::pair<ColIndex, Rational>> entries;
      for (ColIndex c = 0; c < 6; ++c) {
        const long long v = static_cast<long long>(rng() % 7) - 3;
        if (v != 0) entries.emplace_back(c, Rational(v));
      }
      vecs.push_back(make_sparse(std::move(entries)));
    }
    auto basis = ReducedBasis::reduce(vecs);
    REQUIRE(ReducedBasis::reduce(basis.rows()) == basis);

    auto shuffled = vecs;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    REQUIRE(ReducedBasis::reduce(shuffled) == basis);

    for (const auto& v : vecs) REQUIRE(basis.contains(v));
  }
}

TEST_CASE("rank agrees with the minor-expansion oracle") {
  std::mt19937_64 rng(911);
  for (int trial = 0; trial < 40; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 6);
    const int cols = 1 + static_cast<int>(rng() % 6);
    std::vector<std::vector<Rational>> dense(static_cast<std::size_t>(rows),
                                             std::vector<Rational>(static_cast<std::size_t>(cols)));
    std::vector<SparseVector> vecs;
    for (int i = 0; i < rows; ++i) {
      std::vector<std::pair<ColIndex, Rational>> entries;
      for (int j = 0; j < cols; ++j) {
        const long long v = static_cast<long long>(rng() % 5) - 2;
        dense[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
        if (v != 0) entries.emplace_back(static_cast<ColIndex>(j), Rational(v));
      }
      vecs.push_back(make_sparse(std::move(entries)));
    }
    REQUIRE(ReducedBasis::reduce(vecs).rank() == static_cast<std::size_t>(rank_by_minors(dense)));
  }
}

TEST_CASE("kernel_of_rows finds exactly the relations") {
  // rows: v, w, v+w, 2v -> kernel rank 2
  auto v = sv({{0, 1}, {2, 1}});
  auto w = sv({{1, 1}});
  auto vw = add_scaled(v, Rational(1), w);
  auto v2 = v;
  v2.scale(Rational(2));
  auto kernel = kernel_of_rows({v, w, vw, v2}, 3);
  REQUIRE(kernel.size() == 2);
  // check each kernel vector is a genuine relation
  std::vector<SparseVector> rows = {v, w, vw, v2};
  for (const auto& rel : kernel) {
    SparseVector sum;
    for (const auto& [idx, c] : rel.entries) sum = add_scaled(sum, c, rows[idx]);
    REQUIRE(sum.is_zero());
  }
}

TEST_CASE("rationals stay exact and normalized") {
  Rational r(2, 4);
  REQUIRE(rational_to_string(r) == "1/2");
  REQUIRE(parse_rational("-6/4") == Rational(-3, 2));
  REQUIRE(parse_rational("7") == Rational(7));
  REQUIRE(rational_to_string(Rational(0)) == "0");
  Rational third(1, 3);
  REQUIRE(third + third + third == 1);
}
