#include <catch2/catch_amalgamated.hpp>

#include "weylinv/characters.hpp"
#include "weylinv/partition.hpp"
#include "weylinv/permutation.hpp"
#include "weylinv/qpolynomial.hpp"
#include "weylinv/tableaux.hpp"

using namespace weylinv::combinat;
using weylinv::exactla::Integer;

TEST_CASE("conjugate") {
  REQUIRE(conjugate(Partition({3, 1})) == Partition({2, 1, 1}));
  REQUIRE(conjugate(Partition({5})) == Partition({1, 1, 1, 1, 1}));
  REQUIRE(conjugate(Partition({2, 2})) == Partition({2, 2}));
  for (int k = 1; k <= 8; ++k)
    for (const auto& p : partitions_of(k)) {
      REQUIRE(conjugate(conjugate(p)) == p);
      REQUIRE(dimension(p) == dimension(conjugate(p)));
    }
}

TEST_CASE("dimension matches tableau enumeration") {
  REQUIRE(dimension(Partition({4})) == 1);
  REQUIRE(dimension(Partition({2, 1})) == 2);
  REQUIRE(dimension(Partition({2, 2})) == 2);
  for (int k = 1; k <= 6; ++k)
    for (const auto& p : partitions_of(k))
      REQUIRE(dimension(p) == Integer(syt_enumerate(p).size()));
}

TEST_CASE("syt_enumerate basics") {
  REQUIRE(syt_enumerate(Partition({1, 1})).size() == 1);
  REQUIRE(syt_enumerate(Partition({2, 1})).size() == 2);
  REQUIRE(syt_enumerate(Partition({3})).size() == 1);
}

TEST_CASE("sum of squared dimensions is k!") {
  for (int k = 1; k <= 8; ++k) {
    Integer sum = 0;
    for (const auto& p : partitions_of(k)) sum += dimension(p) * dimension(p);
    REQUIRE(sum == weylinv::exactla::factorial(static_cast<unsigned>(k)));
  }
}

TEST_CASE("fake degree examples") {
  REQUIRE(fake_degree(Partition({4})) == QPolynomial::one());
  REQUIRE(fake_degree(Partition({1, 1, 1})) == QPolynomial::monomial(3));
  REQUIRE(fake_degree(Partition({1, 1, 1, 1})) == QPolynomial::monomial(6));
  REQUIRE(fake_degree(Partition({2, 1})) == QPolynomial({0, 1, 1}));
}

TEST_CASE("graded dimension of the coinvariant algebra from fake degrees") {
  for (int k = 1; k <= 7; ++k) {
    QPolynomial sum;
    for (const auto& p : partitions_of(k)) {
      const auto d = static_cast<long long>(dimension(p));
      sum += d * fake_degree(p);
    }
    REQUIRE(sum == q_factorial(k));
  }
}

TEST_CASE("fake degree at q=1 is the dimension") {
  for (int k = 1; k <= 7; ++k)
    for (const auto& p : partitions_of(k))
      REQUIRE(Integer(fake_degree(p).eval_at_one()) == dimension(p));
}

TEST_CASE("charge oracle agrees through conjugation") {
  for (int k = 1; k <= 7; ++k)
    for (const auto& p : partitions_of(k))
      REQUIRE(fake_degree(p) == charge_generating(conjugate(p)));
}

TEST_CASE("character examples") {
  for (const auto& mu : partitions_of(5)) REQUIRE(character(Partition({5}), mu) == 1);
  // sign representation: sign of the class
  for (int k = 2; k <= 6; ++k) {
    std::vector<int> ones(static_cast<std::size_t>(k), 1);
    const Partition sign_rep{Partition(std::move(ones))};
    for (const auto& mu : partitions_of(k)) {
      int s = 1;
      for (int part : mu.parts)
        if (part % 2 == 0) s = -s;
      REQUIRE(character(sign_rep, mu) == s);
    }
  }
  REQUIRE(character(Partition({2, 1}), Partition({1, 1, 1})) == 2);
  REQUIRE(character(Partition({2, 1}), Partition({2, 1})) == 0);
  REQUIRE(character(Partition({2, 1}), Partition({3})) == -1);
}

TEST_CASE("character column orthogonality") {
  for (int k = 1; k <= 6; ++k) {
    const auto parts = partitions_of(k);
    for (const auto& mu : parts)
      for (const auto& nu : parts) {
        Integer sum = 0;
        for (const auto& lambda : parts)
          sum += Integer(character(lambda, mu)) * Integer(character(lambda, nu));
        REQUIRE(sum == (mu == nu ? centralizer_size(mu) : Integer(0)));
      }
  }
}

TEST_CASE("partitions_of ordering and counts") {
  const auto p3 = partitions_of(3);
  REQUIRE(p3 == std::vector<Partition>{Partition({3}), Partition({2, 1}), Partition({1, 1, 1})});
  const auto p42 = partitions_of(4, 2);
  REQUIRE(p42 == std::vector<Partition>{Partition({4}), Partition({3, 1}), Partition({2, 2})});
  REQUIRE(partitions_of(5).size() == 7);
}

TEST_CASE("permutation algebra") {
  const auto perms = all_permutations(4);
  REQUIRE(perms.size() == 24);
  for (const auto& s : perms) {
    REQUIRE(compose(s, s.inverse()) == Permutation::identity(4));
    REQUIRE(sign(compose(s, s)) == 1);
  }
  // sign is a homomorphism
  for (const auto& s : all_permutations(3))
    for (const auto& u : all_permutations(3)) REQUIRE(sign(compose(s, u)) == sign(s) * sign(u));
}

TEST_CASE("free module series") {
  // q / ((1-q)(1-q^2)) = q + q^2 + 2q^3 + 2q^4 + ...
  const auto dims = free_module_series(QPolynomial::monomial(1), 2, 4);
  REQUIRE(dims == std::vector<long long>{0, 1, 1, 2, 2});
}
