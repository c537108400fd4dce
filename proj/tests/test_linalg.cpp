#include <bitrans/matrix.hpp>
#include <bitrans/rational.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "support/generators.hpp"
#include "support/naive_linalg.hpp"

using namespace bitrans;

namespace {

RatMatrix make(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<RatVector> rv;
  std::size_t cols = 0;
  for (const auto& r : rows) {
    RatVector row;
    for (long e : r) row.emplace_back(e);
    cols = row.size();
    rv.push_back(std::move(row));
  }
  return RatMatrix::from_rows(rv, cols);
}

}  // namespace

TEST_CASE("binomial values") {
  CHECK(binomial(5, 1) == 5);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(4, -1) == 0);
  CHECK(binomial(4, 5) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(50, 25) == Rational(Int("126410606437752")));
}

TEST_CASE("rationals stay canonical") {
  Rational q(4, 6);
  CHECK(numerator(q) == 2);
  CHECK(denominator(q) == 3);
  Rational r = Rational(1, 3) - Rational(5, 6);
  CHECK(numerator(r) == -1);
  CHECK(denominator(r) == 2);
}

TEST_CASE("rank on small matrices") {
  CHECK(rank(make({{1, 0}, {0, 1}})) == 2);
  CHECK(rank(RatMatrix(3, 5)) == 0);
  CHECK(rank(make({{1, 2}, {2, 4}})) == 1);
  CHECK(rank(RatMatrix(0, 4)) == 0);
}

TEST_CASE("kernel basis normalization") {
  SECTION("one free column") {
    const auto k = kernel_basis(make({{1, 0, 0}, {0, 1, 0}}));
    REQUIRE(k.size() == 1);
    CHECK(k[0] == RatVector{Rational(0), Rational(0), Rational(1)});
  }
  SECTION("trivial kernel") {
    CHECK(kernel_basis(make({{1, 0}, {0, 1}})).empty());
  }
  SECTION("single relation") {
    const auto k = kernel_basis(make({{1, 1}}));
    REQUIRE(k.size() == 1);
    CHECK(k[0] == RatVector{Rational(-1), Rational(1)});
  }
  SECTION("zero matrix has the unit vectors") {
    const auto k = kernel_basis(RatMatrix(2, 3));
    REQUIRE(k.size() == 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        CHECK(k[i][j] == (i == j ? 1 : 0));
  }
}

TEST_CASE("solve_membership") {
  CHECK(solve_membership({Rational(2), Rational(2)}, {{Rational(1), Rational(1)}}));
  CHECK_FALSE(
      solve_membership({Rational(1), Rational(0)}, {{Rational(0), Rational(1)}}));
  CHECK(solve_membership({Rational(0), Rational(0)}, {}));
  CHECK_THROWS_AS(
      solve_membership({Rational(1)}, {{Rational(1), Rational(0)}}),
      std::invalid_argument);
}

TEST_CASE("fraction-free elimination agrees with naive Gaussian elimination") {
  testing::Rng rng(20240811);
  for (int trial = 0; trial < 150; ++trial) {
    const RatMatrix m = testing::random_matrix(rng);
    const auto info = rank_and_kernel(m);
    CAPTURE(m.rows(), m.cols(), trial);

    CHECK(info.rank == testing::naive_rank(m));
    CHECK(info.kernel == testing::naive_kernel(m));

    // rank-nullity
    CHECK(info.rank + info.kernel.size() == m.cols());

    // every kernel vector multiplies to exactly zero
    for (const auto& x : info.kernel)
      for (std::size_t i = 0; i < m.rows(); ++i) {
        Rational acc(0);
        for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * x[j];
        CHECK(acc == 0);
      }
  }
}

TEST_CASE("rank is invariant under row permutation and row scaling") {
  testing::Rng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const RatMatrix m = testing::random_matrix(rng, 9);
    const std::size_t r = rank(m);

    std::vector<std::size_t> perm(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    RatMatrix shuffled(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        shuffled(i, j) = m(perm[i], j);
    CHECK(rank(shuffled) == r);

    RatMatrix scaled = m;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Rational c = testing::random_rational(rng);
      if (c == 0) c = 1;
      for (std::size_t j = 0; j < m.cols(); ++j) scaled(i, j) *= c;
    }
    CHECK(rank(scaled) == r);
  }
}
