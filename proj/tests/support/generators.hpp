#ifndef BITRANS_TESTS_GENERATORS_HPP
#define BITRANS_TESTS_GENERATORS_HPP

#include <bitrans/forms.hpp>
#include <bitrans/matrix.hpp>

#include <random>

namespace bitrans::testing {

using Rng = std::mt19937_64;

inline long random_int(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Rational random_rational(Rng& rng, long height = 9) {
  const long num = random_int(rng, -height, height);
  const long den = random_int(rng, 1, height);
  return Rational(num, den);
}

inline RatMatrix random_matrix(Rng& rng, std::size_t max_dim = 12,
                               double zero_prob = 0.3) {
  const std::size_t rows = random_int(rng, 1, max_dim);
  const std::size_t cols = random_int(rng, 1, max_dim);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (unit(rng) >= zero_prob) m(i, j) = random_rational(rng);
  return m;
}

inline BinaryForm random_binary_form(Rng& rng, long degree, long height = 9) {
  BinaryForm f(degree);
  for (long i = 0; i <= degree; ++i) f.coeff(i) = random_int(rng, -height, height);
  return f;
}

inline BiForm random_biform(Rng& rng, Bidegree deg, long height = 9) {
  BiForm f(deg);
  for (long i = 0; i <= deg.a; ++i)
    for (long j = 0; j <= deg.b; ++j) f.coeff(i, j) = random_int(rng, -height, height);
  return f;
}

// L(p) U(q) L(r) products give every determinant exactly 1.
inline GroupElement::Mat2 random_sl2(Rng& rng, long height = 3) {
  const Rational p = random_rational(rng, height);
  const Rational q = random_rational(rng, height);
  const Rational r = random_rational(rng, height);
  GroupElement::Mat2 m;
  m[0][0] = 1 + p * q;
  m[0][1] = p + r + p * q * r;
  m[1][0] = q;
  m[1][1] = 1 + q * r;
  return m;
}

inline GroupElement random_group_element(Rng& rng, long height = 3) {
  return GroupElement(random_sl2(rng, height), random_sl2(rng, height));
}

}  // namespace bitrans::testing

#endif
