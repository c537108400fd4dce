#ifndef BITRANS_RATIONAL_HPP
#define BITRANS_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <vector>

namespace bitrans {

// Every scalar in this library is exact. Rational values are kept canonical
// (lowest terms, positive denominator) by the GMP backend.
using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using RatVector = std::vector<Rational>;

/// C(n, k) as an exact integer; 0 when k < 0 or k > n.
inline Int binomial_int(long long n, long long k) {
  if (k < 0 || k > n) return Int(0);
  if (n - k < k) k = n - k;
  Int r(1);
  for (long long t = 1; t <= k; ++t) {
    r *= n - k + t;
    r /= t;  // exact: r equals C(n-k+t, t) after each step
  }
  return r;
}

/// C(n, k) as an integer-valued rational.
inline Rational binomial(long long n, long long k) {
  return Rational(binomial_int(n, k));
}

/// n (n-1) ... (n-k+1); empty product for k <= 0.
inline Int falling_factorial(long long n, long long k) {
  Int r(1);
  for (long long t = 0; t < k; ++t) r *= n - t;
  return r;
}

/// (d-r)!/d! = 1 / (d (d-1) ... (d-r+1)).
inline Rational inverse_falling_factorial(long long d, long long r) {
  return Rational(1) / Rational(falling_factorial(d, r));
}

}  // namespace bitrans

#endif
