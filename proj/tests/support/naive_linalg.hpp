#ifndef BITRANS_TESTS_NAIVE_LINALG_HPP
#define BITRANS_TESTS_NAIVE_LINALG_HPP

// Textbook rational Gaussian elimination, kept independent of the library's
// fraction-free path so the two can cross-check each other.

#include <bitrans/matrix.hpp>

#include <cstddef>
#include <utility>
#include <vector>

namespace bitrans::testing {

struct NaiveRref {
  std::vector<RatVector> rows;
  std::vector<std::size_t> pivot_cols;
};

inline NaiveRref naive_rref(const RatMatrix& m) {
  std::vector<RatVector> a(m.rows(), RatVector(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  NaiveRref out;
  std::size_t top = 0;
  for (std::size_t col = 0; col < m.cols() && top < a.size(); ++col) {
    std::size_t piv = a.size();
    for (std::size_t r = top; r < a.size(); ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv == a.size()) continue;
    std::swap(a[top], a[piv]);
    const Rational p = a[top][col];
    for (auto& e : a[top]) e /= p;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == top || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t j = 0; j < m.cols(); ++j) a[r][j] -= f * a[top][j];
    }
    out.pivot_cols.push_back(col);
    ++top;
  }
  a.resize(top);
  out.rows = std::move(a);
  return out;
}

inline std::size_t naive_rank(const RatMatrix& m) {
  return naive_rref(m).pivot_cols.size();
}

// Kernel basis read off the reduced row echelon form: one vector per free
// column, unit entry at the free column. Matches the library's normalization.
inline std::vector<RatVector> naive_kernel(const RatMatrix& m) {
  const NaiveRref rref = naive_rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : rref.pivot_cols) is_pivot[c] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector x(m.cols(), Rational(0));
    x[f] = 1;
    for (std::size_t u = 0; u < rref.rows.size(); ++u)
      x[rref.pivot_cols[u]] = -rref.rows[u][f];
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace bitrans::testing

#endif
