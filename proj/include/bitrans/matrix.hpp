#ifndef BITRANS_MATRIX_HPP
#define BITRANS_MATRIX_HPP

#include <bitrans/rational.hpp>

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bitrans {

/// Dense matrix of exact rationals, row-major storage.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static RatMatrix from_rows(const std::vector<RatVector>& rows,
                             std::size_t cols) {
    RatMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols)
        throw std::invalid_argument("RatMatrix::from_rows: row length mismatch");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  bool operator==(const RatMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

namespace detail {

// Integer row echelon form computed by fraction-free (Bareiss-style)
// elimination. Rows are cleared of denominators and common content up front;
// row scaling changes neither rank nor right kernel. Each elimination step
// cross-multiplies and then strips the row's content, a division that is
// exact unconditionally and removes at least the factor a textbook Bareiss
// step would divide out, so entries stay within the classical minor bound.
struct IntEchelon {
  std::vector<std::vector<Int>> rows;   // nonzero echelon rows
  std::vector<std::size_t> pivot_cols;  // strictly increasing, one per row
  std::size_t cols = 0;
};

inline IntEchelon fraction_free_echelon(const RatMatrix& m) {
  IntEchelon ech;
  ech.cols = m.cols();
  std::vector<std::vector<Int>> a;
  a.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Int scale(1);
    for (std::size_t j = 0; j < m.cols(); ++j)
      scale = lcm(scale, Int(denominator(m(i, j))));
    std::vector<Int> row(m.cols());
    Int content(0);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) == 0) continue;
      row[j] = Int(numerator(m(i, j))) * (scale / Int(denominator(m(i, j))));
      content = gcd(content, row[j]);
    }
    if (content == 0) continue;  // zero row
    if (content > 1)
      for (auto& e : row)
        if (e != 0) e /= content;
    a.push_back(std::move(row));
  }

  std::size_t top = 0;
  for (std::size_t col = 0; col < ech.cols && top < a.size(); ++col) {
    // deterministic pivot: smallest magnitude, lowest row index on ties
    std::size_t piv_row = a.size();
    for (std::size_t r = top; r < a.size(); ++r) {
      if (a[r][col] == 0) continue;
      if (piv_row == a.size() || abs(a[r][col]) < abs(a[piv_row][col]))
        piv_row = r;
    }
    if (piv_row == a.size()) continue;
    std::swap(a[top], a[piv_row]);
    const Int piv = a[top][col];
    for (std::size_t r = top + 1; r < a.size(); ++r) {
      const Int head = std::exchange(a[r][col], Int(0));
      if (head == 0) continue;
      Int content(0);
      for (std::size_t j = col + 1; j < ech.cols; ++j) {
        if (a[r][j] == 0 && a[top][j] == 0) continue;
        a[r][j] = a[r][j] * piv - head * a[top][j];
        if (a[r][j] != 0) content = gcd(content, a[r][j]);
      }
      if (content > 1)
        for (std::size_t j = col + 1; j < ech.cols; ++j)
          if (a[r][j] != 0) a[r][j] /= content;
    }
    ech.pivot_cols.push_back(col);
    ++top;
  }
  a.resize(top);  // rows beyond the last pivot are identically zero
  ech.rows = std::move(a);
  return ech;
}

}  // namespace detail

struct EchelonInfo {
  std::size_t rank = 0;
  std::vector<RatVector> kernel;  // reduced basis of the right null space
};

/// Rank and right-kernel basis in one elimination pass. Kernel vectors carry
/// a unit entry at their free column, zeros at the other free columns, and
/// are listed by increasing free column index.
inline EchelonInfo rank_and_kernel(const RatMatrix& m) {
  const auto ech = detail::fraction_free_echelon(m);
  EchelonInfo info;
  info.rank = ech.pivot_cols.size();
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : ech.pivot_cols) is_pivot[c] = true;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RatVector x(n, Rational(0));
    x[f] = 1;
    for (std::size_t u = ech.rows.size(); u-- > 0;) {
      const auto& row = ech.rows[u];
      const std::size_t p = ech.pivot_cols[u];
      Rational acc(0);
      for (std::size_t j = p + 1; j < n; ++j)
        if (row[j] != 0 && x[j] != 0) acc += Rational(row[j]) * x[j];
      if (acc != 0) x[p] = -acc / Rational(row[p]);
    }
    info.kernel.push_back(std::move(x));
  }
  return info;
}

/// Exact rank over the rationals.
inline std::size_t rank(const RatMatrix& m) {
  return detail::fraction_free_echelon(m).pivot_cols.size();
}

/// Basis of the right null space of m (possibly empty).
inline std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  return rank_and_kernel(m).kernel;
}

/// True iff v lies in the span of the vectors in basis. All vectors must
/// share one length.
inline bool solve_membership(const RatVector& v,
                             const std::vector<RatVector>& basis) {
  for (const auto& w : basis)
    if (w.size() != v.size())
      throw std::invalid_argument("solve_membership: length mismatch");
  RatMatrix span = RatMatrix::from_rows(basis, v.size());
  auto extended = basis;
  extended.push_back(v);
  RatMatrix joined = RatMatrix::from_rows(extended, v.size());
  return rank(span) == rank(joined);
}

}  // namespace bitrans

#endif
