#ifndef BITRANS_FORMS_HPP
#define BITRANS_FORMS_HPP

#include <bitrans/rational.hpp>

#include <algorithm>
#include <array>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace bitrans {

/// Bidegree (a, b) of a bi-form: degree a in (x, y) and degree b in (X, Y).
struct Bidegree {
  long a = 0;
  long b = 0;
  bool operator==(const Bidegree&) const = default;
  long dim() const { return (a + 1) * (b + 1); }
};

enum class Var { x, y, X, Y };

/// Homogeneous binary form of a declared degree d. coeff(i) multiplies
/// U^(d-i) W^i for whichever variable pair (U, W) the caller works with.
/// The zero form of any degree is the all-zeros coefficient vector.
class BinaryForm {
 public:
  explicit BinaryForm(long degree)
      : degree_(degree), coeffs_(static_cast<std::size_t>(degree) + 1) {
    if (degree < 0) throw std::invalid_argument("BinaryForm: negative degree");
  }

  static BinaryForm monomial(long degree, long i, Rational c = Rational(1)) {
    BinaryForm f(degree);
    f.coeff(i) = std::move(c);
    return f;
  }

  long degree() const { return degree_; }

  Rational& coeff(long i) {
    check_index(i);
    return coeffs_[static_cast<std::size_t>(i)];
  }
  const Rational& coeff(long i) const {
    check_index(i);
    return coeffs_[static_cast<std::size_t>(i)];
  }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  /// Derivative in the first variable; degree drops by one (clamped at 0).
  BinaryForm d_first() const {
    BinaryForm r(degree_ > 0 ? degree_ - 1 : 0);
    for (long i = 0; i < degree_; ++i) r.coeff(i) = (degree_ - i) * coeff(i);
    return r;
  }

  /// Derivative in the second variable.
  BinaryForm d_second() const {
    BinaryForm r(degree_ > 0 ? degree_ - 1 : 0);
    for (long i = 0; i < degree_; ++i) r.coeff(i) = (i + 1) * coeff(i + 1);
    return r;
  }

  BinaryForm& operator+=(const BinaryForm& o) {
    check_degree(o);
    for (long i = 0; i <= degree_; ++i) coeff(i) += o.coeff(i);
    return *this;
  }
  BinaryForm& operator-=(const BinaryForm& o) {
    check_degree(o);
    for (long i = 0; i <= degree_; ++i) coeff(i) -= o.coeff(i);
    return *this;
  }
  friend BinaryForm operator+(BinaryForm l, const BinaryForm& r) { return l += r; }
  friend BinaryForm operator-(BinaryForm l, const BinaryForm& r) { return l -= r; }
  friend BinaryForm operator*(const Rational& c, BinaryForm f) {
    for (auto& e : f.coeffs_) e *= c;
    return f;
  }
  friend BinaryForm operator*(const BinaryForm& l, const BinaryForm& r) {
    BinaryForm p(l.degree_ + r.degree_);
    for (long i = 0; i <= l.degree_; ++i) {
      if (l.coeff(i) == 0) continue;
      for (long j = 0; j <= r.degree_; ++j)
        if (r.coeff(j) != 0) p.coeff(i + j) += l.coeff(i) * r.coeff(j);
    }
    return p;
  }

  bool operator==(const BinaryForm&) const = default;

 private:
  void check_index(long i) const {
    if (i < 0 || i > degree_)
      throw std::out_of_range("BinaryForm: coefficient index out of range");
  }
  void check_degree(const BinaryForm& o) const {
    if (o.degree_ != degree_)
      throw std::invalid_argument("BinaryForm: degree mismatch");
  }

  long degree_;
  RatVector coeffs_;
};

/// Bi-homogeneous form on P^1 x P^1 of declared bidegree (a, b), stored as a
/// dense (a+1) x (b+1) grid: entry (i, j) multiplies x^(a-i) y^i X^(b-j) Y^j.
/// The zero form keeps its declared bidegree.
class BiForm {
 public:
  BiForm() : BiForm(Bidegree{0, 0}) {}
  explicit BiForm(Bidegree deg)
      : deg_(deg), coeffs_(static_cast<std::size_t>(deg.dim())) {
    if (deg.a < 0 || deg.b < 0)
      throw std::invalid_argument("BiForm: negative bidegree");
  }
  BiForm(long a, long b) : BiForm(Bidegree{a, b}) {}

  Bidegree bidegree() const { return deg_; }
  long deg_xy() const { return deg_.a; }
  long deg_XY() const { return deg_.b; }

  Rational& coeff(long i, long j) {
    check_index(i, j);
    return coeffs_[index(i, j)];
  }
  const Rational& coeff(long i, long j) const {
    check_index(i, j);
    return coeffs_[index(i, j)];
  }

  /// Row-major flattening of the grid, the basis order used by all matrix
  /// representations.
  RatVector coefficient_vector() const { return coeffs_; }

  static BiForm from_coefficient_vector(Bidegree deg, const RatVector& v) {
    BiForm f(deg);
    if (v.size() != f.coeffs_.size())
      throw std::invalid_argument("BiForm: coefficient vector length mismatch");
    f.coeffs_ = v;
    return f;
  }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  BiForm& operator+=(const BiForm& o) {
    check_bidegree(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
  }
  BiForm& operator-=(const BiForm& o) {
    check_bidegree(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
  }
  friend BiForm operator+(BiForm l, const BiForm& r) { return l += r; }
  friend BiForm operator-(BiForm l, const BiForm& r) { return l -= r; }
  friend BiForm operator-(BiForm f) {
    for (auto& e : f.coeffs_) e = -e;
    return f;
  }
  friend BiForm operator*(const Rational& c, BiForm f) {
    for (auto& e : f.coeffs_) e *= c;
    return f;
  }
  friend BiForm operator*(const BiForm& l, const BiForm& r) {
    BiForm p(l.deg_.a + r.deg_.a, l.deg_.b + r.deg_.b);
    for (long i = 0; i <= l.deg_.a; ++i)
      for (long j = 0; j <= l.deg_.b; ++j) {
        const Rational& c = l.coeff(i, j);
        if (c == 0) continue;
        for (long k = 0; k <= r.deg_.a; ++k)
          for (long l2 = 0; l2 <= r.deg_.b; ++l2)
            if (r.coeff(k, l2) != 0) p.coeff(i + k, j + l2) += c * r.coeff(k, l2);
      }
    return p;
  }

  bool operator==(const BiForm&) const = default;

 private:
  std::size_t index(long i, long j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(deg_.b + 1) +
           static_cast<std::size_t>(j);
  }
  void check_index(long i, long j) const {
    if (i < 0 || i > deg_.a || j < 0 || j > deg_.b)
      throw std::out_of_range("BiForm: grid index out of range");
  }
  void check_bidegree(const BiForm& o) const {
    if (!(o.deg_ == deg_))
      throw std::invalid_argument("BiForm: bidegree mismatch");
  }

  Bidegree deg_;
  RatVector coeffs_;
};

/// The basis monomial x^(a-i) y^i X^(b-j) Y^j with coefficient 1.
inline BiForm monomial(long a, long b, long i, long j) {
  BiForm f(a, b);
  f.coeff(i, j) = 1;
  return f;
}

inline BiForm scale(const Rational& c, BiForm f) { return c * std::move(f); }

/// order-fold partial derivative in one of the four variables. A derivative
/// past the declared degree yields the zero form with that degree component
/// clamped at 0.
inline BiForm partial_derivative(const BiForm& p, Var v, long order = 1) {
  if (order < 0) throw std::invalid_argument("partial_derivative: negative order");
  const long a = p.deg_xy(), b = p.deg_XY();
  const bool on_xy = (v == Var::x || v == Var::y);
  const long src_deg = on_xy ? a : b;
  if (order > src_deg)
    return on_xy ? BiForm(std::max(0L, a - order), b)
                 : BiForm(a, std::max(0L, b - order));
  BiForm cur = p;
  for (long t = 0; t < order; ++t) {
    const long ca = cur.deg_xy(), cb = cur.deg_XY();
    BiForm next(v == Var::x || v == Var::y ? ca - 1 : ca,
                v == Var::X || v == Var::Y ? cb - 1 : cb);
    for (long i = 0; i <= next.deg_xy(); ++i)
      for (long j = 0; j <= next.deg_XY(); ++j) {
        switch (v) {
          case Var::x: next.coeff(i, j) = (ca - i) * cur.coeff(i, j); break;
          case Var::y: next.coeff(i, j) = (i + 1) * cur.coeff(i + 1, j); break;
          case Var::X: next.coeff(i, j) = (cb - j) * cur.coeff(i, j); break;
          case Var::Y: next.coeff(i, j) = (j + 1) * cur.coeff(i, j + 1); break;
        }
      }
    cur = std::move(next);
  }
  return cur;
}

/// An element (g1, g2) of SL2 x SL2 over the rationals; both determinants
/// must be exactly 1.
class GroupElement {
 public:
  using Mat2 = std::array<std::array<Rational, 2>, 2>;

  GroupElement(Mat2 left, Mat2 right)
      : left_(std::move(left)), right_(std::move(right)) {
    if (det(left_) != 1 || det(right_) != 1)
      throw std::invalid_argument("GroupElement: determinant must be 1");
  }

  static GroupElement identity() {
    Mat2 id{{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}};
    return GroupElement(id, id);
  }

  const Mat2& left() const { return left_; }
  const Mat2& right() const { return right_; }

  GroupElement operator*(const GroupElement& o) const {
    return GroupElement(mul(left_, o.left_), mul(right_, o.right_));
  }

 private:
  static Rational det(const Mat2& m) {
    return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  }
  static Mat2 mul(const Mat2& p, const Mat2& q) {
    Mat2 r{};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        r[i][j] = p[i][0] * q[0][j] + p[i][1] * q[1][j];
    return r;
  }

  Mat2 left_;
  Mat2 right_;
};

namespace detail {

// Column i holds the coefficients of (m11 u + m21 w)^(d-i) (m12 u + m22 w)^i
// in the basis u^(d-k) w^k, i.e. the matrix of u -> u.m on degree-d forms.
inline std::vector<RatVector> substitution_table(const GroupElement::Mat2& m,
                                                 long d) {
  // pow1[t] = (m11 u + m21 w)^t, pow2[t] = (m12 u + m22 w)^t
  auto powers = [d](const Rational& cu, const Rational& cw) {
    std::vector<RatVector> p(static_cast<std::size_t>(d) + 1);
    p[0] = {Rational(1)};
    for (long t = 1; t <= d; ++t) {
      p[t].assign(static_cast<std::size_t>(t) + 1, Rational(0));
      for (long k = 0; k < t; ++k) {
        if (p[t - 1][k] == 0) continue;
        p[t][k] += cu * p[t - 1][k];
        p[t][k + 1] += cw * p[t - 1][k];
      }
    }
    return p;
  };
  const auto p1 = powers(m[0][0], m[1][0]);
  const auto p2 = powers(m[0][1], m[1][1]);
  std::vector<RatVector> cols(static_cast<std::size_t>(d) + 1);
  for (long i = 0; i <= d; ++i) {
    RatVector col(static_cast<std::size_t>(d) + 1, Rational(0));
    for (std::size_t k = 0; k < p1[d - i].size(); ++k) {
      if (p1[d - i][k] == 0) continue;
      for (std::size_t l = 0; l < p2[i].size(); ++l)
        if (p2[i][l] != 0) col[k + l] += p1[d - i][k] * p2[i][l];
    }
    cols[static_cast<std::size_t>(i)] = std::move(col);
  }
  return cols;
}

}  // namespace detail

/// Left action by substitution: (g.P)(x, y, X, Y) = P((x, y).g1, (X, Y).g2)
/// with (x, y).M = (m11 x + m21 y, m12 x + m22 y). Bidegree is preserved.
inline BiForm act(const GroupElement& g, const BiForm& p) {
  const long a = p.deg_xy(), b = p.deg_XY();
  const auto lt = detail::substitution_table(g.left(), a);
  const auto rt = detail::substitution_table(g.right(), b);
  BiForm out(a, b);
  for (long i = 0; i <= a; ++i)
    for (long j = 0; j <= b; ++j) {
      const Rational& c = p.coeff(i, j);
      if (c == 0) continue;
      for (long k = 0; k <= a; ++k) {
        if (lt[i][k] == 0) continue;
        const Rational ck = c * lt[i][k];
        for (long l = 0; l <= b; ++l)
          if (rt[j][l] != 0) out.coeff(k, l) += ck * rt[j][l];
      }
    }
  return out;
}

}  // namespace bitrans

#endif
