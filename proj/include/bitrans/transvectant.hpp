#ifndef BITRANS_TRANSVECTANT_HPP
#define BITRANS_TRANSVECTANT_HPP

#include <bitrans/forms.hpp>
#include <bitrans/matrix.hpp>
#include <bitrans/rational.hpp>

#include <stdexcept>
#include <vector>

namespace bitrans {

/// Order pair (r, s) of a bi-transvectant together with its source bidegrees;
/// the target bidegree (a+a'-2r, b+b'-2s) is derived. Valid iff
/// 0 <= r <= min(a, a') and 0 <= s <= min(b, b').
class TransvectantSpec {
 public:
  TransvectantSpec(long r, long s, Bidegree src1, Bidegree src2)
      : r_(r), s_(s), src1_(src1), src2_(src2) {
    if (r < 0 || r > std::min(src1.a, src2.a) || s < 0 ||
        s > std::min(src1.b, src2.b))
      throw std::invalid_argument("TransvectantSpec: order out of range");
  }

  long r() const { return r_; }
  long s() const { return s_; }
  Bidegree src1() const { return src1_; }
  Bidegree src2() const { return src2_; }
  Bidegree target() const {
    return {src1_.a + src2_.a - 2 * r_, src1_.b + src2_.b - 2 * s_};
  }

 private:
  long r_, s_;
  Bidegree src1_, src2_;
};

/// r-th transvectant of binary forms,
///   T(F, G) = (d-r)!/d! (e-r)!/e! sum_i (-1)^i C(r,i) F_{(r-i,i)} G_{(i,r-i)}
/// where F_{(p,q)} is the p-fold first- and q-fold second-variable partial.
inline BinaryForm transvect(const BinaryForm& f, const BinaryForm& g, long r) {
  const long d = f.degree(), e = g.degree();
  if (r < 0 || r > std::min(d, e))
    throw std::invalid_argument("transvect: order out of range");
  BinaryForm acc(d + e - 2 * r);
  // derivative chains: fd[i] = d1^(r-i) d2^i F, gd[i] = d1^i d2^(r-i) G
  std::vector<BinaryForm> fd, gd;
  fd.reserve(r + 1);
  gd.reserve(r + 1);
  {
    BinaryForm base = f;
    for (long t = 0; t < r; ++t) base = base.d_first();
    fd.push_back(base);
    for (long i = 1; i <= r; ++i) {
      base = f;
      for (long t = 0; t < r - i; ++t) base = base.d_first();
      for (long t = 0; t < i; ++t) base = base.d_second();
      fd.push_back(base);
    }
    for (long i = 0; i <= r; ++i) {
      base = g;
      for (long t = 0; t < i; ++t) base = base.d_first();
      for (long t = 0; t < r - i; ++t) base = base.d_second();
      gd.push_back(base);
    }
  }
  for (long i = 0; i <= r; ++i) {
    Rational c = binomial(r, i);
    if (i % 2 != 0) c = -c;
    acc += c * (fd[i] * gd[i]);
  }
  return inverse_falling_factorial(d, r) * inverse_falling_factorial(e, r) *
         acc;
}

struct ApolarMonomial {
  Rational coeff;
  long x_exponent = 0;  // exponent of the first variable; meaningful only
                        // when coeff is nonzero
};

/// Closed form of the apolar covariant T^(e) on a monomial pair,
///   T(X^i Y^(d-i), X^(e-j) Y^j) = (-1)^(e-j) C(d,i)^{-1} C(d-e, i-j) X^(i-j) Y^...
/// when j <= i and e-j <= d-i, and 0 otherwise.
inline ApolarMonomial apolar_monomial(long d, long i, long e, long j) {
  if (i < 0 || i > d || j < 0 || j > e || e > d)
    throw std::out_of_range("apolar_monomial: index out of range");
  if (j > i || e - j > d - i) return {Rational(0), i - j};
  Rational c = binomial(d - e, i - j) / binomial(d, i);
  if ((e - j) % 2 != 0) c = -c;
  return {c, i - j};
}

/// Coefficient A of T^(e-1) on the monomial pair (X^i Y^(d-i), X^(e-j) Y^j),
/// whose value is A X^(i-j+1) Y^((d-e+2)-(i-j+1)):
///   A = (-1)^(e-j) C(d,i)^{-1} C(d-e+2, i-j+1) (j(d+2)-(i+1)e) / (e(d-e+2)).
inline Rational pre_apolar_coefficient(long d, long i, long e, long j) {
  if (i < 0 || i > d || j < 0 || j > e || e < 1 || e > d || j > i + 1 ||
      e - j > d - i + 1)
    throw std::out_of_range("pre_apolar_coefficient: index out of range");
  Rational c = binomial(d - e + 2, i - j + 1) / binomial(d, i);
  c *= Rational(j * (d + 2) - (i + 1) * e, e * (d - e + 2));
  if ((e - j) % 2 != 0) c = -c;
  return c;
}

/// The monomial pairing of T^(e-1) is non-degenerate iff j(d+2) != (i+1)e;
/// in particular always when d+2 and e are coprime.
inline bool lemma21_nondegenerate(long d, long i, long e, long j) {
  return j * (d + 2) != (i + 1) * e;
}

/// Degrees of the irreducible summands of V_d (x) V_e (e <= d):
/// [d+e-2r for r = 0..e]. The dimension identity
/// sum (d+e-2r+1) = (d+1)(e+1) is checked before returning.
inline std::vector<long> clebsch_gordan_dims(long d, long e) {
  if (e < 0 || e > d)
    throw std::invalid_argument("clebsch_gordan_dims: requires 0 <= e <= d");
  std::vector<long> out;
  out.reserve(e + 1);
  long total = 0;
  for (long r = 0; r <= e; ++r) {
    out.push_back(d + e - 2 * r);
    total += d + e - 2 * r + 1;
  }
  if (total != (d + 1) * (e + 1))
    throw std::logic_error("clebsch_gordan_dims: dimension identity failed");
  return out;
}

namespace detail {

// Partial-derivative table of one transvectant slot. For slot 1 entry (i, k)
// holds d_x^(r-i) d_y^i d_X^(s-k) d_Y^k P, for slot 2 the mirrored orders
// d_x^i d_y^(r-i) d_X^k d_Y^(s-k) P; zero results are dropped.
struct SlotTable {
  long r = 0, s = 0;
  std::vector<std::vector<BiForm>> entries;  // (r+1) x (s+1)
  std::vector<std::vector<bool>> present;

  SlotTable(const BiForm& p, long r_, long s_, bool slot1) : r(r_), s(s_) {
    entries.assign(r + 1, {});
    present.assign(r + 1, std::vector<bool>(s + 1, false));
    for (long i = 0; i <= r; ++i) {
      const long dx = slot1 ? r - i : i;
      const long dy = slot1 ? i : r - i;
      if (dx > p.deg_xy() || dy > p.deg_xy() - dx) {
        entries[i].assign(s + 1, BiForm());
        continue;
      }
      BiForm base = partial_derivative(p, Var::x, dx);
      base = partial_derivative(base, Var::y, dy);
      std::vector<BiForm> row;
      row.assign(s + 1, BiForm());
      for (long k = 0; k <= s; ++k) {
        const long dX = slot1 ? s - k : k;
        const long dY = slot1 ? k : s - k;
        if (dX > p.deg_XY() || dY > p.deg_XY() - dX) continue;
        BiForm g = partial_derivative(base, Var::X, dX);
        g = partial_derivative(g, Var::Y, dY);
        if (!g.is_zero()) {
          row[k] = std::move(g);
          present[i][k] = true;
        }
      }
      entries[i] = std::move(row);
    }
  }
};

// c * A * B accumulated into out, skipping zero entries of both grids.
inline void add_scaled_product(BiForm& out, const Rational& c, const BiForm& a,
                               const BiForm& b) {
  for (long i = 0; i <= a.deg_xy(); ++i)
    for (long j = 0; j <= a.deg_XY(); ++j) {
      if (a.coeff(i, j) == 0) continue;
      const Rational ca = c * a.coeff(i, j);
      for (long k = 0; k <= b.deg_xy(); ++k)
        for (long l = 0; l <= b.deg_XY(); ++l)
          if (b.coeff(k, l) != 0)
            out.coeff(i + k, j + l) += ca * b.coeff(k, l);
    }
}

inline Rational bi_prefactor(const TransvectantSpec& spec) {
  return inverse_falling_factorial(spec.src1().a, spec.r()) *
         inverse_falling_factorial(spec.src2().a, spec.r()) *
         inverse_falling_factorial(spec.src1().b, spec.s()) *
         inverse_falling_factorial(spec.src2().b, spec.s());
}

}  // namespace detail

/// (r, s)-th bi-transvectant, the tensor product of the r-th transvectant on
/// the (x, y) factor with the s-th on the (X, Y) factor, evaluated through
/// the bi-variate analogue of the differential formula:
///   T(P, Q) = pref * sum_{i,k} (-1)^(i+k) C(r,i) C(s,k)
///             P_{(r-i, i, s-k, k)} Q_{(i, r-i, k, s-k)}.
inline BiForm bi_transvect(const BiForm& p, const BiForm& q,
                           const TransvectantSpec& spec) {
  if (!(p.bidegree() == spec.src1()) || !(q.bidegree() == spec.src2()))
    throw std::invalid_argument("bi_transvect: bidegree mismatch");
  const long r = spec.r(), s = spec.s();
  detail::SlotTable tp(p, r, s, /*slot1=*/true);
  detail::SlotTable tq(q, r, s, /*slot1=*/false);
  BiForm out(spec.target());
  for (long i = 0; i <= r; ++i)
    for (long k = 0; k <= s; ++k) {
      if (!tp.present[i][k] || !tq.present[i][k]) continue;
      Rational c = binomial(r, i) * binomial(s, k);
      if ((i + k) % 2 != 0) c = -c;
      detail::add_scaled_product(out, c, tp.entries[i][k], tq.entries[i][k]);
    }
  return detail::bi_prefactor(spec) * std::move(out);
}

namespace detail {

// Derivative of the monomial coeff-free x^(a-i) y^i X^(b-j) Y^j; returns
// false when it vanishes, otherwise the integer factor and the grid index of
// the surviving monomial in the lowered bidegree.
inline bool monomial_derivative(Bidegree deg, long i, long j, long dx, long dy,
                                long dX, long dY, Int& factor, long& oi,
                                long& oj) {
  const long xe = deg.a - i, ye = i, Xe = deg.b - j, Ye = j;
  if (dx > xe || dy > ye || dX > Xe || dY > Ye) return false;
  factor = falling_factorial(xe, dx) * falling_factorial(ye, dy) *
           falling_factorial(Xe, dX) * falling_factorial(Ye, dY);
  oi = ye - dy;  // new y-exponent indexes the lowered grid
  oj = Ye - dY;
  return true;
}

}  // namespace detail

/// Matrix of w -> T(v, w) in the row-major monomial bases; shape
/// dim(target) x dim(src2).
inline RatMatrix matrix_of_right_slot(const BiForm& v,
                                      const TransvectantSpec& spec) {
  if (!(v.bidegree() == spec.src1()))
    throw std::invalid_argument("matrix_of_right_slot: bidegree mismatch");
  const long r = spec.r(), s = spec.s();
  const Bidegree w_deg = spec.src2(), t_deg = spec.target();
  const Rational pref = detail::bi_prefactor(spec);
  detail::SlotTable tv(v, r, s, /*slot1=*/true);
  RatMatrix m(static_cast<std::size_t>(t_deg.dim()),
              static_cast<std::size_t>(w_deg.dim()));
  std::size_t col = 0;
  for (long i0 = 0; i0 <= w_deg.a; ++i0)
    for (long j0 = 0; j0 <= w_deg.b; ++j0, ++col) {
      for (long i = 0; i <= r; ++i)
        for (long k = 0; k <= s; ++k) {
          if (!tv.present[i][k]) continue;
          Int factor;
          long qi, qj;
          if (!detail::monomial_derivative(w_deg, i0, j0, i, r - i, k, s - k,
                                           factor, qi, qj))
            continue;
          Rational c = pref * Rational(factor) * binomial(r, i) * binomial(s, k);
          if ((i + k) % 2 != 0) c = -c;
          const BiForm& g = tv.entries[i][k];
          for (long p = 0; p <= g.deg_xy(); ++p)
            for (long q = 0; q <= g.deg_XY(); ++q) {
              if (g.coeff(p, q) == 0) continue;
              const std::size_t row =
                  static_cast<std::size_t>(p + qi) *
                      static_cast<std::size_t>(t_deg.b + 1) +
                  static_cast<std::size_t>(q + qj);
              m(row, col) += c * g.coeff(p, q);
            }
        }
    }
  return m;
}

/// Vertical stack of the matrices of v -> T(v, w_m) over the given w's;
/// shape (#ws * dim(target)) x dim(src1).
inline RatMatrix matrix_of_left_slot_stacked(const std::vector<BiForm>& ws,
                                             const TransvectantSpec& spec) {
  if (ws.empty())
    throw std::invalid_argument("matrix_of_left_slot_stacked: empty list");
  for (const auto& w : ws)
    if (!(w.bidegree() == spec.src2()))
      throw std::invalid_argument("matrix_of_left_slot_stacked: bidegree mismatch");
  const long r = spec.r(), s = spec.s();
  const Bidegree v_deg = spec.src1(), t_deg = spec.target();
  const std::size_t block = static_cast<std::size_t>(t_deg.dim());
  const Rational pref = detail::bi_prefactor(spec);
  std::vector<detail::SlotTable> tables;
  tables.reserve(ws.size());
  for (const auto& w : ws) tables.emplace_back(w, r, s, /*slot1=*/false);
  RatMatrix m(block * ws.size(), static_cast<std::size_t>(v_deg.dim()));
  std::size_t col = 0;
  for (long i0 = 0; i0 <= v_deg.a; ++i0)
    for (long j0 = 0; j0 <= v_deg.b; ++j0, ++col) {
      for (long i = 0; i <= r; ++i)
        for (long k = 0; k <= s; ++k) {
          Int factor;
          long pi, pj;
          if (!detail::monomial_derivative(v_deg, i0, j0, r - i, i, s - k, k,
                                           factor, pi, pj))
            continue;
          Rational c = pref * Rational(factor) * binomial(r, i) * binomial(s, k);
          if ((i + k) % 2 != 0) c = -c;
          for (std::size_t blk = 0; blk < ws.size(); ++blk) {
            if (!tables[blk].present[i][k]) continue;
            const BiForm& g = tables[blk].entries[i][k];
            for (long p = 0; p <= g.deg_xy(); ++p)
              for (long q = 0; q <= g.deg_XY(); ++q) {
                if (g.coeff(p, q) == 0) continue;
                const std::size_t row =
                    blk * block +
                    static_cast<std::size_t>(p + pi) *
                        static_cast<std::size_t>(t_deg.b + 1) +
                    static_cast<std::size_t>(q + pj);
                m(row, col) += c * g.coeff(p, q);
              }
          }
        }
    }
  return m;
}

}  // namespace bitrans

#endif
