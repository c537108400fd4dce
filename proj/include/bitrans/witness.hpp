#ifndef BITRANS_WITNESS_HPP
#define BITRANS_WITNESS_HPP

#include <bitrans/forms.hpp>
#include <bitrans/schedule.hpp>
#include <bitrans/transvectant.hpp>

#include <stdexcept>
#include <vector>

namespace bitrans {

/// Explicit vectors v in V_{3,b} and w_1..w_c in V_{a',b'} certifying the
/// non-degeneracy conditions for one verification case. The formulas are
/// transcribed once, symbolically in the row parameter, and shared by every
/// b of the family.
struct WitnessSet {
  BiForm v;
  std::vector<BiForm> ws;
  Family family = Family::B7;
  bool special_variant = false;  // family B5n3 only: the n = 4 (mod 5) row
};

enum class Mutation { zero_w, duplicate_w, perturb_v };

namespace detail {

// coeff * x^xe y^(a-xe) X^Xe Y^(b-Xe) added into f
inline void add_term(BiForm& f, const Rational& c, long xe, long Xe) {
  f.coeff(f.deg_xy() - xe, f.deg_XY() - Xe) += c;
}

inline WitnessSet b5n_witnesses(long n) {
  const long b = 5 * n;
  WitnessSet set{BiForm(3, b), {}, Family::B5n, false};
  add_term(set.v, binomial(b, n), 3, n);
  add_term(set.v, 3 * binomial(b, 2 * n), 2, 2 * n);
  add_term(set.v, 3 * binomial(b, 2 * n), 1, 3 * n);
  add_term(set.v, binomial(b, n), 0, 4 * n);
  for (long k = 0; k < 3; ++k) {
    BiForm w(3, n);
    add_term(w, 1, 3 - k, 0);   // Y^n x^(3-k) y^k
    add_term(w, -1, 2 - k, n);  // -X^n x^(2-k) y^(k+1)
    set.ws.push_back(std::move(w));
  }
  return set;
}

inline WitnessSet b5n1_witnesses(long n) {
  const long b = 5 * n + 1;
  WitnessSet set{BiForm(3, b), {}, Family::B5n1, false};
  add_term(set.v, binomial(b, 2 * n), 3, 3 * n + 1);
  add_term(set.v, 3 * binomial(b, n), 2, 4 * n + 1);
  add_term(set.v, 3 * binomial(b, 2 * n), 1, 2 * n);
  add_term(set.v, binomial(b, n), 0, n);
  BiForm w(1, 3 * n + 1);
  add_term(w, 1, 1, 3 * n + 1);   // X^(3n+1) x
  add_term(w, -1, 1, 0);          // -Y^(3n+1) x
  add_term(w, -1, 0, n);          // -X^n Y^(2n+1) y
  add_term(w, 1, 0, 2 * n + 1);   // +X^(2n+1) Y^n y
  set.ws.push_back(std::move(w));
  return set;
}

inline WitnessSet b5n2_witnesses(long n) {
  const long b = 5 * n + 2;
  WitnessSet set{BiForm(3, b), {}, Family::B5n2, false};
  add_term(set.v, 1, 3, n);
  add_term(set.v, 1, 2, 2 * n + 1);
  add_term(set.v, 1, 1, 3 * n + 1);
  add_term(set.v, 1, 0, 4 * n + 2);
  BiForm w(3, n);
  add_term(w, 1, 2, 0);   // Y^n x^2 y
  add_term(w, -1, 1, n);  // -X^n x y^2
  set.ws.push_back(std::move(w));
  return set;
}

inline WitnessSet b5n3_witnesses(long n, bool special) {
  const long b = 5 * n + 3;
  WitnessSet set{BiForm(3, b), {}, Family::B5n3, special};
  if (!special) {
    add_term(set.v, binomial(b, n), 3, n);
    add_term(set.v, binomial(b, 2 * n + 1), 2, 2 * n + 1);
    add_term(set.v, binomial(b, 2 * n + 1), 1, 3 * n + 2);
    add_term(set.v, binomial(b, n), 0, 4 * n + 3);
  } else {
    // the n = 4 (mod 5) row, written with n = 2m
    const long m = n / 2;
    add_term(set.v,
             Rational(7 * m + 3, m + 1) * Rational(5 * m + 2, 3 * m + 2) *
                 binomial(b, m),
             3, m);
    add_term(set.v, 1, 3, 9 * m + 5);
    add_term(set.v, 3 * Rational(5 * m + 2, 3 * m + 2) * binomial(b, 3 * m + 1),
             2, 3 * m + 1);
    add_term(set.v, 3 * binomial(b, 5 * m + 2), 1, 5 * m + 2);
    add_term(set.v, Rational(5 * m + 3, 3 * m + 1) * binomial(b, 7 * m + 3), 0,
             7 * m + 3);
  }
  for (long k = 0; k < 3; ++k) {
    BiForm w(3, n + 1);
    add_term(w, 1, k, n + 1);  // X^(n+1) x^k y^(3-k)
    add_term(w, 1, k + 1, 0);  // Y^(n+1) x^(k+1) y^(2-k)
    set.ws.push_back(std::move(w));
  }
  return set;
}

inline WitnessSet b5n4_witnesses(long n) {
  const long b = 5 * n + 4;
  WitnessSet set{BiForm(3, b), {}, Family::B5n4, false};
  add_term(set.v,
           Rational(3 * n + 4, n + 2) * Rational(3 * n + 4, n + 1) *
               binomial(b, 2 * n + 1),
           3, 3 * n + 3);
  add_term(set.v, 3 * Rational(3 * n + 4, n + 1) * binomial(b, n), 2, 4 * n + 4);
  add_term(set.v, -3 * binomial(b, 2 * n + 1), 1, 2 * n + 1);
  add_term(set.v, -Rational(n + 2, 3 * n + 4) * binomial(b, n), 0, n);
  BiForm w(1, 3 * n + 4);
  add_term(w, 1, 1, 3 * n + 4);
  add_term(w, 1, 1, 0);
  add_term(w, 1, 0, 2 * n + 3);
  add_term(w, 1, 0, n + 1);
  set.ws.push_back(std::move(w));
  return set;
}

inline WitnessSet b7_witnesses() {
  WitnessSet set{BiForm(3, 7), {}, Family::B7, false};
  add_term(set.v, binomial(7, 3), 3, 3);
  add_term(set.v, -9, 2, 0);
  add_term(set.v, binomial(7, 1), 1, 6);
  add_term(set.v, binomial(7, 3), 0, 4);
  BiForm w(3, 3);
  add_term(w, 1, 3, 0);  // Y^3 x^3
  add_term(w, 1, 1, 3);  // X^3 x y^2
  add_term(w, 1, 0, 1);  // X Y^2 y^3
  add_term(w, 1, 0, 0);  // Y^3 y^3
  set.ws.push_back(std::move(w));
  return set;
}

}  // namespace detail

/// The published witness vectors for an odd b >= 5, chosen by family; the
/// B5n3 family further dispatches on n mod 5.
inline WitnessSet witnesses_for(long b) {
  const Schedule sch = schedule_for(b);
  WitnessSet set = [&] {
    switch (sch.family) {
      case Family::B5n: return detail::b5n_witnesses(*sch.n);
      case Family::B5n1: return detail::b5n1_witnesses(*sch.n);
      case Family::B5n2: return detail::b5n2_witnesses(*sch.n);
      case Family::B5n3:
        return detail::b5n3_witnesses(*sch.n, *sch.n % 5 == 4);
      case Family::B5n4: return detail::b5n4_witnesses(*sch.n);
      case Family::B7: return detail::b7_witnesses();
    }
    throw std::logic_error("witnesses_for: unreachable");
  }();
  if (static_cast<long>(set.ws.size()) != sch.c)
    throw std::logic_error("witnesses_for: wrong witness count");
  if (set.v.is_zero()) throw std::logic_error("witnesses_for: zero v");
  for (const auto& w : set.ws) {
    if (w.is_zero()) throw std::logic_error("witnesses_for: zero w");
    if (!(w.bidegree() == sch.src2))
      throw std::logic_error("witnesses_for: wrong w bidegree");
  }
  return set;
}

/// Deliberately broken copies of a witness set, for exercising the verifier's
/// failure paths. duplicate_w needs at least two witness vectors. perturb_v
/// adds the first basis monomial (row-major, so x^3 X^b is tried first) whose
/// pairing with w_1 is nonzero; since T(v, w_1) = 0, the perturbed v breaks
/// the vanishing condition exactly.
inline WitnessSet tamper(const WitnessSet& set, Mutation m);

namespace detail {

inline BiForm breaking_monomial(const WitnessSet& set) {
  const long b = set.v.deg_XY();
  const Schedule sch = schedule_for(b);
  const TransvectantSpec spec(sch.r, sch.s, sch.src1, sch.src2);
  for (long i = 0; i <= sch.src1.a; ++i)
    for (long j = 0; j <= sch.src1.b; ++j) {
      BiForm mono = monomial(sch.src1.a, sch.src1.b, i, j);
      if (!bi_transvect(mono, set.ws[0], spec).is_zero()) return mono;
    }
  throw std::logic_error("tamper: w_1 pairs to zero with every monomial");
}

}  // namespace detail

inline WitnessSet tamper(const WitnessSet& set, Mutation m) {
  WitnessSet out = set;
  switch (m) {
    case Mutation::zero_w:
      out.ws[0] = BiForm(set.ws[0].bidegree());
      break;
    case Mutation::duplicate_w:
      if (out.ws.size() < 2)
        throw std::invalid_argument(
            "tamper: duplicate_w needs at least two witness vectors");
      out.ws[1] = out.ws[0];
      break;
    case Mutation::perturb_v:
      out.v += detail::breaking_monomial(set);
      break;
  }
  return out;
}

}  // namespace bitrans

#endif
