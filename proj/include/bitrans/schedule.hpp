#ifndef BITRANS_SCHEDULE_HPP
#define BITRANS_SCHEDULE_HPP

#include <bitrans/forms.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bitrans {

/// Which row of the verification table a given b falls under: one
/// parameterized family per residue of b mod 5 plus the literal b = 7 row.
enum class Family { B5n, B5n1, B5n2, B5n3, B5n4, B7 };

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::B5n: return "B5n";
    case Family::B5n1: return "B5n1";
    case Family::B5n2: return "B5n2";
    case Family::B5n3: return "B5n3";
    case Family::B5n4: return "B5n4";
    case Family::B7: return "B7";
  }
  return "?";
}

/// One verification case: the bi-transvectant input for a given odd b >= 5.
/// c and N are recomputed from dimension counts, never copied from a table,
/// so constructing a Schedule re-derives the published columns.
struct Schedule {
  long b = 0;
  std::optional<long> n;  // row parameter; absent for the b = 7 row
  long r = 0, s = 0;
  Bidegree src1, src2, target;
  long c = 0;
  long N = 0;
  Family family = Family::B7;

  long dim_src1() const { return src1.dim(); }
  long dim_src2() const { return src2.dim(); }
  long dim_target() const { return target.dim(); }
};

namespace detail {

inline void validate_schedule(const Schedule& s) {
  auto fail = [&](const char* what) {
    throw std::logic_error(std::string("schedule_for(b=") +
                           std::to_string(s.b) + "): " + what);
  };
  if (s.c != s.dim_src2() - s.dim_target()) fail("c != dim V' - dim V''");
  if (s.c != 1 && s.c != 3) fail("c not in {1, 3}");
  if (s.src2.a % 2 == 0 || s.src2.b % 2 == 0) fail("a' or b' is even");
  if (s.dim_src1() <= s.c * s.dim_target())
    fail("dimension condition dim V > c dim V'' violated");
  if (s.N != (s.dim_src1() - 1) - s.c * (s.dim_src2() - s.c))
    fail("N != dim PV - dim G(c, V')");
  if (!(s.target == Bidegree{3 + s.src2.a - 2 * s.r, s.b + s.src2.b - 2 * s.s}))
    fail("target bidegree inconsistent");
  if (s.n) {
    const long n = *s.n, res = s.b % 5;
    if ((res == 1 || res == 3) && n % 2 != 0) fail("n must be even");
    if ((res == 0 || res == 2 || res == 4) && n % 2 == 0) fail("n must be odd");
    if (res == 2 && n <= 1) fail("n must exceed 1 for b = 5n+2");
  }
}

}  // namespace detail

/// The verification case for an odd b >= 5. Inputs outside the theorem are
/// rejected with std::invalid_argument.
inline Schedule schedule_for(long b) {
  if (b < 5 || b % 2 == 0)
    throw std::invalid_argument("schedule_for: b must be odd and >= 5");
  Schedule s;
  s.b = b;
  s.src1 = {3, b};
  if (b == 7) {
    s.family = Family::B7;
    s.r = 2;
    s.s = 3;
    s.src2 = {3, 3};
  } else {
    const long n = b / 5;
    s.n = n;
    switch (b % 5) {
      case 0:
        s.family = Family::B5n;
        s.r = 3;
        s.s = n;
        s.src2 = {3, n};
        break;
      case 1:
        s.family = Family::B5n1;
        s.r = 1;
        s.s = 3 * n + 1;
        s.src2 = {1, 3 * n + 1};
        break;
      case 2:
        s.family = Family::B5n2;
        s.r = 3;
        s.s = n;
        s.src2 = {3, n};
        break;
      case 3:
        s.family = Family::B5n3;
        s.r = 3;
        s.s = n;
        s.src2 = {3, n + 1};
        break;
      case 4:
        s.family = Family::B5n4;
        s.r = 1;
        s.s = 3 * n + 3;
        s.src2 = {1, 3 * n + 4};
        break;
    }
  }
  s.target = {3 + s.src2.a - 2 * s.r, b + s.src2.b - 2 * s.s};
  s.c = s.dim_src2() - s.dim_target();
  s.N = (s.dim_src1() - 1) - s.c * (s.dim_src2() - s.c);
  detail::validate_schedule(s);
  return s;
}

/// Bidegree (3, 2N+1) of the canonical model of a genus-g curve with g = 4N.
/// Only g >= 5 with g divisible by 4 is meaningful here.
inline Bidegree genus_to_bidegree(long g) {
  if (g < 5 || g % 4 != 0)
    throw std::invalid_argument(
        "genus_to_bidegree: genus must be >= 5 and divisible by 4");
  return {3, 2 * (g / 4) + 1};
}

/// dim PV_{3,b} - 6 = 4b - 3, the dimension of the corresponding moduli
/// space.
inline long moduli_dimension(long b) {
  if (b < 1) throw std::invalid_argument("moduli_dimension: b must be >= 1");
  return 4 * b - 3;
}

}  // namespace bitrans

#endif
