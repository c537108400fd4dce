#ifndef BITRANS_FORMIO_HPP
#define BITRANS_FORMIO_HPP

#include <bitrans/forms.hpp>
#include <bitrans/verifier.hpp>

#include <json.hpp>

#include <cctype>
#include <cstdio>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace bitrans {

/// Parse failure, carrying the byte offset of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " at position " + std::to_string(pos)),
        pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

namespace detail {

// Text grammar for bi-forms:
//   expr     := ['+'|'-'] term (('+'|'-') term)*
//   term     := [rational] (['*'] varpow)*
//   varpow   := ('x'|'y'|'X'|'Y') ['^' nonneg-int]
//   rational := int ['/' positive-int]
// Whitespace is insignificant; '*' may be omitted. A coefficient of 1 and an
// exponent of 1 may be left implicit on input and are normalized on output.
struct BiFormParser {
  const std::string& text;
  std::size_t pos = 0;

  explicit BiFormParser(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  Int parse_uint() {
    skip_ws();
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) throw ParseError("expected integer", start);
    return Int(text.substr(start, pos - start));
  }

  struct Term {
    Rational coeff{1};
    long ex = 0, ey = 0, eX = 0, eY = 0;
    bool bare_zero = false;  // literal constant 0, degree-neutral
  };

  Term parse_term() {
    Term t;
    bool has_coeff = false, has_var = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const Int num = parse_uint();
      Int den(1);
      if (peek() == '/') {
        ++pos;
        const std::size_t dpos = pos;
        den = parse_uint();
        if (den == 0) throw ParseError("zero denominator", dpos);
      }
      t.coeff = Rational(num, den);
      has_coeff = true;
    }
    while (true) {
      skip_ws();
      bool starred = false;
      if (peek() == '*') {
        ++pos;
        starred = true;
      }
      const char c = peek();
      if (c == 'x' || c == 'y' || c == 'X' || c == 'Y') {
        ++pos;
        long e = 1;
        if (peek() == '^') {
          ++pos;
          const std::size_t epos = pos;
          Int ei = parse_uint();
          if (ei > 1000000) throw ParseError("exponent too large", epos);
          e = static_cast<long>(ei);
        }
        switch (c) {
          case 'x': t.ex += e; break;
          case 'y': t.ey += e; break;
          case 'X': t.eX += e; break;
          case 'Y': t.eY += e; break;
        }
        has_var = true;
      } else if (starred) {
        throw ParseError("expected variable after '*'", pos);
      } else {
        break;
      }
    }
    if (!has_coeff && !has_var)
      throw ParseError("expected term", pos);
    t.bare_zero = !has_var && t.coeff == 0;
    return t;
  }

  std::vector<Term> parse_expr() {
    std::vector<Term> terms;
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    }
    while (true) {
      Term t = parse_term();
      if (sign < 0) t.coeff = -t.coeff;
      terms.push_back(t);
      if (at_end()) break;
      const char c = peek();
      if (c == '+' || c == '-') {
        sign = c == '-' ? -1 : 1;
        ++pos;
      } else {
        throw ParseError("expected '+', '-' or end of input", pos);
      }
    }
    return terms;
  }
};

}  // namespace detail

/// Parse a bi-form from the text grammar. Terms must share one bidegree
/// (bare constant zeros are degree-neutral); like terms are combined. When
/// expected_bidegree is given the parsed bidegree must match it, and an input
/// with no degree-bearing term (such as "0") adopts it.
inline BiForm parse_biform(
    const std::string& text,
    std::optional<Bidegree> expected_bidegree = std::nullopt) {
  detail::BiFormParser parser(text);
  if (parser.at_end()) throw ParseError("empty input", 0);
  const auto terms = parser.parse_expr();

  std::optional<Bidegree> deg;
  for (const auto& t : terms) {
    if (t.bare_zero) continue;
    const Bidegree td{t.ex + t.ey, t.eX + t.eY};
    if (!deg) {
      deg = td;
    } else if (!(td == *deg)) {
      std::ostringstream os;
      os << "inhomogeneous input: term of bidegree (" << td.a << "," << td.b
         << ") next to (" << deg->a << "," << deg->b << ")";
      throw ParseError(os.str(), 0);
    }
  }
  if (!deg) deg = expected_bidegree.value_or(Bidegree{0, 0});
  if (expected_bidegree && !(*deg == *expected_bidegree)) {
    std::ostringstream os;
    os << "bidegree (" << deg->a << "," << deg->b << ") does not match expected ("
       << expected_bidegree->a << "," << expected_bidegree->b << ")";
    throw ParseError(os.str(), 0);
  }
  BiForm f(*deg);
  for (const auto& t : terms) {
    if (t.bare_zero) continue;
    f.coeff(t.ey, t.eY) += t.coeff;
  }
  return f;
}

/// Canonical text: terms in row-major (i, j) grid order, coefficients in
/// lowest terms with denominator 1 left implicit, '*' between factors,
/// exponent 1 left implicit. Round-trips through parse_biform.
inline std::string print_biform(const BiForm& f) {
  const long a = f.deg_xy(), b = f.deg_XY();
  std::ostringstream os;
  bool first = true;
  for (long i = 0; i <= a; ++i)
    for (long j = 0; j <= b; ++j) {
      const Rational& c = f.coeff(i, j);
      if (c == 0) continue;
      const bool neg = c < 0;
      if (first) {
        if (neg) os << '-';
        first = false;
      } else {
        os << (neg ? " - " : " + ");
      }
      const Rational mag = neg ? Rational(-c) : c;
      std::vector<std::string> factors;
      const long exps[4] = {a - i, i, b - j, j};
      const char vars[4] = {'x', 'y', 'X', 'Y'};
      for (int k = 0; k < 4; ++k) {
        if (exps[k] == 0) continue;
        std::string fct(1, vars[k]);
        if (exps[k] > 1) fct += "^" + std::to_string(exps[k]);
        factors.push_back(std::move(fct));
      }
      if (mag != 1 || factors.empty()) {
        std::ostringstream cs;
        cs << mag;
        factors.insert(factors.begin(), cs.str());
      }
      for (std::size_t k = 0; k < factors.size(); ++k) {
        if (k) os << '*';
        os << factors[k];
      }
    }
  if (first) return "0";
  return os.str();
}

/// One verification report as a single-line JSON object (schema version 1).
/// Field set and order are stable; "error" appears only on errored items.
inline std::string report_to_json(const VerificationReport& rep) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["b"] = rep.b;
  j["family"] =
      rep.schedule ? std::string(family_name(rep.schedule->family)) : "";
  j["r"] = rep.schedule ? rep.schedule->r : 0;
  j["s"] = rep.schedule ? rep.schedule->s : 0;
  j["a2"] = rep.schedule ? rep.schedule->src2.a : 0;
  j["b2"] = rep.schedule ? rep.schedule->src2.b : 0;
  j["a3"] = rep.schedule ? rep.schedule->target.a : 0;
  j["b3"] = rep.schedule ? rep.schedule->target.b : 0;
  j["c"] = rep.schedule ? rep.schedule->c : 0;
  j["N"] = rep.schedule ? rep.schedule->N : 0;
  j["mode"] = std::string(mode_name(rep.mode));
  j["conditions"] = {{"i", rep.cond_i},
                     {"ii", rep.cond_ii},
                     {"iii", rep.cond_iii},
                     {"iv", rep.cond_iv}};
  j["rank_iii"] = rep.rank_iii;
  j["rank_iv"] = rep.rank_iv;
  j["kernel_dim"] = rep.kernel_dim;
  j["attempts"] = rep.attempts;
  j["pass"] = rep.pass();
  j["elapsed_ms"] = rep.elapsed_ms;
  if (rep.error) j["error"] = *rep.error;
  return j.dump();
}

/// Fixed-width table row for human output; pair with report_text_header().
inline std::string report_text_header() {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%5s %-6s %-8s %-8s %-8s %2s %4s %-8s %-18s %5s %s",
                "b", "family", "(r,s)", "(a',b')", "(a'',b'')", "c", "N",
                "mode", "conditions", "att", "result");
  return buf;
}

inline std::string report_to_text(const VerificationReport& rep) {
  char buf[256];
  std::string rs = "-", src2 = "-", target = "-", family = "-";
  long c = 0, N = 0;
  if (rep.schedule) {
    rs = "(" + std::to_string(rep.schedule->r) + "," +
         std::to_string(rep.schedule->s) + ")";
    src2 = "(" + std::to_string(rep.schedule->src2.a) + "," +
           std::to_string(rep.schedule->src2.b) + ")";
    target = "(" + std::to_string(rep.schedule->target.a) + "," +
             std::to_string(rep.schedule->target.b) + ")";
    family = std::string(family_name(rep.schedule->family));
    c = rep.schedule->c;
    N = rep.schedule->N;
  }
  const std::string conds = std::string("i:") + (rep.cond_i ? "ok" : "FAIL") +
                            " ii:" + (rep.cond_ii ? "ok" : "FAIL") +
                            " iii:" + (rep.cond_iii ? "ok" : "FAIL") +
                            " iv:" + (rep.cond_iv ? "ok" : "FAIL");
  std::snprintf(buf, sizeof(buf), "%5ld %-6s %-8s %-8s %-8s %2ld %4ld %-8s %-18s %5d %s",
                rep.b, family.c_str(), rs.c_str(), src2.c_str(), target.c_str(),
                c, N, std::string(mode_name(rep.mode)).c_str(), conds.c_str(),
                rep.attempts, rep.pass() ? "pass" : "FAIL");
  std::string line(buf);
  if (rep.error) line += "  error: " + *rep.error;
  return line;
}

}  // namespace bitrans

#endif
