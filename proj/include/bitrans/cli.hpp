#ifndef BITRANS_CLI_HPP
#define BITRANS_CLI_HPP

#include <bitrans/formio.hpp>
#include <bitrans/schedule.hpp>
#include <bitrans/transvectant.hpp>
#include <bitrans/verifier.hpp>
#include <bitrans/witness.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace bitrans::cli {

enum class Format { text, json };

/// Exit codes: 0 every requested verification passed (or the query
/// succeeded), 1 some condition failed, 2 usage or input error.
constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

namespace detail {

inline VerifyMode parse_mode(const std::string& s) {
  if (s == "witness") return VerifyMode::witness;
  if (s == "generic") return VerifyMode::generic;
  if (s == "both") return VerifyMode::both;
  throw std::invalid_argument("unknown mode: " + s);
}

inline void emit(const VerificationReport& rep, Format fmt, bool& header_done,
                 std::ostream& out) {
  if (fmt == Format::json) {
    out << report_to_json(rep) << "\n";
  } else {
    if (!header_done) {
      out << report_text_header() << "\n";
      header_done = true;
    }
    out << report_to_text(rep) << "\n";
  }
}

}  // namespace detail

/// Run one CLI invocation. args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Exact bi-transvectant calculus and non-degeneracy verifier "
               "for the SL2 x SL2 action on V_{3,b}"};
  app.require_subcommand(1);

  long b = 0, from = 0, to = 0, height = 10;
  unsigned long long seed = 0;
  int jobs = 1, max_attempts = 5;
  long r_order = 0, s_order = 0;
  std::string mode_str = "witness", format_str = "text", tamper_str;
  std::string lhs, rhs;

  auto* verify = app.add_subcommand("verify", "Verify one b");
  verify->add_option("--b", b, "odd b >= 5")->required();
  verify->add_option("--mode", mode_str, "witness|generic|both");
  verify->add_option("--seed", seed, "generic-mode RNG seed");
  verify->add_option("--height", height, "generic-mode coefficient box");
  verify->add_option("--max-attempts", max_attempts,
                     "generic-mode resample budget");
  verify->add_option("--tamper", tamper_str,
                     "zero_w|duplicate_w|perturb_v (witness mode only)");
  verify->add_option("--format", format_str, "text|json");

  auto* range = app.add_subcommand("verify-range", "Verify every odd b in [from, to]");
  range->add_option("--from", from, "lower bound, >= 5")->required();
  range->add_option("--to", to, "upper bound")->required();
  range->add_option("--mode", mode_str, "witness|generic|both");
  range->add_option("--seed", seed, "generic-mode RNG seed");
  range->add_option("--height", height, "generic-mode coefficient box");
  range->add_option("--max-attempts", max_attempts,
                    "generic-mode resample budget");
  range->add_option("--jobs", jobs, "worker threads");
  range->add_option("--format", format_str, "text|json");

  auto* tv = app.add_subcommand("transvect", "Evaluate one bi-transvectant");
  tv->add_option("--r", r_order, "order in (x, y)")->required();
  tv->add_option("--s", s_order, "order in (X, Y)")->required();
  tv->add_option("--lhs", lhs, "first slot, bi-form text")->required();
  tv->add_option("--rhs", rhs, "second slot, bi-form text")->required();
  tv->add_option("--format", format_str, "text|json");

  auto* sched = app.add_subcommand("schedule", "Show the verification case for b");
  sched->add_option("--b", b, "odd b >= 5")->required();
  sched->add_option("--format", format_str, "text|json");

  auto* dims = app.add_subcommand("dims", "Dimension bookkeeping for b");
  dims->add_option("--b", b, "b >= 1")->required();
  dims->add_option("--format", format_str, "text|json");

  std::vector<std::string> argv_storage = args;
  try {
    std::vector<const char*> argv;
    argv.push_back("bitrans");
    for (const auto& a : argv_storage) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()),
              const_cast<char**>(const_cast<char* const*>(argv.data())));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_pass;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return exit_usage;
  }

  try {
    Format fmt;
    if (format_str == "text") {
      fmt = Format::text;
    } else if (format_str == "json") {
      fmt = Format::json;
    } else {
      throw std::invalid_argument("unknown format: " + format_str);
    }

    if (verify->parsed()) {
      const VerifyMode mode = detail::parse_mode(mode_str);
      VerificationReport rep;
      if (!tamper_str.empty()) {
        if (mode != VerifyMode::witness)
          throw std::invalid_argument("--tamper requires --mode witness");
        Mutation m;
        if (tamper_str == "zero_w") m = Mutation::zero_w;
        else if (tamper_str == "duplicate_w") m = Mutation::duplicate_w;
        else if (tamper_str == "perturb_v") m = Mutation::perturb_v;
        else throw std::invalid_argument("unknown mutation: " + tamper_str);
        const Schedule sch = schedule_for(b);
        const WitnessSet set = tamper(witnesses_for(b), m);
        rep = verify_set(sch, set.v, set.ws, VerifyMode::witness);
      } else {
        switch (mode) {
          case VerifyMode::witness: rep = verify_witness(b); break;
          case VerifyMode::generic:
            rep = verify_generic(b, seed, height, max_attempts);
            break;
          case VerifyMode::both:
            rep = merge_both(verify_witness(b),
                             verify_generic(b, seed, height, max_attempts));
            break;
        }
      }
      bool header = false;
      detail::emit(rep, fmt, header, out);
      return rep.pass() ? exit_pass : exit_fail;
    }

    if (range->parsed()) {
      const VerifyMode mode = detail::parse_mode(mode_str);
      if (from > to) throw std::invalid_argument("--from must not exceed --to");
      if (from < 5) throw std::invalid_argument("--from must be >= 5");
      if (jobs < 1) throw std::invalid_argument("--jobs must be >= 1");
      std::vector<long> bs;
      for (long v = from % 2 == 0 ? from + 1 : from; v <= to; v += 2)
        bs.push_back(v);
      GenericOptions opts{seed, height, max_attempts};
      const auto reports = verify_range(bs, mode, opts, jobs);
      bool header = false, all_pass = true;
      for (const auto& rep : reports) {
        detail::emit(rep, fmt, header, out);
        if (!rep.pass()) all_pass = false;
      }
      return all_pass ? exit_pass : exit_fail;
    }

    if (tv->parsed()) {
      const BiForm p = parse_biform(lhs);
      const BiForm q = parse_biform(rhs);
      const TransvectantSpec spec(r_order, s_order, p.bidegree(), q.bidegree());
      const std::string result = print_biform(bi_transvect(p, q, spec));
      if (fmt == Format::json) {
        nlohmann::ordered_json j;
        j["schema"] = 1;
        j["result"] = result;
        out << j.dump() << "\n";
      } else {
        out << result << "\n";
      }
      return exit_pass;
    }

    if (sched->parsed()) {
      const Schedule s = schedule_for(b);
      if (fmt == Format::json) {
        nlohmann::ordered_json j;
        j["schema"] = 1;
        j["b"] = s.b;
        j["family"] = std::string(family_name(s.family));
        if (s.n) j["n"] = *s.n;
        j["r"] = s.r;
        j["s"] = s.s;
        j["a2"] = s.src2.a;
        j["b2"] = s.src2.b;
        j["a3"] = s.target.a;
        j["b3"] = s.target.b;
        j["c"] = s.c;
        j["N"] = s.N;
        out << j.dump() << "\n";
      } else {
        out << "b=" << s.b << " family=" << family_name(s.family);
        if (s.n) out << " n=" << *s.n;
        out << " (r,s)=(" << s.r << "," << s.s << ")"
            << " (a',b')=(" << s.src2.a << "," << s.src2.b << ")"
            << " (a'',b'')=(" << s.target.a << "," << s.target.b << ")"
            << " c=" << s.c << " N=" << s.N << "\n";
      }
      return exit_pass;
    }

    if (dims->parsed()) {
      if (b < 1) throw std::invalid_argument("dims: b must be >= 1");
      const long dim_v3b = 4 * (b + 1);
      const long moduli = moduli_dimension(b);
      // (3, b) with b = 2N+1 is the canonical bidegree of genus 4N
      const long genus = b % 2 == 1 ? 2 * (b - 1) : -1;
      if (fmt == Format::json) {
        nlohmann::ordered_json j;
        j["schema"] = 1;
        j["b"] = b;
        j["dim_V3b"] = dim_v3b;
        j["moduli_dim"] = moduli;
        if (genus >= 0) j["genus"] = genus;
        out << j.dump() << "\n";
      } else {
        out << "b=" << b << " dim V_{3,b}=" << dim_v3b
            << " moduli_dim=" << moduli;
        if (genus >= 0) out << " genus=" << genus;
        out << "\n";
      }
      return exit_pass;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace bitrans::cli

#endif
