#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "af/criteria.hpp"
#include "af/expdioph.hpp"
#include "af/frey.hpp"
#include "af/textio.hpp"

namespace {

using af::Zint;

int exit_code_for(af::VerdictKind k) {
  switch (k) {
    case af::VerdictKind::Finite:
    case af::VerdictKind::FiniteDescent: return 0;
    case af::VerdictKind::Invalid: return 1;
    case af::VerdictKind::ConditionalUnresolved: return 2;
    case af::VerdictKind::Unknown: return 3;
  }
  return 3;
}

std::string rule_chain(const af::Verdict& v) {
  std::string out;
  for (const auto& st : v.trace) {
    if (!out.empty()) out += ";";
    out += st.rule;
  }
  return out.empty() ? "-" : out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"congruence certificates for a x^p + b y^p + c z^p = 0"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string mode_str = "strict";
  bool structured = false;
  bool timings = false;
  std::string out_path;
  app.add_option("--mode", mode_str, "certificate search mode")
      ->check(CLI::IsMember({"strict", "extended"}));
  app.add_flag("--structured,--json", structured,
               "machine-readable line format (afc 1)");
  app.add_flag("--timings", timings,
               "print wall-clock timings to stderr (off by default; output "
               "on stdout stays deterministic either way)");
  app.add_option("--out", out_path, "write the report to this file");

  auto* c_check = app.add_subcommand("check", "decide one coefficient triple");
  std::vector<std::string> abc;
  c_check->add_option("abc", abc, "coefficients a b c")->expected(3)->required();

  auto* c_sunit = app.add_subcommand(
      "sunit", "enumerate proper points of 2^r X + Y + Z = 0 over S");
  long r = 1;
  std::string s_text;
  long exp_bound = 8;
  unsigned long long budget = 100'000'000ULL;
  c_sunit->add_option("r", r, "exponent of the 2-power weight")->required();
  c_sunit->add_option("s", s_text, "comma-separated primes, '-' for the empty set")
      ->required();
  c_sunit->add_option("--exp-bound", exp_bound,
                      "largest prime exponent allowed in a coordinate");
  c_sunit->add_option("--budget", budget, "candidate-pair budget");

  auto* c_exp = app.add_subcommand(
      "expdioph", "solve 2^r q^s = l^(2t) - 1 exactly, optionally brute-force");
  std::string q_text, l_text, side_text;
  c_exp->add_option("q", q_text, "odd prime q")->required();
  c_exp->add_option("l", l_text, "odd prime l")->required();
  c_exp->add_option("--side-bound", side_text,
                    "also search both signs with sides up to this bound");

  auto* c_frey = app.add_subcommand(
      "frey", "normalize y^2 = x(x-A)(x+B) and report local reduction data");
  std::string a_text, b_text;
  c_frey->add_option("A", a_text)->required();
  c_frey->add_option("B", b_text)->required();

  auto* c_corpus = app.add_subcommand(
      "corpus", "decide every triple in a file (lines 'a b c', '#' comments)");
  std::string corpus_path;
  c_corpus->add_option("file", corpus_path)->required();

  CLI11_PARSE(app, argc, argv);

  const af::Mode mode =
      mode_str == "extended" ? af::Mode::Extended : af::Mode::Strict;

  std::ostringstream out;
  int code = 0;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (c_check->parsed()) {
      af::Tern t{Zint(abc[0]), Zint(abc[1]), Zint(abc[2])};
      af::Verdict v = af::decide(t, mode);
      out << (structured ? af::print_verdict(v) : af::format_verdict_human(v));
      code = exit_code_for(v.kind);
    } else if (c_sunit->parsed()) {
      af::SUnitEq eq{r, af::sset_from_text(s_text)};
      af::EnumLimits lim;
      lim.budget = budget;
      auto pts = af::enumerate_proper_points(eq, exp_bound, lim);
      if (structured) {
        out << "afc 1 points\n"
            << "eq " << eq.r << " " << af::sset_to_text(eq.s) << "\n"
            << "bound " << exp_bound << "\n"
            << "count " << pts.size() << "\n";
        for (const auto& pt : pts)
          out << "point " << pt.x << " " << pt.y << " " << pt.z << "\n";
        out << "end\n";
      } else {
        out << eq.str() << ", exponents <= " << exp_bound << ": "
            << pts.size() << " proper points\n";
        for (const auto& pt : pts)
          out << "  (" << pt.x << ", " << pt.y << ", " << pt.z << ")\n";
      }
    } else if (c_exp->parsed()) {
      Zint q(q_text), l(l_text);
      auto sols = af::classify_even_t3(q, l);
      if (structured) {
        out << "afc 1 expdioph\n"
            << "pair " << q << " " << l << "\n"
            << "classified " << sols.size() << "\n";
        for (const auto& s : sols)
          out << "sol " << s.r << " " << s.s << " " << s.t << "\n";
      } else {
        out << "2^r " << q << "^s = " << l << "^(2t) - 1: " << sols.size()
            << " solution(s)\n";
        for (const auto& s : sols)
          out << "  r=" << s.r << " s=" << s.s << " t=" << s.t << "\n";
      }
      if (!side_text.empty()) {
        Zint side(side_text);
        for (int eps : {-1, 1}) {
          for (const auto& s : af::search_t3(q, l, eps, side)) {
            if (structured)
              out << "search " << eps << " " << s.r << " " << s.s << " "
                  << s.t << "\n";
            else
              out << "  search eps=" << eps << ": r=" << s.r << " s=" << s.s
                  << " t=" << s.t << "\n";
          }
        }
      }
      if (structured) out << "end\n";
    } else if (c_frey->parsed()) {
      Zint A(a_text), B(b_text);
      auto norm = af::to_frey_model(A, B);
      if (structured) out << "afc 1 frey\ninput " << A << " " << B << "\n";
      if (const auto* fm = std::get_if<af::FreyModel>(&norm)) {
        const auto ai = fm->curve.a_invariants();
        if (structured) {
          out << "model " << fm->curve.A() << " " << fm->curve.B() << "\n"
              << "audit " << fm->audit << "\n"
              << "exp2 " << af::conductor_exponent_2(fm->curve) << "\n"
              << "conductor " << af::conductor(fm->curve) << "\n";
        } else {
          out << "class model: A = " << fm->curve.A()
              << ", B = " << fm->curve.B() << " (" << fm->audit << ")\n"
              << "conductor: " << af::conductor(fm->curve) << " (2-exponent "
              << af::conductor_exponent_2(fm->curve) << ")\n";
        }
        for (const auto& [p, e] : af::factor(af::model_discriminant(ai))) {
          auto ld = af::tate_local(ai, p);
          if (structured)
            out << "local " << p << " " << ld.kodaira << " " << ld.f << " "
                << ld.vdelta_min << "\n";
          else
            out << "  at " << p << ": " << ld.kodaira << ", f = " << ld.f
                << ", v(min disc) = " << ld.vdelta_min << "\n";
        }
      } else {
        const auto& tr = std::get<af::TwistReport>(norm);
        if (structured)
          out << "twist " << tr.twist << "\nexp2 " << tr.exp2 << "\naudit "
              << tr.audit << "\n";
        else
          out << "not in the table class: quadratic twist by " << tr.twist
              << ", measured 2-exponent " << tr.exp2 << " (" << tr.audit
              << ")\n";
      }
      if (structured) out << "end\n";
    } else if (c_corpus->parsed()) {
      std::ifstream in(corpus_path);
      if (!in) throw std::runtime_error("cannot open " + corpus_path);
      out << "# afc corpus 1 mode=" << mode_str << "\n";
      long counts[5] = {0, 0, 0, 0, 0};
      std::string line;
      while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string sa, sb, sc;
        if (!(ls >> sa)) continue;  // blank
        std::string extra;
        if (!(ls >> sb >> sc) || (ls >> extra))
          throw std::runtime_error("corpus line needs exactly 3 integers: " +
                                   line);
        af::Tern t{Zint(sa), Zint(sb), Zint(sc)};
        af::Verdict v = af::decide(t, mode);
        out << t.a << " " << t.b << " " << t.c << " " << to_string(v.kind)
            << " " << rule_chain(v) << "\n";
        counts[static_cast<int>(v.kind)]++;
      }
      out << "# totals finite=" << counts[0] << " finite-descent=" << counts[1]
          << " conditional-unresolved=" << counts[2]
          << " unknown=" << counts[3] << " invalid=" << counts[4] << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "afcheck: error: " << e.what() << "\n";
    return 1;
  }
  if (timings) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::cerr << "timings: total " << ms << " ms\n";
  }

  if (out_path.empty()) {
    std::cout << out.str();
  } else {
    std::ofstream f(out_path);
    if (!f) {
      std::cerr << "afcheck: error: cannot open " << out_path << "\n";
      return 1;
    }
    f << out.str();
  }
  return code;
}
