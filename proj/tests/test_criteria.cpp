#include "af/criteria.hpp"

#include <string>
#include <vector>

#include "af/fkm.hpp"
#include "af/sunit.hpp"
#include "doctest.h"

using af::CertKind;
using af::decide;
using af::Mode;
using af::obligations;
using af::profile;
using af::SSet;
using af::SUnitEq;
using af::Tern;
using af::TraceStep;
using af::Verdict;
using af::VerdictKind;
using af::Zint;

namespace {

bool trace_has_rule(const Verdict& v, const std::string& rule) {
  for (const TraceStep& s : v.trace)
    if (s.rule == rule) return true;
  return false;
}

}  // namespace

TEST_CASE("verdict kind names") {
  CHECK(af::to_string(VerdictKind::Finite) == "finite");
  CHECK(af::to_string(VerdictKind::FiniteDescent) == "finite-descent");
  CHECK(af::to_string(VerdictKind::ConditionalUnresolved) ==
        "conditional-unresolved");
  CHECK(af::to_string(VerdictKind::Unknown) == "unknown");
  CHECK(af::to_string(VerdictKind::Invalid) == "invalid");
}

TEST_CASE("invalid triples") {
  Verdict v0 = decide(Tern{0, 1, 1}, Mode::Strict);
  CHECK(v0.kind == VerdictKind::Invalid);
  CHECK(v0.reason == "coefficient product is zero");
  REQUIRE(v0.trace.size() == 1);
  CHECK(v0.trace[0].rule == "input/validity");
  CHECK(v0.certificates.empty());

  Verdict v1 = decide(Tern{2, 4, 6}, Mode::Extended);
  CHECK(v1.kind == VerdictKind::Invalid);
  CHECK(v1.reason == "coefficients share the common factor 2");
}

TEST_CASE("elementary descent wins before any reduction") {
  Verdict v = decide(Tern{9, 3, 2}, Mode::Strict);
  CHECK(v.kind == VerdictKind::FiniteDescent);
  CHECK(v.reason == "elementary q-adic descent at q = 3");
  REQUIRE(v.trace.size() == 1);
  CHECK(v.trace[0].rule == "descent/valuation");
  CHECK(v.certificates.empty());
  CHECK_FALSE(v.probabilistic);

  // Same engine, descending at a different prime; the dominated valuation
  // must itself be positive, so (1, 25, -2) does not descend.
  Verdict w = decide(Tern{25, 5, 2}, Mode::Strict);
  CHECK(w.kind == VerdictKind::FiniteDescent);
  CHECK(w.reason == "elementary q-adic descent at q = 5");
  CHECK(decide(Tern{1, 25, -2}, Mode::Strict).kind !=
        VerdictKind::FiniteDescent);
}

TEST_CASE("finite via the exact-16 reduction and the mod-3 sign sieve") {
  Verdict v = decide(Tern{7, 13, 16}, Mode::Strict);
  CHECK(v.kind == VerdictKind::Finite);
  CHECK(v.reason == "all obligations certified");
  CHECK_FALSE(v.probabilistic);
  REQUIRE(v.trace.size() == 2);
  TraceStep t0{"reduction/16-exact",
               "primary: 2^4 X + Y + Z = 0 over {7,13}; residual: none"};
  TraceStep t1{"sieve/mod3-sign", "2^4 X + Y + Z = 0 over {7,13}"};
  CHECK(v.trace[0] == t0);
  CHECK(v.trace[1] == t1);
  REQUIRE(v.certificates.size() == 1);
  CHECK(v.certificates[0].kind == CertKind::Mod3Sign);
  SUnitEq want{4, SSet(std::vector<Zint>{7, 13})};
  CHECK(v.certificates[0].target == want);
}

TEST_CASE("finite for an all-odd triple via the two-prime sieve") {
  Verdict v = decide(Tern{19, 5, 1}, Mode::Strict);
  CHECK(v.kind == VerdictKind::Finite);
  CHECK(trace_has_rule(v, "reduction/16-over-2S"));
  CHECK(trace_has_rule(v, "sieve/two-prime"));
  REQUIRE(v.certificates.size() == 1);
  const af::Certificate& c = v.certificates[0];
  CHECK(c.kind == CertKind::TwoPrime);
  CHECK(c.tp_case == 1);
  CHECK(c.q == 19);
  CHECK(c.l == 5);
  SUnitEq want{4, SSet(std::vector<Zint>{2, 5, 19})};
  CHECK(c.target == want);
}

TEST_CASE("finite for the unit triple via the 4n sieve") {
  Verdict v = decide(Tern{1, 1, 1}, Mode::Strict);
  CHECK(v.kind == VerdictKind::Finite);
  REQUIRE(v.certificates.size() == 1);
  CHECK(v.certificates[0].kind == CertKind::FourNSieve);
  CHECK(v.certificates[0].n == 3);
  SUnitEq want{4, SSet(std::vector<Zint>{2})};
  CHECK(v.certificates[0].target == want);
}

TEST_CASE("finite with an empty prime set via the vacuous mod-3 sieve") {
  Verdict v = decide(Tern{1, 1, 16}, Mode::Strict);
  CHECK(v.kind == VerdictKind::Finite);
  CHECK(trace_has_rule(v, "reduction/16-exact"));
  REQUIRE(v.certificates.size() == 1);
  CHECK(v.certificates[0].kind == CertKind::Mod3Sign);
  CHECK(v.certificates[0].target.s.empty());
}

TEST_CASE("unknown when the single-even reduction cannot be certified") {
  for (Mode m : {Mode::Strict, Mode::Extended}) {
    Verdict v = decide(Tern{1, 1, 2}, m);
    CHECK(v.kind == VerdictKind::Unknown);
    CHECK(v.reason == "uncertified obligation: 2^1 X + Y + Z = 0 over {-}");
    CHECK(trace_has_rule(v, "reduction/2-single"));
    CHECK(trace_has_rule(v, "sieve/none"));
  }
}

TEST_CASE("mode changes the verdict when a derived sieve is needed") {
  // 8 = 2^3 puts this triple on the 8-4-split; the r = 3 obligation has no
  // strict generator but the derived 2-adic sign sieve covers it.
  Verdict strict = decide(Tern{13, 1, 8}, Mode::Strict);
  CHECK(strict.kind == VerdictKind::Unknown);
  CHECK(strict.reason ==
        "uncertified obligation: 2^3 X + Y + Z = 0 over {13}");
  CHECK(trace_has_rule(strict, "reduction/8-4-split"));
  // The r = 2 companion still certifies, so the unknown verdict carries it.
  REQUIRE(strict.certificates.size() == 1);
  CHECK(strict.certificates[0].kind == CertKind::Mod3Sign);

  Verdict ext = decide(Tern{13, 1, 8}, Mode::Extended);
  CHECK(ext.kind == VerdictKind::Finite);
  CHECK(trace_has_rule(ext, "sieve/sign-2adic (derived)"));
  REQUIRE(ext.certificates.size() == 3);
  CHECK(ext.certificates[0].kind == CertKind::Sign2Adic);
  CHECK(ext.certificates[0].derived);
  CHECK(ext.certificates[1].kind == CertKind::Mod3Sign);
  CHECK(ext.certificates[2].kind == CertKind::FourNSieve);
  SUnitEq residual{4, SSet(std::vector<Zint>{2, 13})};
  CHECK(ext.certificates[2].target == residual);
}

TEST_CASE("uncertified residuals cannot occur with the current generators") {
  // Whenever the r = 3 primary of the 8-4-split certifies (odd primes all
  // 1 mod 12), the residual 4n sieve applies with n = 3, so the conditional
  // verdict is never produced by decide(); spot-check a few split triples.
  for (const Tern& t : {Tern{13, 1, 8}, Tern{37, 1, 4}, Tern{1, 61, -8},
                        Tern{73, 13, 4}}) {
    for (Mode m : {Mode::Strict, Mode::Extended}) {
      Verdict v = decide(t, m);
      CHECK(v.kind != VerdictKind::ConditionalUnresolved);
    }
  }
}

TEST_CASE("probabilistic flag follows the primality of the prime set") {
  Zint m89 = af::pow_z(2, 89) - 1;  // Mersenne prime beyond the witness range
  Verdict v = decide(Tern{1, 1, 2 * m89}, Mode::Strict);
  CHECK(v.kind == VerdictKind::Unknown);
  CHECK(v.probabilistic);

  CHECK_FALSE(decide(Tern{1, 1, 2}, Mode::Strict).probabilistic);
  CHECK_FALSE(decide(Tern{7, 13, 16}, Mode::Strict).probabilistic);
}

TEST_CASE("finite verdicts are backed by enumeration-empty obligations") {
  const Tern finite_cases[] = {Tern{7, 13, 16}, Tern{19, 5, 1}, Tern{1, 1, 1},
                               Tern{1, 1, 16}, Tern{13, 1, 8}};
  for (const Tern& t : finite_cases) {
    Verdict v = decide(t, Mode::Extended);
    REQUIRE(v.kind == VerdictKind::Finite);
    CHECK_FALSE(v.certificates.empty());
    af::ObligationSet ob = obligations(profile(t));
    std::vector<SUnitEq> all = ob.primary;
    all.insert(all.end(), ob.residual.begin(), ob.residual.end());
    CHECK(all.size() == v.certificates.size());
    for (const SUnitEq& eq : all) {
      CHECK(af::enumerate_proper_points(eq, 4).empty());
    }
    for (const af::Certificate& c : v.certificates) {
      CHECK(af::conditions_hold(c));
    }
  }
}

TEST_CASE("verdict input echo and trace stability") {
  Verdict v = decide(Tern{3, 5, -8}, Mode::Strict);
  Tern in{3, 5, -8};
  CHECK(v.input == in);
  // Same call, same verdict: the engine is deterministic.
  CHECK(v == decide(Tern{3, 5, -8}, Mode::Strict));
}
