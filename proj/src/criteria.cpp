#include "af/criteria.hpp"

namespace af {

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Finite: return "finite";
    case VerdictKind::FiniteDescent: return "finite-descent";
    case VerdictKind::ConditionalUnresolved: return "conditional-unresolved";
    case VerdictKind::Unknown: return "unknown";
    case VerdictKind::Invalid: return "invalid";
  }
  return "?";
}

namespace {

std::string describe(const std::vector<SUnitEq>& eqs) {
  std::string out;
  for (const SUnitEq& eq : eqs) {
    if (!out.empty()) out += "; ";
    out += eq.str();
  }
  return out.empty() ? "none" : out;
}

}  // namespace

Verdict decide(const Tern& t, Mode mode) {
  Verdict v;
  v.input = t;

  if (auto err = validity_error(t)) {
    v.kind = VerdictKind::Invalid;
    v.reason = *err;
    v.trace.push_back({"input/validity", *err});
    return v;
  }

  Profile pr = profile(t);
  for (const Zint& q : pr.s.primes())
    if (primality(q).probabilistic) v.probabilistic = true;

  if (pr.descent) {
    Zint q = *descent_prime(t);
    v.kind = VerdictKind::FiniteDescent;
    v.trace.push_back({"descent/valuation",
                       "prime " + q.get_str() +
                           " has a strictly dominant positive valuation"});
    v.reason = "elementary q-adic descent at q = " + q.get_str();
    return v;
  }

  ObligationSet ob = obligations(pr);
  if (ob.primary.empty()) {
    v.kind = VerdictKind::Unknown;
    v.trace.push_back({"reduction/none",
                       "two even coefficients with shared 2-adic valuation 1"});
    v.reason = "no reduction applies to this parity shape";
    return v;
  }
  v.trace.push_back({ob.rule_id, "primary: " + describe(ob.primary) +
                                     "; residual: " + describe(ob.residual)});

  std::vector<std::string> missing;
  for (const SUnitEq& eq : ob.primary) {
    auto cert = certify(eq, mode);
    if (cert) {
      v.trace.push_back({cert->rule_id(), eq.str()});
      v.certificates.push_back(std::move(*cert));
    } else {
      v.trace.push_back({"sieve/none", eq.str() + ": no certificate"});
      missing.push_back(eq.str());
    }
  }
  if (!missing.empty()) {
    v.kind = VerdictKind::Unknown;
    v.reason = "uncertified obligation: " + missing.front();
    return v;
  }

  bool residual_ok = true;
  for (const SUnitEq& eq : ob.residual) {
    auto cert = certify(eq, mode);
    if (cert) {
      v.trace.push_back({cert->rule_id(), eq.str()});
      v.certificates.push_back(std::move(*cert));
    } else {
      v.trace.push_back(
          {"sieve/none", eq.str() + ": residual stays assumed"});
      residual_ok = false;
    }
  }
  if (residual_ok) {
    v.kind = VerdictKind::Finite;
    v.reason = "all obligations certified";
  } else {
    v.kind = VerdictKind::ConditionalUnresolved;
    v.reason = "primary obligations certified; a residual equation is assumed";
  }
  return v;
}

}  // namespace af
