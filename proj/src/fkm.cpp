#include "af/fkm.hpp"

namespace af {

namespace {

long mod4(const Zint& x) {
  Zint r = x % 4;
  if (r < 0) r += 4;
  return r.get_si();
}

Zint exact_div(const Zint& n, const Zint& d, const char* what) {
  if (n % d != 0)
    throw std::logic_error(std::string("fkm: non-exact division in ") + what);
  return n / d;
}

}  // namespace

TDecomp t_decompose(const Tern& t) {
  if (auto err = validity_error(t))
    throw std::invalid_argument("t_decompose: " + *err);
  TDecomp d;
  d.ta = gcd(t.b, t.c);
  d.tb = gcd(t.a, t.c);
  d.tc = gcd(t.a, t.b);
  d.ap = exact_div(t.a, d.tb * d.tc, "ap");
  d.bp = exact_div(t.b, d.ta * d.tc, "bp");
  d.cp = exact_div(t.c, d.ta * d.tb, "cp");
  return d;
}

FreyAssembly build_frey(const Tern& t, const Point& pt, unsigned long p) {
  if (p < 3 || !is_prime(Zint(p)))
    throw std::invalid_argument("build_frey: exponent must be an odd prime");
  if (pt.x == 0 || pt.y == 0 || pt.z == 0)
    throw std::invalid_argument("build_frey: zero coordinate");
  Zint xp = pow_z(pt.x, p), yp = pow_z(pt.y, p), zp = pow_z(pt.z, p);
  if (t.a * xp + t.b * yp + t.c * zp != 0)
    throw std::invalid_argument("build_frey: point does not solve the triple");

  TDecomp d = t_decompose(t);
  // ta | x^p since ta divides b, c and is coprime to a; likewise tb, tc.
  std::array<Zint, 3> terms{exact_div(d.ap * xp, d.ta, "term a"),
                            exact_div(d.bp * yp, d.tb, "term b"),
                            exact_div(d.cp * zp, d.tc, "term c")};
  if (terms[0] + terms[1] + terms[2] != 0)
    throw std::logic_error("build_frey: terms do not sum to zero");
  for (int i = 0; i < 3; i++)
    if (gcd(terms[i], terms[(i + 1) % 3]) != 1)
      throw std::invalid_argument("build_frey: terms share a factor");

  int ie = -1;
  for (int i = 0; i < 3; i++)
    if (terms[i] % 2 == 0) ie = i;
  if (ie < 0)
    throw std::invalid_argument("build_frey: no even term");

  for (int sgn : {1, -1})
    for (int i = 0; i < 3; i++) {
      if (i == ie) continue;
      Zint cand = sgn * terms[i];
      if (mod4(cand) == 3) {
        Zint A = cand, B = sgn * terms[ie];
        return FreyAssembly{d, terms, A, B, FreyCurve(A, B)};
      }
    }
  throw std::logic_error("build_frey: no admissible sign ordering");
}

long serre_level_exp2(const Tern& t, const Point& pt) {
  if (auto err = validity_error(t))
    throw std::invalid_argument("serre_level_exp2: " + *err);
  int ie = -1, evens = 0;
  const Zint* coeffs[3] = {&t.a, &t.b, &t.c};
  const Zint* vars[3] = {&pt.x, &pt.y, &pt.z};
  for (int i = 0; i < 3; i++)
    if (*coeffs[i] % 2 == 0) {
      ie = i;
      evens++;
    }
  if (evens >= 2) return 1;
  if (evens == 0) return 1;
  long n = val2(*coeffs[ie]);
  if (n == 4) return 0;
  if (n >= 5) return 1;
  if (*vars[ie] % 2 == 0) return 1;
  return n == 1 ? 5 : 3;
}

Zint serre_level(const Tern& t, const Point& pt) {
  long e = serre_level_exp2(t, pt);
  return pow_z(2, static_cast<unsigned long>(e)) * rad_odd(t.a * t.b * t.c);
}

std::optional<bool> delta_min_check(const Tern& t, const Point& pt,
                                    unsigned long p) {
  TDecomp d = t_decompose(t);
  if ((d.ta * d.tb * d.tc) % 2 != 0) return std::nullopt;
  FreyAssembly fa = build_frey(t, pt, p);
  LocalData ld = tate_local(fa.curve.a_invariants(), 2);
  long v2abc = val2(t.a * t.b * t.c);
  // v2(minimal discriminant) - (-v2(abc) - 8) must vanish mod p.
  return (ld.vdelta_min + v2abc + 8) % static_cast<long>(p) == 0;
}

ObligationSet obligations(const Profile& pr) {
  ObligationSet out;
  const SSet& s = pr.s;
  SUnitEq over_2s{4, s.with_two()};
  switch (pr.parity) {
    case ParityClass::AllOdd:
      out.primary = {over_2s};
      out.rule_id = "reduction/16-over-2S";
      return out;
    case ParityClass::TwoEven:
      if (pr.m2 >= 2) {
        out.primary = {over_2s};
        out.rule_id = "reduction/16-over-2S";
      }
      return out;  // shared valuation 1: nothing applies
    case ParityClass::OneEven: break;
  }
  if (pr.m2 == 4) {
    out.primary = {SUnitEq{4, s}};
    out.rule_id = "reduction/16-exact";
  } else if (pr.m2 >= 5) {
    out.primary = {over_2s};
    out.rule_id = "reduction/16-over-2S";
  } else if (pr.m2 >= 2) {  // 2 or 3
    out.primary = {SUnitEq{3, s}, SUnitEq{2, s}};
    out.residual = {over_2s};
    out.rule_id = "reduction/8-4-split";
  } else {  // m2 == 1
    out.primary = {SUnitEq{1, s}};
    out.residual = {over_2s};
    out.rule_id = "reduction/2-single";
  }
  return out;
}

}  // namespace af
