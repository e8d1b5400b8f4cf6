#include "af/frey.hpp"

#include <optional>

namespace af {

namespace {

long mod4(const Zint& x) {
  Zint r = x % 4;
  if (r < 0) r += 4;
  return r.get_si();
}

}  // namespace

FreyCurve::FreyCurve(Zint A, Zint B) : A_(std::move(A)), B_(std::move(B)) {
  if (A_ * B_ * (A_ + B_) == 0)
    throw std::invalid_argument("FreyCurve: A B (A+B) = 0");
  if (gcd(A_, B_) != 1)
    throw std::invalid_argument("FreyCurve: gcd(A, B) != 1");
  if (mod4(A_) != 3) throw std::invalid_argument("FreyCurve: A != 3 mod 4");
  if (B_ % 2 != 0) throw std::invalid_argument("FreyCurve: B odd");
}

std::array<Zint, 5> FreyCurve::a_invariants() const {
  return {0, B_ - A_, 0, -A_ * B_, 0};
}

Zint FreyCurve::discriminant() const {
  Zint abc = A_ * B_ * (A_ + B_);
  return 16 * abc * abc;
}

Zint FreyCurve::c4() const { return 16 * (A_ * A_ + A_ * B_ + B_ * B_); }

long conductor_exponent_2(const FreyCurve& e) {
  switch (long v = val2(e.B()); v) {
    case 1: return 5;
    case 2:
    case 3: return 3;
    case 4: return 0;
    default: return 1;  // v >= 5
  }
}

Zint conductor_odd(const FreyCurve& e) {
  return rad_odd(e.A() * e.B() * (e.A() + e.B()));
}

Zint conductor(const FreyCurve& e) {
  return pow_z(2, static_cast<unsigned long>(conductor_exponent_2(e))) *
         conductor_odd(e);
}

// --- Tate's algorithm -------------------------------------------------------

namespace {

constexpr long kInfV = 1'000'000'000;

struct W {
  Zint a1, a2, a3, a4, a6;
  std::array<Zint, 5> arr() const { return {a1, a2, a3, a4, a6}; }
};

Zint w_b2(const W& w) { return w.a1 * w.a1 + 4 * w.a2; }
Zint w_b4(const W& w) { return 2 * w.a4 + w.a1 * w.a3; }
Zint w_b6(const W& w) { return w.a3 * w.a3 + 4 * w.a6; }
Zint w_b8(const W& w) {
  return w.a1 * w.a1 * w.a6 + 4 * w.a2 * w.a6 - w.a1 * w.a3 * w.a4 +
         w.a2 * w.a3 * w.a3 - w.a4 * w.a4;
}
Zint w_disc(const W& w) {
  Zint b2 = w_b2(w), b4 = w_b4(w), b6 = w_b6(w), b8 = w_b8(w);
  return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
}
Zint w_c4(const W& w) {
  return w_b2(w) * w_b2(w) - 24 * w_b4(w);
}

long vz(const Zint& n, const Zint& p) {
  return n == 0 ? kInfV : valuation(n, p);
}

Zint mod_p(const Zint& x, const Zint& m) {
  Zint r = x % m;
  if (r < 0) r += m;
  return r;
}

Zint inv_mod(const Zint& x, const Zint& m) {
  Zint r;
  if (!mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()))
    throw std::logic_error("tate: non-invertible element");
  return r;
}

Zint exact_div(const Zint& n, const Zint& d) {
  if (n % d != 0) throw std::logic_error("tate: non-exact division");
  return n / d;
}

// x = x' + r, y = y' + s x' + t  (unimodular change of variables)
void translate(W& w, const Zint& r, const Zint& s, const Zint& t) {
  Zint a1 = w.a1, a2 = w.a2, a3 = w.a3, a4 = w.a4, a6 = w.a6;
  w.a1 = a1 + 2 * s;
  w.a2 = a2 - s * a1 + 3 * r - s * s;
  w.a3 = a3 + r * a1 + 2 * t;
  w.a4 = a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t;
  w.a6 = a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1;
}

void rescale(W& w, const Zint& p) {  // u = p
  Zint p2 = p * p;
  w.a1 = exact_div(w.a1, p);
  w.a2 = exact_div(w.a2, p2);
  w.a3 = exact_div(w.a3, p2 * p);
  w.a4 = exact_div(w.a4, p2 * p2);
  w.a6 = exact_div(w.a6, p2 * p2 * p2);
}

// Brings the singular point of the reduced curve to the origin, so that
// p | a3, a4, a6. Direct for p >= 5 (the reduction is a cusp here, so
// x0 = -b2/12); exhaustive for p = 2, 3.
void move_singular_point(W& w, const Zint& p) {
  if (p >= 5) {
    Zint x0 = mod_p(-w_b2(w) * inv_mod(12, p), p);
    Zint y0 = mod_p(-(w.a1 * x0 + w.a3) * inv_mod(2, p), p);
    translate(w, x0, 0, y0);
  } else {
    for (Zint x0 = 0; x0 < p; x0++)
      for (Zint y0 = 0; y0 < p; y0++) {
        W t = w;
        translate(t, x0, 0, y0);
        if (vz(t.a3, p) >= 1 && vz(t.a4, p) >= 1 && vz(t.a6, p) >= 1) {
          w = t;
          return;
        }
      }
  }
  if (!(vz(w.a3, p) >= 1 && vz(w.a4, p) >= 1 && vz(w.a6, p) >= 1))
    throw std::logic_error("tate: singular point not found");
}

// Y^2 + b Y - d over F_p: nullopt when separable, else the double root.
std::optional<Zint> double_root_y(const Zint& b, const Zint& d, const Zint& p) {
  if (p == 2) {
    if (mod_p(b, 2) == 1) return std::nullopt;
    return mod_p(d, 2);
  }
  if (mod_p(b * b + 4 * d, p) != 0) return std::nullopt;
  return mod_p(-b * inv_mod(2, p), p);
}

// al X^2 + be X + ga over F_p with al a unit: nullopt when separable.
std::optional<Zint> double_root_x(const Zint& al, const Zint& be,
                                  const Zint& ga, const Zint& p) {
  if (p == 2) {
    if (mod_p(be, 2) == 1) return std::nullopt;
    return mod_p(ga * al, 2);
  }
  if (mod_p(be * be - 4 * al * ga, p) != 0) return std::nullopt;
  return mod_p(-be * inv_mod(2 * al, p), p);
}

// --- cubic root structure over F_p (degree <= 3 polynomial arithmetic) ----

using Poly = std::vector<Zint>;  // coefficients, ascending degree, mod p

Poly pnorm(Poly f, const Zint& p) {
  for (auto& c : f) c = mod_p(c, p);
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

Zint peval(const Poly& f, const Zint& x, const Zint& p) {
  Zint acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = mod_p(acc * x + *it, p);
  return acc;
}

Poly pmod(Poly a, const Poly& b, const Zint& p) {
  Zint lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    Zint coef = mod_p(a.back() * lead_inv, p);
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); i++)
      a[shift + i] = mod_p(a[shift + i] - coef * b[i], p);
    a = pnorm(std::move(a), p);
    if (a.empty()) break;
  }
  return a;
}

Poly pgcd(Poly a, Poly b, const Zint& p) {
  a = pnorm(std::move(a), p);
  b = pnorm(std::move(b), p);
  while (!b.empty()) {
    Poly r = pmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {  // monic
    Zint li = inv_mod(a.back(), p);
    for (auto& c : a) c = mod_p(c * li, p);
  }
  return a;
}

// Deflate f by the root th: f / (X - th), assuming f(th) = 0.
Poly pdeflate(const Poly& f, const Zint& th, const Zint& p) {
  Poly q(f.size() - 1);
  Zint carry = 0;
  for (std::size_t i = f.size(); i-- > 1;) {
    carry = mod_p(f[i] + carry * th, p);
    q[i - 1] = carry;
  }
  return pnorm(std::move(q), p);
}

struct CubicShape {
  int mult;    // multiplicity of the worst root: 1 (separable), 2 or 3
  Zint theta;  // the repeated root when mult >= 2
};

CubicShape cubic_shape(const Zint& c2, const Zint& c1, const Zint& c0,
                       const Zint& p) {
  Poly f = pnorm({c0, c1, c2, 1}, p);
  Poly df = pnorm({c1, 2 * c2, 3}, p);
  Poly g = df.empty() ? f : pgcd(f, df, p);
  if (g.size() <= 1) return {1, 0};
  Zint theta;
  if (g.size() == 2) {
    theta = mod_p(-g[0] * inv_mod(g[1], p), p);
  } else if (p <= 3) {
    theta = -1;
    for (Zint t = 0; t < p; t++)
      if (peval(g, t, p) == 0) {
        theta = t;
        break;
      }
    if (theta < 0) throw std::logic_error("tate: cubic gcd rootless");
  } else {
    // Non-linear gcd for p >= 5 is a perfect square (T - theta)^2.
    theta = mod_p(-g[1] * inv_mod(2, p), p);
  }
  int mult = 0;
  Poly cur = f;
  while (!cur.empty() && peval(cur, theta, p) == 0) {
    cur = pdeflate(cur, theta, p);
    mult++;
  }
  if (mult < 2) throw std::logic_error("tate: repeated root lost");
  return {mult, theta};
}

}  // namespace

Zint model_discriminant(const std::array<Zint, 5>& a) {
  W w{a[0], a[1], a[2], a[3], a[4]};
  return w_disc(w);
}

mpq_class j_invariant(const std::array<Zint, 5>& a) {
  W w{a[0], a[1], a[2], a[3], a[4]};
  Zint c4 = w_c4(w), d = w_disc(w);
  if (d == 0) throw std::invalid_argument("j_invariant: singular model");
  mpq_class j(c4 * c4 * c4, d);
  j.canonicalize();
  return j;
}

LocalData tate_local(std::array<Zint, 5> a, const Zint& p) {
  if (!is_prime(p)) throw std::invalid_argument("tate_local: p not prime");
  W w{a[0], a[1], a[2], a[3], a[4]};
  if (w_disc(w) == 0) throw std::invalid_argument("tate_local: singular model");

  for (;;) {
    long n = vz(w_disc(w), p);
    if (n == 0) return {"I0", 0, 0};
    if (vz(w_c4(w), p) == 0) return {"I" + std::to_string(n), 1, n};
    move_singular_point(w, p);
    if (vz(w.a6, p) < 2) return {"II", n, n};
    if (vz(w_b8(w), p) < 3) return {"III", n - 1, n};
    if (vz(w_b6(w), p) < 3) return {"IV", n - 2, n};

    // Arrange v(a1) >= 1, v(a2) >= 1, v(a3) >= 2, v(a4) >= 2, v(a6) >= 3.
    if (p == 2) {
      if (mod_p(w.a2, 2) == 1) translate(w, 0, 1, 0);
      if (vz(w.a6, 2) == 2) translate(w, 0, 0, 2);
    } else {
      translate(w, 0, mod_p(-w.a1 * inv_mod(2, p), p), 0);
      Zint p2 = p * p;
      translate(w, 0, 0, mod_p(-w.a3 * inv_mod(2, p2), p2));
    }
    if (!(vz(w.a1, p) >= 1 && vz(w.a2, p) >= 1 && vz(w.a3, p) >= 2 &&
          vz(w.a4, p) >= 2 && vz(w.a6, p) >= 3))
      throw std::logic_error("tate: step-7 normalization failed");

    Zint p2 = p * p;
    auto shape = cubic_shape(exact_div(w.a2, p), exact_div(w.a4, p2),
                             exact_div(w.a6, p2 * p), p);
    if (shape.mult == 1) return {"I0*", n - 4, n};

    if (shape.mult == 2) {
      translate(w, p * shape.theta, 0, 0);
      Zint mx = p2, my = p2;
      long m = 1;
      for (;;) {
        Zint b = exact_div(w.a3, my), d = exact_div(w.a6, mx * my);
        if (auto y0 = double_root_y(b, d, p)) {
          translate(w, 0, 0, my * *y0);
          my *= p;
          m++;
        } else {
          return {"I" + std::to_string(m) + "*", n - 4 - m, n};
        }
        Zint al = exact_div(w.a2, p), be = exact_div(w.a4, p * mx),
             ga = exact_div(w.a6, mx * my);
        if (auto x0 = double_root_x(al, be, ga, p)) {
          translate(w, mx * *x0, 0, 0);
          mx *= p;
          m++;
        } else {
          return {"I" + std::to_string(m) + "*", n - 4 - m, n};
        }
      }
    }

    // Triple root.
    translate(w, p * shape.theta, 0, 0);
    {
      Zint b = exact_div(w.a3, p2), d = exact_div(w.a6, p2 * p2);
      auto y0 = double_root_y(b, d, p);
      if (!y0) return {"IV*", n - 6, n};
      translate(w, 0, 0, p2 * *y0);
    }
    if (vz(w.a4, p) < 4) return {"III*", n - 7, n};
    if (vz(w.a6, p) < 6) return {"II*", n - 8, n};
    rescale(w, p);
  }
}

Zint conductor_via_tate(const std::array<Zint, 5>& a) {
  Zint d = model_discriminant(a);
  if (d == 0) throw std::invalid_argument("conductor: singular model");
  Zint n = 1;
  for (auto& [p, e] : factor(d))
    n *= pow_z(p, static_cast<unsigned long>(tate_local(a, p).f));
  return n;
}

// --- model normalization ----------------------------------------------------

namespace {

std::array<Zint, 5> pair_model(const Zint& A, const Zint& B) {
  return {0, B - A, 0, -A * B, 0};
}

}  // namespace

FreyNormalization to_frey_model(const Zint& A_in, const Zint& B_in) {
  if (A_in * B_in * (A_in + B_in) == 0)
    throw std::invalid_argument("to_frey_model: A B (A+B) = 0");
  Zint A = A_in, B = B_in;
  std::string audit;

  Zint g = gcd(A, B);
  Zint u = 1;
  for (auto& [p, e] : factor(g)) u *= pow_z(p, static_cast<unsigned long>(e / 2));
  if (u > 1) {
    A /= u * u;
    B /= u * u;
    audit += "stripped square factor u^2 with u=" + u.get_str() + "; ";
  }

  Zint d = gcd(A, B);  // square-free by construction
  for (auto& [p, e] : factor(d))
    if (p != 2)
      throw std::invalid_argument(
          "to_frey_model: coefficients share the odd prime " + p.get_str());
  if (d == 2) {
    long e2 = tate_local(pair_model(A, B), 2).f;
    return TwistReport{2, e2, audit + "gcd 2 remains: model is the quadratic twist by 2 of a class member"};
  }

  // gcd 1: exactly one of A, B, A+B is even; six root orderings, two of
  // which put the even value in the second slot.
  const std::array<std::pair<Zint, Zint>, 6> ords{{{A, B},
                                                   {-B, -A},
                                                   {-A, A + B},
                                                   {-A - B, A},
                                                   {B, -A - B},
                                                   {A + B, -B}}};
  for (std::size_t i = 0; i < ords.size(); i++) {
    const auto& [al, be] = ords[i];
    if (be % 2 != 0) continue;
    if (mod4(al) != 3) continue;
    return FreyModel{FreyCurve(al, be),
                     audit + "root ordering #" + std::to_string(i)};
  }
  long e2 = tate_local(pair_model(A, B), 2).f;
  return TwistReport{-1, e2, audit + "even slot is 0 mod 4 with odd slots 1 mod 4: quadratic twist by -1"};
}

}  // namespace af
