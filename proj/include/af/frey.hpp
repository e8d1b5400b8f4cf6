#pragma once
// Frey curves y^2 = x (x - A) (x + B), their conductors via a closed-form
// table, normalization of related models into the table class, and an
// independent implementation of Tate's algorithm as the authoritative local
// oracle the table is validated against.

#include <array>
#include <string>
#include <variant>

#include "af/ntkernel.hpp"

namespace af {

// Table class: gcd(A, B) = 1, A ≡ 3 mod 4, B even, A B (A + B) != 0.
class FreyCurve {
 public:
  FreyCurve(Zint A, Zint B);  // throws std::invalid_argument on violations
  const Zint& A() const { return A_; }
  const Zint& B() const { return B_; }
  // [a1, a2, a3, a4, a6] for y^2 = x^3 + (B - A) x^2 - A B x.
  std::array<Zint, 5> a_invariants() const;
  Zint discriminant() const;  // 16 A^2 B^2 (A + B)^2
  Zint c4() const;            // 16 (A^2 + A B + B^2)

 private:
  Zint A_, B_;
};

// Conductor exponent at 2 from the table keyed on v2(B):
// 1 -> 5, 2 or 3 -> 3, 4 -> 0, >= 5 -> 1.
long conductor_exponent_2(const FreyCurve& e);
// Odd conductor: the curve is semistable away from 2, so this is
// rad_odd(A B (A + B)).
Zint conductor_odd(const FreyCurve& e);
Zint conductor(const FreyCurve& e);

// --- model normalization ----------------------------------------------------

struct FreyModel {
  FreyCurve curve;
  std::string audit;  // ordering/scaling decisions taken
};

struct TwistReport {
  int twist;   // the quadratic twist (2 or -1) separating the model from the class
  long exp2;   // measured conductor exponent at 2 of the input model
  std::string audit;
};

using FreyNormalization = std::variant<FreyModel, TwistReport>;

// Accepts any y^2 = x (x - A) (x + B) whose coefficient gcd is a square or
// twice a square (after removing the square part, an odd shared prime is
// outside the class and throws). Root relabeling gives six (A, B) orderings;
// the ones with an even second slot are tried in a fixed order and the first
// with first slot ≡ 3 mod 4 wins. A leftover gcd of 2 reports a twist by 2;
// first slots stuck at 1 mod 4 report a twist by -1.
FreyNormalization to_frey_model(const Zint& A, const Zint& B);

// --- Tate's algorithm -------------------------------------------------------

struct LocalData {
  std::string kodaira;  // "I0", "I3", "II", "III", "IV", "I0*", "I2*", ...
  long f;               // conductor exponent at p
  long vdelta_min;      // v_p of the minimal discriminant
};

// Runs Tate's algorithm for [a1, a2, a3, a4, a6] at the prime p.
LocalData tate_local(std::array<Zint, 5> a, const Zint& p);

// Discriminant of a general Weierstrass model.
Zint model_discriminant(const std::array<Zint, 5>& a);
// j-invariant c4^3 / disc as an exact rational.
mpq_class j_invariant(const std::array<Zint, 5>& a);
// Product of p^{f_p} over primes dividing the discriminant.
Zint conductor_via_tate(const std::array<Zint, 5>& a);

}  // namespace af
