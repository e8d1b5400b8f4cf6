#pragma once
// Congruence certificates: machine-checkable witnesses that an S-unit line
// equation 2^r X + Y + Z = 0 has no proper points, together with their
// generators and an audit check.

#include <optional>
#include <string>
#include <vector>

#include "af/sunit.hpp"

namespace af {

enum class CertKind { Mod3Sign, PlusMinusModN, FourNSieve, TwoPrime, Sign2Adic };

enum class Mode { Strict, Extended };

std::string to_string(CertKind k);

struct Certificate {
  CertKind kind;
  SUnitEq target;
  long n = 0;        // modulus parameter (PlusMinusModN: n, FourNSieve: 4n's n)
  int tp_case = 0;   // TwoPrime: 1, 2 or 3
  Zint q = 0, l = 0; // TwoPrime: the ordered prime pair the case fired on
  bool derived = false;  // true for kinds outside the strict set
  std::vector<std::string> steps;  // human-readable congruence narrative

  std::string rule_id() const;  // stable id used in verdict traces
  bool operator==(const Certificate&) const = default;
};

// Re-validate the arithmetic side conditions a certificate claims.
bool conditions_hold(const Certificate& c);

// --- generators (nullopt when the side conditions fail) -------------------

// Even r >= 2, 2 not in S, every prime 1 mod 3: coordinates are ±1 mod 3, a
// zero sum forces a common sign, and same-sign terms cannot cancel in Z.
std::optional<Certificate> make_mod3_sign(const SUnitEq& eq);

// r = 4, 2 not in S, every prime ±1 mod n with n >= 3 dividing none of
// 14, 16, 18: the residue 16(±1)+(±1)+(±1) is never 0 mod n.
std::optional<Certificate> make_pm_mod_n(const SUnitEq& eq, long n);

// 2 in S, r >= 1, n odd >= 3, every odd prime of S congruent 1 mod 4n: the
// even coordinate folds into the 2-power; mixed signs force n to divide a
// power of 2, equal signs contradict mod 4.
std::optional<Certificate> make_four_n(const SUnitEq& eq, long n);

// r = 4 and S = {q, l} or {2, q, l}: one of three congruence cases on the
// ordered pair (tried ascending, then swapped) excludes all coordinate
// shapes. A finite exception list is re-checked explicitly.
std::optional<Certificate> make_two_prime(const SUnitEq& eq);

// Derived kind (Extended mode only): r >= 2, every odd prime 1 mod 12;
// mod 3 forces a common sign, mod 4 kills the same-sign branch.
std::optional<Certificate> make_sign_2adic(const SUnitEq& eq);

// Moduli n in the window [3, 4*max(S)+1] admissible for at least one of the
// two congruence sieves: (a) every prime ±1 mod n and n divides none of
// 14, 16, 18; (b) n odd and every odd prime 1 mod 4n.
std::vector<long> pm_modulus_scan(const SSet& s);

// Generator cascade in fixed order: mod3-sign, pm-mod-n (smallest admissible
// n), 4n (smallest), two-prime, then (Extended only) sign-2adic.
std::optional<Certificate> certify(const SUnitEq& eq, Mode mode);

// Audit a certificate against a candidate point: true means the candidate is
// rejected (not a proper point of the target); false means the candidate is
// a genuine proper point and the certificate is unsound.
bool check_certificate(const Certificate& c, const Point& pt);

}  // namespace af
