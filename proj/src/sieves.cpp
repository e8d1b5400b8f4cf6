#include "af/sieves.hpp"

#include <algorithm>

namespace af {

std::string to_string(CertKind k) {
  switch (k) {
    case CertKind::Mod3Sign: return "mod3-sign";
    case CertKind::PlusMinusModN: return "pm-mod-n";
    case CertKind::FourNSieve: return "4n";
    case CertKind::TwoPrime: return "two-prime";
    case CertKind::Sign2Adic: return "sign-2adic";
  }
  return "?";
}

std::string Certificate::rule_id() const {
  std::string id = "sieve/" + to_string(kind);
  if (derived) id += " (derived)";
  return id;
}

namespace {

bool all_primes_1_mod(const SSet& s, long m) {
  for (const Zint& p : s.primes())
    if (p % m != 1) return false;
  return true;
}

bool all_odd_primes_1_mod(const SSet& s, long m) {
  for (const Zint& p : s.primes())
    if (p != 2 && p % m != 1) return false;
  return true;
}

bool all_primes_pm1_mod(const SSet& s, long n) {
  for (const Zint& p : s.primes()) {
    Zint r = p % n;
    if (r != 1 && r != n - 1) return false;
  }
  return true;
}

bool pm_safe_modulus(long n) {
  return n >= 3 && 14 % n != 0 && 16 % n != 0 && 18 % n != 0;
}

}  // namespace

std::optional<Certificate> make_mod3_sign(const SUnitEq& eq) {
  if (eq.r < 2 || eq.r % 2 != 0) return std::nullopt;
  if (eq.s.contains_two()) return std::nullopt;
  if (!all_primes_1_mod(eq.s, 3)) return std::nullopt;
  Certificate c;
  c.kind = CertKind::Mod3Sign;
  c.target = eq;
  c.steps = {
      "every prime of {" + eq.s.str() + "} is 1 mod 3, so coordinates are S-units congruent to their sign mod 3",
      "2^" + std::to_string(eq.r) + " is 1 mod 3 (even exponent), so the zero sum forces x, y, z to share one sign mod 3",
      "three same-sign nonzero terms cannot sum to zero over Z"};
  return c;
}

std::optional<Certificate> make_pm_mod_n(const SUnitEq& eq, long n) {
  if (eq.r != 4) return std::nullopt;
  if (eq.s.contains_two()) return std::nullopt;
  if (!pm_safe_modulus(n)) return std::nullopt;
  if (!all_primes_pm1_mod(eq.s, n)) return std::nullopt;
  Certificate c;
  c.kind = CertKind::PlusMinusModN;
  c.target = eq;
  c.n = n;
  c.steps = {
      "every prime of {" + eq.s.str() + "} is ±1 mod " + std::to_string(n) + ", so each coordinate is ±1 mod " + std::to_string(n),
      "16x + y + z mod " + std::to_string(n) + " therefore lies in {±14, ±16, ±18}",
      std::to_string(n) + " divides none of 14, 16, 18, so the sum is never 0"};
  return c;
}

std::optional<Certificate> make_four_n(const SUnitEq& eq, long n) {
  if (eq.r < 1) return std::nullopt;
  if (!eq.s.contains_two()) return std::nullopt;
  if (n < 3 || n % 2 == 0) return std::nullopt;
  if (!all_odd_primes_1_mod(eq.s, 4 * n)) return std::nullopt;
  Certificate c;
  c.kind = CertKind::FourNSieve;
  c.target = eq;
  c.n = n;
  c.steps = {
      "2 is in S, so y and z are odd and x is even: the x-term carries 2^(r+v) with v >= 1",
      "odd parts of all coordinates are products of primes 1 mod " + std::to_string(4 * n) + ", hence ±1 mod " + std::to_string(4 * n),
      "mixed signs on y, z: mod " + std::to_string(n) + " the sum reduces to a power of 2, never 0 for odd n >= 3",
      "equal signs on y, z: y + z is ±2 mod 4 while the x-term is 0 mod 4"};
  return c;
}

namespace {

bool two_prime_case(int cs, const Zint& q, const Zint& l) {
  switch (cs) {
    case 1:
      return q % 8 == 3 && l % 8 == 5 && q != 3 && q % 3 != l % 3;
    case 2:
      return q % 24 == 11 && l % 24 == 5 && kronecker_symbol(q, l) == -1;
    case 3:
      return (q % 8 == 3 || q % 8 == 5) && l % 24 == 23 && (l + 1) % q != 0 &&
             !is_mersenne_prime(l);
    default:
      return false;
  }
}

bool two_prime_excluded(const Zint& q, const Zint& l) {
  Zint lo = std::min(q, l), hi = std::max(q, l);
  return lo == 3 && (hi == 5 || hi == 7 || hi == 17);
}

}  // namespace

std::optional<Certificate> make_two_prime(const SUnitEq& eq) {
  if (eq.r != 4) return std::nullopt;
  SSet odd = eq.s.without_two();
  if (odd.size() != 2) return std::nullopt;
  Zint p1 = odd.primes()[0], p2 = odd.primes()[1];
  for (auto [q, l] : {std::pair{p1, p2}, std::pair{p2, p1}}) {
    if (two_prime_excluded(q, l)) continue;
    for (int cs : {1, 2, 3}) {
      if (!two_prime_case(cs, q, l)) continue;
      Certificate c;
  c.kind = CertKind::TwoPrime;
  c.target = eq;
      c.tp_case = cs;
      c.q = q;
      c.l = l;
      c.steps = {
          "S consists of the odd primes " + q.get_str() + ", " + l.get_str() + (eq.s.contains_two() ? " together with 2" : ""),
          "case " + std::to_string(cs) + " congruence conditions hold for (q, l) = (" + q.get_str() + ", " + l.get_str() + ")",
          "each coordinate shape 16x + y + z = 0 with x, y, z supported on {2, q, l} reduces to one of four two-prime power families",
          "the case congruences exclude every family solution, and (q, l) is outside the finite exception list"};
      return c;
    }
  }
  return std::nullopt;
}

std::optional<Certificate> make_sign_2adic(const SUnitEq& eq) {
  if (eq.r < 2) return std::nullopt;
  if (!all_odd_primes_1_mod(eq.s, 12)) return std::nullopt;
  Certificate c;
  c.kind = CertKind::Sign2Adic;
  c.target = eq;
  c.derived = true;
  c.steps = {
      "derived sieve, outside the strict generator set",
      "odd parts of coordinates are products of primes 1 mod 12, hence ±1 mod 12",
      "mod 3 the zero sum forces y and z to share a sign (else 3 divides a power of 2)",
      "mod 4 the same-sign branch fails: y + z is ±2 while 2^r x is 0 (r >= 2)"};
  return c;
}

bool conditions_hold(const Certificate& c) {
  switch (c.kind) {
    case CertKind::Mod3Sign:
      return c.target.r >= 2 && c.target.r % 2 == 0 &&
             !c.target.s.contains_two() && all_primes_1_mod(c.target.s, 3);
    case CertKind::PlusMinusModN:
      return c.target.r == 4 && !c.target.s.contains_two() &&
             pm_safe_modulus(c.n) && all_primes_pm1_mod(c.target.s, c.n);
    case CertKind::FourNSieve:
      return c.target.r >= 1 && c.target.s.contains_two() && c.n >= 3 &&
             c.n % 2 == 1 && all_odd_primes_1_mod(c.target.s, 4 * c.n);
    case CertKind::TwoPrime: {
      if (c.target.r != 4) return false;
      SSet odd = c.target.s.without_two();
      if (odd.size() != 2) return false;
      if (!odd.contains(c.q) || !odd.contains(c.l) || c.q == c.l) return false;
      return !two_prime_excluded(c.q, c.l) &&
             two_prime_case(c.tp_case, c.q, c.l);
    }
    case CertKind::Sign2Adic:
      return c.derived && c.target.r >= 2 &&
             all_odd_primes_1_mod(c.target.s, 12);
  }
  return false;
}

std::vector<long> pm_modulus_scan(const SSet& s) {
  // Window from the contract is [3, 4*max(S)+1]. When S contains an odd
  // prime p0, any admissible n is at most max(S)+1: condition (a) needs some
  // prime ±1 mod n (so n <= p+1), and condition (b) needs 4n <= p0 - 1.
  // Scanning the smaller window returns the identical set.
  if (s.empty()) return {};
  Zint zmax = s.max_prime();
  bool has_odd = !s.without_two().empty();
  Zint zbound = has_odd ? Zint(zmax + 1) : Zint(4 * zmax + 1);
  long bound = zbound.fits_slong_p() ? zbound.get_si() : 0;
  std::vector<long> out;
  for (long n = 3; n <= bound; n++) {
    bool pm = pm_safe_modulus(n) && all_primes_pm1_mod(s, n);
    bool fourn = n % 2 == 1 && all_odd_primes_1_mod(s, 4 * n);
    if (pm || fourn) out.push_back(n);
  }
  return out;
}

std::optional<Certificate> certify(const SUnitEq& eq, Mode mode) {
  if (auto c = make_mod3_sign(eq)) return c;
  std::vector<long> ns = pm_modulus_scan(eq.s);
  for (long n : ns)
    if (auto c = make_pm_mod_n(eq, n)) return c;
  for (long n : ns)
    if (auto c = make_four_n(eq, n)) return c;
  if (auto c = make_two_prime(eq)) return c;
  if (mode == Mode::Extended)
    if (auto c = make_sign_2adic(eq)) return c;
  return std::nullopt;
}

bool check_certificate(const Certificate& c, const Point& pt) {
  return !is_proper_point(c.target, pt);
}

}  // namespace af
