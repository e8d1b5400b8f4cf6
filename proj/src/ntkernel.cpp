#include "af/ntkernel.hpp"

#include <algorithm>
#include <sstream>

namespace af {

Zint pow_z(const Zint& base, unsigned long e) {
  Zint r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

long valuation(const Zint& n, const Zint& p) {
  if (n == 0) throw std::invalid_argument("valuation: n == 0");
  if (p < 2) throw std::invalid_argument("valuation: p < 2");
  Zint q;
  return static_cast<long>(
      mpz_remove(q.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

long val2(const Zint& n) {
  if (n == 0) throw std::invalid_argument("val2: n == 0");
  return static_cast<long>(mpz_scan1(n.get_mpz_t(), 0));
}

// --- primality ------------------------------------------------------------

namespace {

// The first 13 primes are a deterministic Miller-Rabin witness set for all
// n < 3317044064679887385961981 (> 2^64): Sorenson & Webster's computation
// shows that bound is the smallest strong pseudoprime to all of them.
const unsigned long kWitnesses[] = {2,  3,  5,  7,  11, 13, 17,
                                    19, 23, 29, 31, 37, 41};

const Zint& deterministic_bound() {
  static const Zint b("3317044064679887385961981");
  return b;
}

bool miller_rabin_witness(const Zint& n, const Zint& a, const Zint& d,
                          long s) {
  // Returns true if a proves n composite.
  Zint x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n - 1) return false;
  for (long i = 1; i < s; i++) {
    x = (x * x) % n;
    if (x == n - 1) return false;
  }
  return true;
}

bool miller_rabin_deterministic(const Zint& n) {
  // n odd, n >= 3.
  Zint d = n - 1;
  long s = val2(d);
  d >>= s;
  for (unsigned long w : kWitnesses) {
    Zint a(w);
    if (a % n == 0) continue;
    if (miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

}  // namespace

PrimalityResult primality(const Zint& n) {
  Zint m = abs(n);
  if (m < 2) return {false, false};
  if (m == 2) return {true, false};
  if (m % 2 == 0) return {false, false};
  if (m < deterministic_bound()) return {miller_rabin_deterministic(m), false};
  int r = mpz_probab_prime_p(m.get_mpz_t(), 88);
  // 2 = proven prime, 1 = probably prime, 0 = proven composite.
  return {r > 0, r == 1};
}

bool is_prime(const Zint& n) { return primality(n).prime; }

bool is_mersenne_prime(const Zint& n) {
  if (n < 3) return false;
  Zint m = n + 1;
  if (mpz_popcount(m.get_mpz_t()) != 1) return false;  // n+1 = 2^k
  return is_prime(n);
}

// --- factorization --------------------------------------------------------

namespace {

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    const unsigned long limit = 1'000'000;
    std::vector<bool> sieve(limit + 1, true);
    std::vector<unsigned long> ps;
    for (unsigned long i = 2; i <= limit; i++) {
      if (!sieve[i]) continue;
      ps.push_back(i);
      for (unsigned long j = i * i; j <= limit; j += i) sieve[j] = false;
    }
    return ps;
  }();
  return primes;
}

Zint pollard_rho(const Zint& n) {
  // Brent's cycle variant; deterministic parameter schedule.
  for (unsigned long c = 1;; c++) {
    Zint x = 2, y = 2, d = 1, saved = 2;
    unsigned long power = 1, lam = 0;
    const unsigned long batch = 128;
    Zint prod = 1;
    while (d == 1) {
      if (lam == power) {
        saved = x;
        power *= 2;
        lam = 0;
      }
      unsigned long take = std::min(batch, power - lam);
      for (unsigned long i = 0; i < take; i++) {
        x = (x * x + c) % n;
        prod = prod * (saved - x) % n;
      }
      lam += take;
      d = gcd(prod, n);
      y = x;
      (void)y;
    }
    if (d != n && d != 0) return d;
    // Rare: batch gcd collapsed; retry with next c.
  }
}

void factor_into(const Zint& n, std::map<Zint, long>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out[n]++;
    return;
  }
  // Perfect-power peeling keeps rho inputs square-free-ish and fast.
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    for (unsigned long k = 2; k <= mpz_sizeinbase(n.get_mpz_t(), 2); k++) {
      Zint root;
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
        std::map<Zint, long> sub;
        factor_into(root, sub);
        for (auto& [p, e] : sub) out[p] += e * static_cast<long>(k);
        return;
      }
    }
  }
  Zint d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::map<Zint, long> factor(const Zint& n) {
  if (n == 0) throw std::invalid_argument("factor: n == 0");
  std::map<Zint, long> out;
  Zint m = abs(n);
  for (unsigned long p : small_primes()) {
    if (m == 1) break;
    if (Zint(p) * p > m) break;
    if (m % p == 0) {
      Zint q;
      long e = static_cast<long>(
          mpz_remove(q.get_mpz_t(), m.get_mpz_t(), Zint(p).get_mpz_t()));
      out[Zint(p)] = e;
      m = q;
    }
  }
  if (m > 1) factor_into(m, out);
  return out;
}

Zint rad(const Zint& n) {
  Zint r = 1;
  for (auto& [p, e] : factor(n)) r *= p;
  return r;
}

Zint rad_odd(const Zint& n) {
  Zint r = 1;
  for (auto& [p, e] : factor(n))
    if (p != 2) r *= p;
  return r;
}

// --- Kronecker symbol -----------------------------------------------------

int kronecker_symbol(Zint a, Zint n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  if (a % 2 == 0 && n % 2 == 0) return 0;
  int k = 1;
  // Strip the 2-part of n: (a|2) = 0, +1, -1 for a even, a = ±1 (8), a = ±3 (8).
  long v = 0;
  while (n % 2 == 0) {
    n /= 2;
    v++;
  }
  if (v % 2 == 1) {
    long a8 = mpz_class(a % 8).get_si();
    if (a8 < 0) a8 += 8;
    if (a8 == 3 || a8 == 5) k = -k;
  }
  if (n < 0) {
    n = -n;
    if (a < 0) k = -k;
  }
  // Now n odd positive: plain Jacobi loop with reciprocity.
  a %= n;
  if (a < 0) a += n;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      long n8 = mpz_class(n % 8).get_si();
      if (n8 == 3 || n8 == 5) k = -k;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) k = -k;
    a %= n;
  }
  return n == 1 ? k : 0;
}

// --- SSet -------------------------------------------------------------------

SSet::SSet(std::vector<Zint> primes) : ps_(std::move(primes)) {
  for (auto& p : ps_)
    if (p < 2 || !is_prime(p))
      throw std::invalid_argument("SSet: element is not prime: " + p.get_str());
  std::sort(ps_.begin(), ps_.end());
  ps_.erase(std::unique(ps_.begin(), ps_.end()), ps_.end());
}

SSet SSet::radical_of(const Zint& n) {
  std::vector<Zint> ps;
  for (auto& [p, e] : factor(n)) ps.push_back(p);
  return SSet(std::move(ps));
}

SSet SSet::odd_radical_of(const Zint& n) {
  std::vector<Zint> ps;
  for (auto& [p, e] : factor(n))
    if (p != 2) ps.push_back(p);
  return SSet(std::move(ps));
}

bool SSet::contains(const Zint& p) const {
  return std::binary_search(ps_.begin(), ps_.end(), p);
}

SSet SSet::with_two() const {
  if (contains_two()) return *this;
  auto ps = ps_;
  ps.push_back(2);
  return SSet(std::move(ps));
}

SSet SSet::without_two() const {
  std::vector<Zint> ps;
  for (auto& p : ps_)
    if (p != 2) ps.push_back(p);
  return SSet(std::move(ps));
}

Zint SSet::max_prime() const { return ps_.empty() ? Zint(0) : ps_.back(); }

std::string SSet::str() const {
  if (ps_.empty()) return "-";
  std::ostringstream os;
  for (std::size_t i = 0; i < ps_.size(); i++) {
    if (i) os << ",";
    os << ps_[i].get_str();
  }
  return os.str();
}

bool SSet::is_s_unit(const Zint& n) const {
  if (n == 0) return false;
  Zint m = abs(n);
  for (auto& p : ps_) {
    Zint q;
    mpz_remove(q.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    m = q;
  }
  return m == 1;
}

bool SSet::rad_equals(const Zint& n) const {
  if (n == 0) return false;
  Zint m = abs(n);
  for (auto& p : ps_) {
    if (m % p != 0) return false;
    Zint q;
    mpz_remove(q.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    m = q;
  }
  return m == 1;
}

}  // namespace af
