#pragma once
// Arithmetic kernel: big integers, primality, factorization, radicals,
// Kronecker symbol, and validated prime sets.

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace af {

using Zint = mpz_class;

// Thrown when a search/enumeration would exceed its configured budget.
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- basic helpers --------------------------------------------------------

Zint pow_z(const Zint& base, unsigned long e);

// v_p(n) for n != 0, p >= 2. Throws std::invalid_argument on n == 0.
long valuation(const Zint& n, const Zint& p);

// Largest e with 2^e | n, n != 0.
long val2(const Zint& n);

// --- primality ------------------------------------------------------------

struct PrimalityResult {
  bool prime;
  bool probabilistic;  // true iff the answer used the probabilistic fallback
};

// Deterministic Miller-Rabin (fixed 13-witness set, exact for |n| below a
// published bound well past 2^64); above that, GMP's probabilistic test with
// 88 rounds, flagged in the result.
PrimalityResult primality(const Zint& n);
bool is_prime(const Zint& n);

// n is a Mersenne prime: n prime and n + 1 a power of two.
bool is_mersenne_prime(const Zint& n);

// --- factorization --------------------------------------------------------

// Factors |n| (n != 0) into prime -> exponent. Trial division to 10^6, then
// perfect-power peeling and Pollard rho (Brent) on what remains.
std::map<Zint, long> factor(const Zint& n);

// Product of the distinct primes dividing n (rad(±1) = 1). n != 0.
Zint rad(const Zint& n);
// Same, ignoring the prime 2.
Zint rad_odd(const Zint& n);

// --- Kronecker symbol -----------------------------------------------------

// Full Kronecker symbol (a|n), extending Jacobi/Legendre to all n.
int kronecker_symbol(Zint a, Zint n);

// --- prime sets -----------------------------------------------------------

// A finite set of distinct primes, kept sorted. Construction validates
// primality of every element.
class SSet {
 public:
  SSet() = default;
  explicit SSet(std::vector<Zint> primes);

  // Primes dividing n (n != 0).
  static SSet radical_of(const Zint& n);
  // Odd primes dividing n.
  static SSet odd_radical_of(const Zint& n);

  bool contains(const Zint& p) const;
  bool contains_two() const { return contains(2); }
  bool empty() const { return ps_.empty(); }
  std::size_t size() const { return ps_.size(); }
  const std::vector<Zint>& primes() const { return ps_; }

  SSet with_two() const;
  SSet without_two() const;
  // Largest element, or 0 when empty.
  Zint max_prime() const;

  // "3,5,7" or "-" when empty.
  std::string str() const;

  // True iff rad(|n|) divides the product of the set (n != 0).
  bool is_s_unit(const Zint& n) const;
  // True iff rad(|n|) equals the set exactly (n != 0).
  bool rad_equals(const Zint& n) const;

  bool operator==(const SSet&) const = default;

 private:
  std::vector<Zint> ps_;
};

}  // namespace af
