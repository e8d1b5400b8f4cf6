#pragma once
// Exponential Diophantine families over two odd primes q != l:
//   2^r q^s = l^t + eps   (r, s, t >= 1, eps = ±1)
// with a complete classification of the even-exponent minus branch
// (t even, eps = -1) and a necessary-condition filter for odd t.

#include <optional>
#include <vector>

#include "af/ntkernel.hpp"

namespace af {

struct ExpSolution {
  long r, s, t;
  bool operator==(const ExpSolution&) const = default;
  auto operator<=>(const ExpSolution&) const = default;
};

// Complete solutions of 2^k = m^t + e with m >= 2, t >= 2, e = ±1.
// By Mihailescu's theorem (Catalan's conjecture) 8 and 9 are the only
// consecutive perfect powers, so e = -1 admits exactly (k, m, t) = (3, 3, 2)
// and e = +1 admits none. This is the single external fact the even-branch
// classification rests on; the unit test re-verifies it exhaustively for
// k <= 64.
std::optional<std::pair<Zint, long>> two_power_perfect_power(long k, int e);

// All (r, s, t) with 2^r q^s = l^t + eps and both sides <= side_bound.
std::vector<ExpSolution> search_t3(const Zint& q, const Zint& l, int eps,
                                   const Zint& side_bound);

// Bounded search restricted to even t, reported as (r, s, t) for
// 2^r q^s = l^(2t) + eps.
std::vector<ExpSolution> search_even_t3(const Zint& q, const Zint& l, int eps,
                                        const Zint& side_bound);

// The complete (unbounded) solution set of 2^r q^s = l^(2t) - 1, derived by
// splitting l^(2t) - 1 = (l^t - 1)(l^t + 1): the factors share exactly one
// power of 2, so one of them is 2^(r-1) and the other 2 q^s, which pins
//   q^s = 2^(r-2) + eps  and  l^t = 2^(r-1) + eps   for a common eps = ±1.
// Each prime-power-versus-2-power equation is solved directly for exponent 1
// and through two_power_perfect_power for exponent >= 2.
std::vector<ExpSolution> classify_even_t3(const Zint& q, const Zint& l);

// Necessary condition for 2^r q^s = l^t + eps with t odd: the cofactor of
// l + eps in l^t + eps is odd, so v2(l + eps) = r exactly and
// (l + eps) / 2^r must be q^m for some 0 <= m <= s.
bool odd_t3_necessary(const Zint& q, const Zint& l, long r, long s, int eps);

}  // namespace af
