#pragma once
// From coefficient triple to curve and back to S-unit equations: the
// pairwise-gcd decomposition, the curve attached to a putative solution,
// level bookkeeping for the lowered residual representation, and the
// reduction of a triple to the S-unit obligations that settle it.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "af/frey.hpp"
#include "af/sunit.hpp"
#include "af/terns.hpp"

namespace af {

// Pairwise-gcd split of a valid triple: ta = gcd(b, c), tb = gcd(a, c),
// tc = gcd(a, b), all positive and pairwise coprime, with signed cofactors
// a = tb tc ap, b = ta tc bp, c = ta tb cp (exact for primitive triples).
struct TDecomp {
  Zint ta, tb, tc;
  Zint ap, bp, cp;
  bool operator==(const TDecomp&) const = default;
};

TDecomp t_decompose(const Tern& t);

// The curve y^2 = x (x - A)(x + B) attached to a nonzero solution (x, y, z)
// of a x^p + b y^p + c z^p = 0. Dividing the equation by ta tb tc splits it
// into three pairwise-coprime integer terms summing to zero; exactly one is
// even and becomes B, and a global sign is chosen to make A = 3 mod 4 (scan
// order: sign +1 then -1, odd terms in slot order; the first hit wins).
struct FreyAssembly {
  TDecomp dec;
  std::array<Zint, 3> terms;  // (ap x^p / ta, bp y^p / tb, cp z^p / tc)
  Zint A, B;
  FreyCurve curve;
};

FreyAssembly build_frey(const Tern& t, const Point& pt, unsigned long p);

// 2-exponent of the level of the lowered representation attached to a
// putative solution. Determined by the 2-valuation of the even coefficient
// and, when that valuation is 1..3, by the parity of the variable it
// multiplies. The full level is 2^e times the odd radical of abc.
long serre_level_exp2(const Tern& t, const Point& pt);
Zint serre_level(const Tern& t, const Point& pt);

// Discriminant congruence v2(minimal discriminant) = -v2(abc) - 8 (mod p)
// for the curve attached to (x, y, z). Meaningful only when the pairwise
// gcds carry the factor 2 (two even coefficients); nullopt otherwise.
std::optional<bool> delta_min_check(const Tern& t, const Point& pt,
                                    unsigned long p);

// The S-unit equations whose emptiness settles a valuation-normalized
// triple. All of `primary` must be certified; `residual` equations remain
// assumed when the companion argument is only conditional, so certifying
// them upgrades the verdict from conditional to unconditional. An empty
// primary list (with empty rule) means the reduction has nothing to offer
// for this parity shape.
struct ObligationSet {
  std::vector<SUnitEq> primary;
  std::vector<SUnitEq> residual;
  std::string rule_id;
};

ObligationSet obligations(const Profile& pr);

}  // namespace af
