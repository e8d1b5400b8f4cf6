#pragma once
// Coefficient triples (a, b, c) for a x^p + b y^p + c z^p = 0: validity,
// valuation-pattern conditions, parity profiles, and trivial solutions.

#include <array>
#include <optional>
#include <vector>

#include "af/ntkernel.hpp"

namespace af {

struct Tern {
  Zint a, b, c;
  bool operator==(const Tern&) const = default;
};

// A projective solution candidate [x : y : z].
struct Point {
  Zint x, y, z;
  bool operator==(const Point&) const = default;
  bool operator<(const Point& o) const {
    if (x != o.x) return x < o.x;
    if (y != o.y) return y < o.y;
    return z < o.z;
  }
};

// Primitive representative with the first nonzero coordinate positive.
Point canonical(const Point& pt);

// Empty when the triple is usable; otherwise a reason (zero product or a
// common factor).
std::optional<std::string> validity_error(const Tern& t);

// Valuation-pattern condition: at every prime q | abc, exactly two of the
// three q-adic valuations coincide. For primitive triples this admits only
// the patterns (0,0,n) and (0,m,m).
bool valuation_condition(const Tern& t);

// A prime q whose sorted valuations satisfy v1 > v2 >= 1 supports an
// elementary q-adic descent: for large exponents the equation has only
// trivial solutions outright. Returns such a q if one exists.
std::optional<Zint> descent_prime(const Tern& t);

enum class ParityClass { AllOdd, OneEven, TwoEven };

// Deterministic normal form of a valid triple. The even coefficients move to
// the tail slots; odd slots are ordered by (|value|, value) with ties by
// input position. Stable data (parity class, 2-valuations, odd radical) is
// permutation- and sign-invariant.
struct Profile {
  ParityClass parity;
  long n2;    // v2(abc)
  long m2;    // OneEven: v2 of the even coefficient; TwoEven: shared v2
  SSet s;     // odd primes dividing abc
  std::array<int, 3> perm;  // normalized slot i holds input coefficient perm[i]
  Tern normalized;
  bool valuation_ok;   // valuation_condition(t)
  bool descent;        // descent_prime(t) nonempty
};

Profile profile(const Tern& t);

// Solutions with xyz = 0 for odd prime exponent p, as canonical projective
// points. There are finitely many, found by p-th-root extraction.
std::vector<Point> trivial_points(const Tern& t, unsigned long p);

}  // namespace af
