#pragma once
// S-unit line equations 2^r X + Y + Z = 0 and bounded exhaustive enumeration
// of their proper points (the brute-force oracle the sieves are checked
// against).

#include <vector>

#include "af/ntkernel.hpp"
#include "af/terns.hpp"

namespace af {

// The equation 2^r X + Y + Z = 0 with solutions drawn from S-units.
struct SUnitEq {
  long r = 1;
  SSet s;
  bool operator==(const SUnitEq&) const = default;
  std::string str() const;
};

// A proper point (x, y, z): integers with 2^r x + y + z = 0, xyz != 0,
// rad(|xyz|) equal to S exactly, and the weighted coordinates
// (2^r x, y, z) pairwise coprime. The input need not be canonical; it is
// reduced to canonical form before testing.
bool is_proper_point(const SUnitEq& eq, const Point& pt);

struct EnumLimits {
  // Upper bound on candidate (x, y) pairs scanned; exceeding it throws
  // ResourceLimitError before any work is done.
  unsigned long long budget = 100'000'000ULL;
  // 0 = use hardware concurrency (clamped to [1, 8]).
  unsigned threads = 0;
};

// All proper points whose coordinates have every prime exponent at most
// exp_bound, canonicalized, sorted, deduplicated. Deterministic output.
std::vector<Point> enumerate_proper_points(const SUnitEq& eq, long exp_bound,
                                           const EnumLimits& lim = {});

}  // namespace af
