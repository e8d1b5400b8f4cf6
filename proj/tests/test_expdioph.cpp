#include "af/expdioph.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "doctest.h"

using af::classify_even_t3;
using af::ExpSolution;
using af::odd_t3_necessary;
using af::pow_z;
using af::search_even_t3;
using af::search_t3;
using af::two_power_perfect_power;
using af::Zint;

namespace {

std::vector<Zint> odd_primes_upto(long n) {
  std::vector<Zint> ps;
  for (long k = 3; k <= n; k += 2)
    if (af::is_prime(k)) ps.push_back(k);
  return ps;
}

}  // namespace

TEST_CASE("two_power_perfect_power matches an exhaustive root search") {
  for (long k = 1; k <= 64; k++) {
    for (int e : {1, -1}) {
      // Oracle: scan all exponents t >= 2 for an exact t-th root of 2^k - e.
      std::optional<std::pair<Zint, long>> want;
      Zint n = pow_z(2, static_cast<unsigned long>(k)) - e;
      for (long t = 2; t <= k + 1 && !want; t++) {
        Zint root;
        if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), t) != 0 && root >= 2)
          want = std::make_pair(root, t);
      }
      CAPTURE(k);
      CAPTURE(e);
      CHECK(two_power_perfect_power(k, e) == want);
    }
  }
  CHECK_THROWS_AS(two_power_perfect_power(3, 0), std::invalid_argument);
}

TEST_CASE("search_t3 frozen outputs and equation property") {
  std::vector<ExpSolution> w1{{3, 1, 2}};
  CHECK(search_t3(3, 5, -1, 1000000) == w1);

  std::vector<ExpSolution> w2{{5, 2, 2}};
  CHECK(search_t3(3, 17, -1, 1000000000) == w2);

  std::vector<ExpSolution> w3{{1, 1, 2}};
  CHECK(search_t3(5, 3, 1, 100000) == w3);

  for (const Zint& q : odd_primes_upto(20))
    for (const Zint& l : odd_primes_upto(20)) {
      if (q == l) continue;
      for (int eps : {1, -1})
        for (const ExpSolution& sol : search_t3(q, l, eps, Zint(100000000))) {
          Zint lhs = pow_z(2, static_cast<unsigned long>(sol.r)) *
                     pow_z(q, static_cast<unsigned long>(sol.s));
          Zint rhs = pow_z(l, static_cast<unsigned long>(sol.t)) + eps;
          CHECK(lhs == rhs);
          CHECK(lhs <= 100000000);
          CHECK(sol.r >= 1);
          CHECK(sol.s >= 1);
          CHECK(sol.t >= 1);
        }
    }

  CHECK_THROWS_AS(search_t3(9, 5, -1, 100), std::invalid_argument);
  CHECK_THROWS_AS(search_t3(5, 5, -1, 100), std::invalid_argument);
  CHECK_THROWS_AS(search_t3(2, 5, -1, 100), std::invalid_argument);
}

TEST_CASE("search_even_t3 halves the exponent of even-t hits") {
  std::vector<ExpSolution> w1{{3, 1, 1}};
  CHECK(search_even_t3(3, 5, -1, 1000000) == w1);
  std::vector<ExpSolution> w2{{5, 2, 1}};
  CHECK(search_even_t3(3, 17, -1, 1000000000) == w2);
  // Plus-branch family hits used by the residual sweep.
  std::vector<ExpSolution> w3{{1, 1, 1}};
  CHECK(search_even_t3(5, 3, 1, 100000) == w3);
  std::vector<ExpSolution> w4{{1, 1, 2}};
  CHECK(search_even_t3(41, 3, 1, 1000000) == w4);
  std::vector<ExpSolution> w5{{1, 1, 2}};
  CHECK(search_even_t3(313, 5, 1, 10000000) == w5);
  std::vector<ExpSolution> w6{{1, 2, 1}};
  CHECK(search_even_t3(5, 7, 1, 100000) == w6);
}

TEST_CASE("classify_even_t3 frozen solutions") {
  std::vector<ExpSolution> s35{{3, 1, 1}};  // 2^3 * 3 = 5^2 - 1
  CHECK(classify_even_t3(3, 5) == s35);
  std::vector<ExpSolution> s37{{4, 1, 1}};  // 2^4 * 3 = 7^2 - 1
  CHECK(classify_even_t3(3, 7) == s37);
  std::vector<ExpSolution> s53{{4, 1, 2}};  // 2^4 * 5 = 3^4 - 1
  CHECK(classify_even_t3(5, 3) == s53);
  std::vector<ExpSolution> s317{{5, 2, 1}};  // 2^5 * 3^2 = 17^2 - 1
  CHECK(classify_even_t3(3, 17) == s317);
  CHECK(classify_even_t3(5, 7).empty());
  CHECK(classify_even_t3(7, 5).empty());
  CHECK(classify_even_t3(17, 3).empty());
  CHECK_THROWS_AS(classify_even_t3(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(classify_even_t3(15, 7), std::invalid_argument);
}

TEST_CASE("classify_even_t3 agrees with the bounded search everywhere") {
  // Both directions: the bounded search cannot find anything the
  // classification misses (completeness), and every classified solution is
  // recovered by the search (soundness), across all prime pairs up to 50.
  Zint bound = pow_z(10, 12);
  for (const Zint& q : odd_primes_upto(50))
    for (const Zint& l : odd_primes_upto(50)) {
      if (q == l) continue;
      CAPTURE(q.get_str());
      CAPTURE(l.get_str());
      CHECK(classify_even_t3(q, l) == search_even_t3(q, l, -1, bound));
    }
}

TEST_CASE("classify_even_t3 finds exactly four solutions below 200") {
  long total = 0;
  std::vector<std::pair<Zint, Zint>> hits;
  for (const Zint& q : odd_primes_upto(199))
    for (const Zint& l : odd_primes_upto(199)) {
      if (q == l) continue;
      auto sols = classify_even_t3(q, l);
      total += static_cast<long>(sols.size());
      if (!sols.empty()) hits.emplace_back(q, l);
      for (const ExpSolution& sol : sols) {
        Zint lhs = pow_z(2, static_cast<unsigned long>(sol.r)) *
                   pow_z(q, static_cast<unsigned long>(sol.s));
        Zint rhs = pow_z(l, static_cast<unsigned long>(2 * sol.t)) - 1;
        CHECK(lhs == rhs);
      }
    }
  CHECK(total == 4);
  std::vector<std::pair<Zint, Zint>> want{{3, 5}, {3, 7}, {3, 17}, {5, 3}};
  std::sort(hits.begin(), hits.end());
  std::sort(want.begin(), want.end());
  CHECK(hits == want);
}

TEST_CASE("odd_t3_necessary direct values") {
  CHECK(odd_t3_necessary(3, 5, 1, 1, 1));    // 2 * 3 = 5 + 1
  CHECK(odd_t3_necessary(3, 11, 2, 1, 1));   // 4 * 3 = 11 + 1
  CHECK(odd_t3_necessary(13, 3, 1, 1, -1));  // 2 * 13 = 3^3 - 1
  CHECK(odd_t3_necessary(7, 3, 2, 1, 1));    // m = 0 allowed: 4 = 3 + 1
  CHECK_FALSE(odd_t3_necessary(7, 3, 1, 1, 1));   // v2(4) = 2 != 1
  CHECK_FALSE(odd_t3_necessary(5, 11, 2, 1, 1));  // cofactor 3 not a 5-power
  CHECK_FALSE(odd_t3_necessary(13, 3, 2, 1, -1));
  CHECK_THROWS_AS(odd_t3_necessary(3, 5, 0, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(odd_t3_necessary(3, 5, 1, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(odd_t3_necessary(3, 5, 1, 1, 2), std::invalid_argument);
}

TEST_CASE("odd_t3_necessary never rejects a realized odd-t solution") {
  for (const Zint& q : odd_primes_upto(60))
    for (const Zint& l : odd_primes_upto(60)) {
      if (q == l) continue;
      for (int eps : {1, -1})
        for (const ExpSolution& sol : search_t3(q, l, eps, Zint(10000000))) {
          if (sol.t % 2 == 0) continue;
          CAPTURE(q.get_str());
          CAPTURE(l.get_str());
          CAPTURE(eps);
          CHECK(odd_t3_necessary(q, l, sol.r, sol.s, eps));
        }
    }
}
