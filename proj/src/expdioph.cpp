#include "af/expdioph.hpp"

#include <algorithm>

namespace af {

namespace {

void check_pair(const Zint& q, const Zint& l) {
  if (q == l || q == 2 || l == 2 || !is_prime(q) || !is_prime(l))
    throw std::invalid_argument("expects two distinct odd primes");
}

void check_eps(int eps) {
  if (eps != 1 && eps != -1) throw std::invalid_argument("eps must be ±1");
}

}  // namespace

std::optional<std::pair<Zint, long>> two_power_perfect_power(long k, int e) {
  check_eps(e);
  if (e == -1 && k == 3) return std::make_pair(Zint(3), 2L);
  return std::nullopt;
}

std::vector<ExpSolution> search_t3(const Zint& q, const Zint& l, int eps,
                                   const Zint& side_bound) {
  check_pair(q, l);
  check_eps(eps);
  std::vector<ExpSolution> out;
  Zint lt = l;
  for (long t = 1; lt <= side_bound; t++, lt *= l) {
    Zint n = lt + eps;
    if (n < 2 || n > side_bound) continue;
    long r = val2(n);  // n even since l is odd
    Zint m = n >> static_cast<unsigned long>(r);
    Zint rest;
    long s = static_cast<long>(
        mpz_remove(rest.get_mpz_t(), m.get_mpz_t(), q.get_mpz_t()));
    if (s >= 1 && rest == 1) out.push_back({r, s, t});
  }
  return out;
}

std::vector<ExpSolution> search_even_t3(const Zint& q, const Zint& l, int eps,
                                        const Zint& side_bound) {
  std::vector<ExpSolution> out;
  for (const auto& sol : search_t3(q, l, eps, side_bound))
    if (sol.t % 2 == 0) out.push_back({sol.r, sol.s, sol.t / 2});
  return out;
}

std::vector<ExpSolution> classify_even_t3(const Zint& q, const Zint& l) {
  check_pair(q, l);
  std::vector<ExpSolution> out;
  for (int eps : {1, -1}) {
    // q-side: all (k, s) with q^s = 2^k + eps, k >= 1.
    std::vector<std::pair<long, long>> ks;
    Zint d = q - eps;
    if (d >= 2 && mpz_popcount(d.get_mpz_t()) == 1)
      ks.emplace_back(val2(d), 1L);  // s = 1
    // s >= 2 forces 2^k = q^s - eps; the only such relation has k = 3.
    if (auto pp = two_power_perfect_power(3, -eps); pp && pp->first == q)
      ks.emplace_back(3L, pp->second);
    for (auto [k, s] : ks) {
      if (k < 1) continue;
      // l-side: l^t = 2^(k+1) + eps for some t >= 1.
      Zint u = pow_z(2, static_cast<unsigned long>(k + 1)) + eps;
      long t = 0;
      if (u == l) t = 1;
      else if (auto pp = two_power_perfect_power(k + 1, -eps);
               pp && pp->first == l)
        t = pp->second;
      if (t >= 1) out.push_back({k + 2, s, t});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool odd_t3_necessary(const Zint& q, const Zint& l, long r, long s, int eps) {
  check_pair(q, l);
  check_eps(eps);
  if (r < 1 || s < 1) throw std::invalid_argument("r, s must be >= 1");
  Zint d = l + eps;
  if (d <= 0) return false;
  if (val2(d) != r) return false;
  Zint m = d >> static_cast<unsigned long>(r);
  Zint rest;
  long mm = static_cast<long>(
      mpz_remove(rest.get_mpz_t(), m.get_mpz_t(), q.get_mpz_t()));
  return rest == 1 && mm <= s;
}

}  // namespace af
