#include "af/sunit.hpp"

#include <algorithm>
#include <thread>

namespace af {

std::string SUnitEq::str() const {
  return "2^" + std::to_string(r) + " X + Y + Z = 0 over {" + s.str() + "}";
}

bool is_proper_point(const SUnitEq& eq, const Point& pt) {
  if (pt.x == 0 || pt.y == 0 || pt.z == 0) return false;
  Point c = canonical(pt);
  Zint w = pow_z(2, static_cast<unsigned long>(eq.r));
  if (w * c.x + c.y + c.z != 0) return false;
  if (!eq.s.rad_equals(c.x * c.y * c.z)) return false;
  Zint wx = w * c.x;
  return gcd(wx, c.y) == 1 && gcd(wx, c.z) == 1 && gcd(c.y, c.z) == 1;
}

namespace {

// All ∏ p^{e_p} with 0 <= e_p <= bound, ascending.
std::vector<Zint> s_unit_magnitudes(const SSet& s, long bound) {
  std::vector<Zint> vals{1};
  for (const Zint& p : s.primes()) {
    std::vector<Zint> next;
    next.reserve(vals.size() * (bound + 1));
    for (const Zint& v : vals) {
      Zint acc = v;
      next.push_back(acc);
      for (long e = 1; e <= bound; e++) {
        acc *= p;
        next.push_back(acc);
      }
    }
    vals = std::move(next);
  }
  std::sort(vals.begin(), vals.end());
  return vals;
}

// |n| an S-unit with every prime exponent <= bound?
bool bounded_s_unit(const Zint& n, const SSet& s, long bound) {
  Zint m = abs(n);
  for (const Zint& p : s.primes()) {
    Zint q;
    long e = static_cast<long>(
        mpz_remove(q.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t()));
    if (e > bound) return false;
    m = q;
  }
  return m == 1;
}

}  // namespace

std::vector<Point> enumerate_proper_points(const SUnitEq& eq, long exp_bound,
                                           const EnumLimits& lim) {
  if (eq.r < 0) throw std::invalid_argument("enumerate: r < 0");
  if (exp_bound < 0) throw std::invalid_argument("enumerate: exp_bound < 0");

  // Lattice size check before any allocation.
  Zint m = 1;
  for (std::size_t i = 0; i < eq.s.size(); i++) m *= exp_bound + 1;
  Zint pairs = 4 * m * m;
  if (pairs > static_cast<unsigned long>(lim.budget))
    throw ResourceLimitError("enumerate: " + pairs.get_str() +
                             " candidate pairs exceed budget " +
                             std::to_string(lim.budget));

  std::vector<Zint> mags = s_unit_magnitudes(eq.s, exp_bound);
  std::vector<Zint> xs;
  xs.reserve(2 * mags.size());
  for (const Zint& v : mags) {
    xs.push_back(v);
    xs.push_back(-v);
  }
  const Zint w = pow_z(2, static_cast<unsigned long>(eq.r));

  unsigned nthreads = lim.threads;
  if (nthreads == 0)
    nthreads = std::clamp(std::thread::hardware_concurrency(), 1u, 8u);
  nthreads = std::min<unsigned>(nthreads, xs.size());

  std::vector<std::vector<Point>> found(nthreads);
  auto work = [&](unsigned tid) {
    for (std::size_t i = tid; i < xs.size(); i += nthreads) {
      Zint wx = w * xs[i];
      for (const Zint& ym : mags)
        for (int sy : {1, -1}) {
          Zint y = sy * ym;
          Zint z = -(wx + y);
          if (z == 0) continue;
          if (!bounded_s_unit(z, eq.s, exp_bound)) continue;
          Point pt{xs[i], y, z};
          if (is_proper_point(eq, pt)) found[tid].push_back(canonical(pt));
        }
    }
  };

  std::vector<std::thread> pool;
  for (unsigned tgt = 1; tgt < nthreads; tgt++) pool.emplace_back(work, tgt);
  if (nthreads > 0) work(0);
  for (auto& th : pool) th.join();

  std::vector<Point> out;
  for (auto& part : found)
    out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace af
