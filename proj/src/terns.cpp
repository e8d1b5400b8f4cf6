#include "af/terns.hpp"

#include <algorithm>

namespace af {

Point canonical(const Point& pt) {
  Zint g = gcd(gcd(pt.x, pt.y), pt.z);
  if (g == 0) return pt;
  Point r{pt.x / g, pt.y / g, pt.z / g};
  Zint first = r.x != 0 ? r.x : (r.y != 0 ? r.y : r.z);
  if (first < 0) {
    r.x = -r.x;
    r.y = -r.y;
    r.z = -r.z;
  }
  return r;
}

std::optional<std::string> validity_error(const Tern& t) {
  if (t.a == 0 || t.b == 0 || t.c == 0)
    return "coefficient product is zero";
  Zint g = gcd(gcd(t.a, t.b), t.c);
  if (g != 1) return "coefficients share the common factor " + g.get_str();
  return std::nullopt;
}

namespace {

std::array<long, 3> vals_at(const Tern& t, const Zint& q) {
  return {valuation(t.a, q), valuation(t.b, q), valuation(t.c, q)};
}

}  // namespace

bool valuation_condition(const Tern& t) {
  for (auto& [q, e] : factor(t.a * t.b * t.c)) {
    auto v = vals_at(t, q);
    bool two_equal = (v[0] == v[1]) || (v[0] == v[2]) || (v[1] == v[2]);
    bool all_equal = (v[0] == v[1]) && (v[1] == v[2]);
    if (!two_equal || all_equal) return false;
  }
  return true;
}

std::optional<Zint> descent_prime(const Tern& t) {
  for (auto& [q, e] : factor(t.a * t.b * t.c)) {
    auto v = vals_at(t, q);
    std::sort(v.begin(), v.end(), std::greater<>());
    if (v[0] > v[1] && v[1] >= 1) return q;
  }
  return std::nullopt;
}

Profile profile(const Tern& t) {
  if (auto err = validity_error(t))
    throw std::invalid_argument("profile: " + *err);

  const std::array<Zint, 3> cs{t.a, t.b, t.c};
  std::vector<int> odd_ix, even_ix;
  for (int i = 0; i < 3; i++)
    (cs[i] % 2 == 0 ? even_ix : odd_ix).push_back(i);

  Profile pr;
  pr.n2 = val2(t.a * t.b * t.c);
  pr.s = SSet::odd_radical_of(t.a * t.b * t.c);
  pr.valuation_ok = valuation_condition(t);
  pr.descent = descent_prime(t).has_value();

  // Order by (|v|, v); ties keep input position (stable sorts below).
  auto key_less = [&](int i, int j) {
    Zint ai = abs(cs[i]), aj = abs(cs[j]);
    if (ai != aj) return ai < aj;
    return cs[i] < cs[j];
  };

  switch (even_ix.size()) {
    case 0: {
      pr.parity = ParityClass::AllOdd;
      pr.m2 = 0;
      auto o = odd_ix;
      std::stable_sort(o.begin(), o.end(), key_less);
      // largest -> a, smallest -> b, middle -> c
      pr.perm = {o[2], o[0], o[1]};
      break;
    }
    case 1: {
      pr.parity = ParityClass::OneEven;
      pr.m2 = val2(cs[even_ix[0]]);
      auto o = odd_ix;
      std::stable_sort(o.begin(), o.end(), key_less);
      // larger odd -> a, smaller odd -> b, even -> c
      pr.perm = {o[1], o[0], even_ix[0]};
      break;
    }
    default: {
      pr.parity = ParityClass::TwoEven;
      auto e = even_ix;
      std::stable_sort(e.begin(), e.end(), key_less);
      pr.m2 = std::min(val2(cs[e[0]]), val2(cs[e[1]]));
      pr.perm = {odd_ix[0], e[0], e[1]};
      break;
    }
  }
  pr.normalized = {cs[pr.perm[0]], cs[pr.perm[1]], cs[pr.perm[2]]};
  return pr;
}

namespace {

// Solutions of u*s^p + w*t^p = 0 in coprime nonzero (s, t), p an odd prime,
// as the pair (s, t); empty if none.
std::optional<std::pair<Zint, Zint>> binary_root(const Zint& u, const Zint& w,
                                                 unsigned long p) {
  Zint g = gcd(u, w);
  Zint u1 = u / g, w1 = w / g;
  Zint ru, rw;
  if (mpz_root(ru.get_mpz_t(), Zint(abs(u1)).get_mpz_t(), p) == 0)
    return std::nullopt;
  if (mpz_root(rw.get_mpz_t(), Zint(abs(w1)).get_mpz_t(), p) == 0)
    return std::nullopt;
  int su = sgn(u1), sw = sgn(w1);
  // u1*s^p = -w1*t^p with s = rw, t = -sign(u1*w1)*ru.
  Zint s = rw;
  Zint tt = Zint(-su * sw) * ru;
  return std::make_pair(s, tt);
}

}  // namespace

std::vector<Point> trivial_points(const Tern& t, unsigned long p) {
  if (p < 3 || !is_prime(Zint(p)))
    throw std::invalid_argument("trivial_points: exponent must be an odd prime");
  if (auto err = validity_error(t))
    throw std::invalid_argument("trivial_points: " + *err);

  std::vector<Point> out;
  if (auto r = binary_root(t.a, t.b, p))  // z = 0
    out.push_back(canonical({r->first, r->second, 0}));
  if (auto r = binary_root(t.a, t.c, p))  // y = 0
    out.push_back(canonical({r->first, 0, r->second}));
  if (auto r = binary_root(t.b, t.c, p))  // x = 0
    out.push_back(canonical({0, r->first, r->second}));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace af
