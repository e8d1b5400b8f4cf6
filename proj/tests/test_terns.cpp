#include "af/terns.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "doctest.h"

using af::canonical;
using af::descent_prime;
using af::ParityClass;
using af::Point;
using af::pow_z;
using af::Profile;
using af::profile;
using af::SSet;
using af::Tern;
using af::trivial_points;
using af::validity_error;
using af::valuation_condition;
using af::Zint;

TEST_CASE("canonical reduces to a primitive, sign-fixed representative") {
  Point a{2, 4, 6}, a_want{1, 2, 3};
  CHECK(canonical(a) == a_want);
  Point b{-2, 4, -6}, b_want{1, -2, 3};
  CHECK(canonical(b) == b_want);
  Point c{0, -3, 9}, c_want{0, 1, -3};
  CHECK(canonical(c) == c_want);
  Point d{0, 0, -5}, d_want{0, 0, 1};
  CHECK(canonical(d) == d_want);
  Point zero{0, 0, 0};
  CHECK(canonical(zero) == zero);
  Point e{7, -7, 7}, e_want{1, -1, 1};
  CHECK(canonical(e) == e_want);
}

TEST_CASE("validity_error flags zero products and common factors") {
  Tern ok{3, 5, -8};
  CHECK_FALSE(validity_error(ok).has_value());
  Tern z{0, 1, 1};
  CHECK(validity_error(z).has_value());
  Tern shared{2, 4, 6};
  REQUIRE(validity_error(shared).has_value());
  CHECK(*validity_error(shared) == "coefficients share the common factor 2");
  Tern neg{-3, -6, -9};
  CHECK(validity_error(neg).has_value());
  Tern unit{1, 1, 1};
  CHECK_FALSE(validity_error(unit).has_value());
}

TEST_CASE("valuation_condition frozen examples") {
  CHECK(valuation_condition(Tern{1, 1, 2}));
  CHECK(valuation_condition(Tern{3, 5, -8}));
  CHECK(valuation_condition(Tern{15, 3, 16}));
  CHECK(valuation_condition(Tern{1, 1, 1}));  // vacuous: abc = 1
  CHECK(valuation_condition(Tern{12, 3, 5}));
  CHECK_FALSE(valuation_condition(Tern{1, 2, 4}));
  CHECK_FALSE(valuation_condition(Tern{9, 3, 2}));
}

TEST_CASE("descent_prime finds strictly dominated positive valuations") {
  CHECK(descent_prime(Tern{1, 2, 4}) == Zint(2));
  CHECK(descent_prime(Tern{9, 3, 2}) == Zint(3));
  CHECK_FALSE(descent_prime(Tern{3, 5, -8}).has_value());
  CHECK_FALSE(descent_prime(Tern{12, 3, 5}).has_value());
  CHECK_FALSE(descent_prime(Tern{1, 1, 1}).has_value());
}

TEST_CASE("descent is the negation of the valuation condition (primitive)") {
  // For primitive triples the sorted valuation pattern at each prime is
  // (n,0,0), (m,m,0), or (n,m,0) with n > m >= 1; the first two satisfy the
  // two-equal condition and only the third admits descent.
  for (long a = 1; a <= 12; a++)
    for (long b = -12; b <= 12; b++)
      for (long c = -12; c <= 12; c++) {
        Tern t{a, b, c};
        if (validity_error(t)) continue;
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(c);
        CHECK(descent_prime(t).has_value() == !valuation_condition(t));
      }
}

TEST_CASE("profile normal forms") {
  Profile p1 = profile(Tern{3, 5, -8});
  Tern n1{5, 3, -8};
  std::array<int, 3> perm1{1, 0, 2};
  CHECK(p1.parity == ParityClass::OneEven);
  CHECK(p1.n2 == 3);
  CHECK(p1.m2 == 3);
  CHECK(p1.s == SSet(std::vector<Zint>{3, 5}));
  CHECK(p1.normalized == n1);
  CHECK(p1.perm == perm1);
  CHECK(p1.valuation_ok);
  CHECK_FALSE(p1.descent);

  Profile p2 = profile(Tern{-8, 3, 5});
  std::array<int, 3> perm2{2, 1, 0};
  CHECK(p2.normalized == n1);
  CHECK(p2.perm == perm2);

  Profile p3 = profile(Tern{1, 1, 1});
  Tern n3{1, 1, 1};
  CHECK(p3.parity == ParityClass::AllOdd);
  CHECK(p3.n2 == 0);
  CHECK(p3.m2 == 0);
  CHECK(p3.s.empty());
  CHECK(p3.normalized == n3);

  Profile p4 = profile(Tern{13, 1, 8});
  Tern n4{13, 1, 8};
  CHECK(p4.parity == ParityClass::OneEven);
  CHECK(p4.m2 == 3);
  CHECK(p4.normalized == n4);

  Profile p5 = profile(Tern{1, 2, -2050});
  Tern n5{1, 2, -2050};
  CHECK(p5.parity == ParityClass::TwoEven);
  CHECK(p5.n2 == 2);
  CHECK(p5.m2 == 1);
  CHECK(p5.s == SSet(std::vector<Zint>{5, 41}));
  CHECK(p5.normalized == n5);

  Profile p6 = profile(Tern{7, 13, 16});
  Tern n6{13, 7, 16};
  CHECK(p6.normalized == n6);
  CHECK(p6.m2 == 4);
  CHECK(p6.n2 == 4);

  CHECK_THROWS_AS(profile(Tern{0, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(profile(Tern{2, 4, 6}), std::invalid_argument);
}

TEST_CASE("profile stable data is permutation- and sign-invariant") {
  std::vector<Tern> base{{3, 5, -8},  {1, 1, 2},   {15, 3, 16}, {1, 2, -2050},
                         {13, 1, 8},  {7, 13, 16}, {1, -1, 2},  {9, 3, 2},
                         {1, 1, 1},   {5, -5, 4},  {45, 1, -2}, {1, 4, 4}};
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                           {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (const Tern& t : base) {
    Profile ref = profile(t);
    const Zint cs[3] = {t.a, t.b, t.c};
    for (auto& pm : perms) {
      for (int signs = 0; signs < 8; signs++) {
        Tern u{cs[pm[0]], cs[pm[1]], cs[pm[2]]};
        if (signs & 1) u.a = -u.a;
        if (signs & 2) u.b = -u.b;
        if (signs & 4) u.c = -u.c;
        Profile got = profile(u);
        CAPTURE(u.a);
        CAPTURE(u.b);
        CAPTURE(u.c);
        CHECK(got.parity == ref.parity);
        CHECK(got.n2 == ref.n2);
        CHECK(got.m2 == ref.m2);
        CHECK(got.s == ref.s);
        CHECK(got.valuation_ok == ref.valuation_ok);
        CHECK(got.descent == ref.descent);
        // Without sign flips the normalized triple itself is reproduced.
        if (signs == 0) CHECK(got.normalized == ref.normalized);
      }
    }
  }
}

TEST_CASE("profile permutation slots index the input") {
  for (long a : {3L, -15L}) {
    Tern t{a, 6, 35};
    Profile pr = profile(t);
    const Zint cs[3] = {t.a, t.b, t.c};
    Tern rebuilt{cs[pr.perm[0]], cs[pr.perm[1]], cs[pr.perm[2]]};
    CHECK(rebuilt == pr.normalized);
  }
}

TEST_CASE("trivial_points frozen sets") {
  std::vector<Point> w1{{0, 1, -1}, {1, -1, 0}, {1, 0, -1}};
  CHECK(trivial_points(Tern{1, 1, 1}, 3) == w1);
  CHECK(trivial_points(Tern{1, 1, 1}, 5) == w1);

  std::vector<Point> w2{{1, -1, 0}};
  CHECK(trivial_points(Tern{1, 1, -2}, 3) == w2);
  CHECK(trivial_points(Tern{1, 1, -2}, 5) == w2);

  std::vector<Point> w3{{2, 3, 0}};
  CHECK(trivial_points(Tern{27, -8, 5}, 3) == w3);

  std::vector<Point> w4{{2, -1, 0}};
  CHECK(trivial_points(Tern{1, 8, -9}, 3) == w4);

  CHECK(trivial_points(Tern{3, 5, -8}, 3).empty());

  std::vector<Point> w5{{2, 1, 0}};
  CHECK(trivial_points(Tern{1, -32, -27}, 5) == w5);

  CHECK_THROWS_AS(trivial_points(Tern{1, 1, 1}, 2), std::invalid_argument);
  CHECK_THROWS_AS(trivial_points(Tern{1, 1, 1}, 9), std::invalid_argument);
  CHECK_THROWS_AS(trivial_points(Tern{0, 1, 1}, 3), std::invalid_argument);
}

namespace {

// Independent oracle: scan all points with one zero coordinate and small
// entries. Complete for |coefficients| <= 9 and p = 3 because any exact
// p-th-root coordinate is bounded by 9^(1/3) < 3.
std::vector<Point> brute_trivial(const Tern& t, unsigned long p) {
  std::vector<Point> out;
  for (long x = -3; x <= 3; x++)
    for (long y = -3; y <= 3; y++)
      for (long z = -3; z <= 3; z++) {
        if (x == 0 && y == 0 && z == 0) continue;
        if (x != 0 && y != 0 && z != 0) continue;
        Zint v = t.a * pow_z(x, p) + t.b * pow_z(y, p) + t.c * pow_z(z, p);
        if (v != 0) continue;
        out.push_back(canonical(Point{x, y, z}));
      }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

TEST_CASE("trivial_points agrees with a brute-force sweep") {
  for (long a = 1; a <= 9; a++)
    for (long b = -9; b <= 9; b++)
      for (long c = -9; c <= 9; c++) {
        Tern t{a, b, c};
        if (validity_error(t)) continue;
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(c);
        CHECK(trivial_points(t, 3) == brute_trivial(t, 3));
      }
}

TEST_CASE("trivial_points returns canonical on-curve points") {
  std::vector<Tern> ts{{1, 1, 1}, {1, 8, -9}, {27, -8, 5}, {1, -32, -27}};
  for (const Tern& t : ts)
    for (unsigned long p : {3UL, 5UL, 7UL}) {
      for (const Point& pt : trivial_points(t, p)) {
        CHECK(pt.x * pt.y * pt.z == 0);
        CHECK(canonical(pt) == pt);
        CHECK(t.a * pow_z(pt.x, p) + t.b * pow_z(pt.y, p) +
                  t.c * pow_z(pt.z, p) ==
              0);
      }
    }
}
