#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lapspec/polynomial.hpp"

using namespace lapspec;

static IntPoly poly(std::vector<long> c) {
  std::vector<mpz_class> v(c.begin(), c.end());
  return IntPoly(std::move(v));
}

// test-only oracle: expand a polynomial from its (rational) roots and count
// by direct comparison
static IntPoly from_roots(const std::vector<long>& roots) {
  std::vector<mpz_class> c{1};
  for (long r : roots) {
    std::vector<mpz_class> next(c.size() + 1, mpz_class(0));
    for (size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= c[i] * r;
    }
    c = std::move(next);
  }
  return IntPoly(std::move(c));
}

TEST_CASE("eval and derivative") {
  IntPoly p = poly({-6, 11, -6, 1});  // (x-1)(x-2)(x-3)
  CHECK(p.eval(mpq_class(1)) == 0);
  CHECK(p.eval(mpq_class(4)) == 6);
  CHECK(p.derivative() == poly({11, -12, 3}));
}

TEST_CASE("gcd and exact division") {
  IntPoly p = from_roots({1, 1, 2});
  IntPoly g = poly_gcd(p, p.derivative());
  CHECK(g == poly({-1, 1}));  // x - 1
  CHECK(exact_div(p, g) == from_roots({1, 2}));
  CHECK_THROWS(exact_div(poly({1, 1}), poly({0, 1})));
}

TEST_CASE("multiplicity_at") {
  IntPoly p = poly({0, 9, -6, 1});  // x(x-3)^2
  CHECK(multiplicity_at(p, mpq_class(3)) == 2);
  CHECK(multiplicity_at(p, mpq_class(0)) == 1);
  CHECK(multiplicity_at(p, mpq_class(1)) == 0);
  // rational root: (2x-1)^3
  IntPoly q = poly({-1, 6, -12, 8});
  CHECK(multiplicity_at(q, mpq_class(1, 2)) == 3);
}

TEST_CASE("count_roots at rational thresholds, hand cases") {
  RootCounter k3(poly({0, 9, -6, 1}));  // x(x-3)^2, spectrum of K3
  CHECK(k3.count_at(mpq_class(3)) == 2);
  RootCounter k2(poly({0, -2, 1}));  // x^2-2x
  CHECK(k2.count_geq(mpq_class(1)) == 1);
  RootCounter z(poly({0, 0, 0, 1}));  // x^3
  CHECK(z.count_geq(mpq_class(0)) == 3);
  CHECK(z.count_above(mpq_class(0)) == 0);
}

TEST_CASE("counts against brute-force integer-root oracle") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    int deg = 1 + static_cast<int>(rng() % 7);
    std::vector<long> roots(deg);
    for (auto& r : roots) r = static_cast<long>(rng() % 9) - 4;
    IntPoly p = from_roots(roots);
    RootCounter rc(p);
    long q_num = static_cast<long>(rng() % 19) - 9;
    long q_den = 1 + static_cast<long>(rng() % 3);
    mpq_class q(q_num, q_den);
    q.canonicalize();
    int above = 0, at = 0, below = 0;
    for (long r : roots) {
      if (mpq_class(r) > q) ++above;
      else if (mpq_class(r) == q) ++at;
      else ++below;
    }
    CHECK(rc.count_above(q) == above);
    CHECK(rc.count_at(q) == at);
    CHECK(rc.count_below(q) == below);
    CHECK(rc.count_geq(q) == above + at);
    CHECK(rc.count_leq(q) == at + below);
  }
}

TEST_CASE("interval counts against oracle") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    int deg = 1 + static_cast<int>(rng() % 6);
    std::vector<long> roots(deg);
    for (auto& r : roots) r = static_cast<long>(rng() % 7) - 3;
    RootCounter rc(from_roots(roots));
    long a = static_cast<long>(rng() % 9) - 4;
    long b = a + static_cast<long>(rng() % 5);
    for (bool cl : {false, true})
      for (bool ch : {false, true}) {
        int want = 0;
        for (long r : roots) {
          bool in = (r > a || (cl && r == a)) && (r < b || (ch && r == b));
          if (in) ++want;
        }
        CHECK(rc.count_interval(mpq_class(a), mpq_class(b), cl, ch) == want);
      }
  }
}

TEST_CASE("negative leading coefficient") {
  // -(x-1)(x-2) = -x^2+3x-2
  RootCounter rc(poly({-2, 3, -1}));
  CHECK(rc.count_above(mpq_class(0)) == 2);
  CHECK(rc.count_above(mpq_class(3, 2)) == 1);
  CHECK(rc.count_at(mpq_class(2)) == 1);
}
