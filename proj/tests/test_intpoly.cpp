#include <cmath>
#include <numeric>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "coxpath/intpoly.hpp"
#include "doctest.h"

using namespace coxpath;

namespace {

IntPoly poly(std::vector<Int> c) { return IntPoly(std::move(c)); }

int phi_by_counting(int n) {
  int count = 0;
  for (int k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++count;
  return count;
}

/* |C_n(4cos^2(pi/n))| at 50 decimal digits.  The coefficients grow fast
 * enough that double Horner drowns the cancellation around n = 23 already;
 * the identity itself is only visible at higher precision. */
double residue_at_root(const IntPoly& c, int n) {
  using BigFloat = boost::multiprecision::cpp_bin_float_50;
  const BigFloat cosine = cos(acos(BigFloat(-1)) / n);
  const BigFloat root = 4 * cosine * cosine;
  BigFloat acc = 0;
  for (int k = c.degree(); k >= 0; --k) acc = acc * root + BigFloat(c.coeff(k));
  return abs(acc).convert_to<double>();
}

} // namespace

TEST_CASE("dense polynomials trim and compare") {
  CHECK(poly({}).is_zero());
  CHECK(poly({0, 0, 0}).is_zero());
  CHECK(poly({1, 2, 0}) == poly({1, 2}));
  CHECK(poly({1, 2}).degree() == 1);
  CHECK(poly({}).degree() == -1);
  CHECK(IntPoly::constant(7) == poly({7}));
  CHECK(IntPoly::monomial(3, 2) == poly({0, 0, 3}));
  CHECK(poly({1, 2}).coeff(5) == 0);
}

TEST_CASE("polynomial arithmetic") {
  const IntPoly a = poly({1, 1});       // t + 1
  const IntPoly b = poly({-1, 1});      // t - 1
  CHECK(a + b == poly({0, 2}));
  CHECK(a - a == IntPoly{});
  CHECK(a * b == poly({-1, 0, 1}));     // t^2 - 1
  CHECK(a * IntPoly{} == IntPoly{});

  SUBCASE("exact division inverts multiplication") {
    const IntPoly p = poly({2, -3, 1, 4});
    CHECK((p * a).div_exact(a) == p);
    CHECK((p * b).div_exact(p) == b);
  }
  SUBCASE("inexact division throws") {
    CHECK_THROWS_AS(poly({1, 0, 1}).div_exact(b), std::domain_error);
  }
}

TEST_CASE("euler_phi matches the gcd count") {
  for (int n = 1; n <= 200; ++n) CHECK(euler_phi(n) == phi_by_counting(n));
}

TEST_CASE("minimal polynomials of 4cos^2(pi/n), small n frozen") {
  CHECK(min_poly_4cos2(3) == poly({-1, 1}));
  CHECK(min_poly_4cos2(4) == poly({-2, 1}));
  CHECK(min_poly_4cos2(5) == poly({1, -3, 1}));
  CHECK(min_poly_4cos2(6) == poly({-3, 1}));
  CHECK(min_poly_4cos2(7) == poly({-1, 6, -5, 1}));
  CHECK(min_poly_4cos2(12) == poly({1, -4, 1}));
  CHECK_THROWS_AS(min_poly_4cos2(2), std::invalid_argument);
}

TEST_CASE("min_poly_4cos2 is monic of degree phi(n)/2 and kills its root") {
  for (int n = 3; n <= 100; ++n) {
    const IntPoly& c = min_poly_4cos2(n);
    CHECK(c.degree() == euler_phi(n) / 2);
    CHECK(c.coeff(c.degree()) == 1);
    CHECK(residue_at_root(c, n) < 1e-9);
  }
  // Double evaluation is good enough while the coefficients stay small.
  for (int n = 3; n <= 20; ++n) {
    const double root = 4.0 * std::pow(std::cos(M_PI / n), 2);
    CHECK(std::abs(min_poly_4cos2(n).eval(root)) < 1e-9);
  }
}

TEST_CASE("commutative shadow factors over the divisors") {
  CHECK(commutative_shadow(6) == poly({3, -4, 1})); // (t-1)(t-3)
  for (int n = 3; n <= 60; ++n) {
    IntPoly prod = IntPoly::constant(1);
    for (int d = 3; d <= n; ++d)
      if (n % d == 0) prod = prod * min_poly_4cos2(d);
    CHECK(commutative_shadow(n) == prod);
  }
}

TEST_CASE("rational evaluation is exact") {
  // C_4 = t - 2 vanishes at 2 = 4cos^2(pi/4).
  CHECK(min_poly_4cos2(4).eval(Rational(2)) == 0);
  CHECK(min_poly_4cos2(6).eval(Rational(3)) == 0);
  CHECK(poly({1, -3, 1}).eval(Rational(1, 2)) == Rational(-1, 4));
}
