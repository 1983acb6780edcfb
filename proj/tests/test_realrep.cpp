#include <random>

#include "coxpath/parse.hpp"
#include "coxpath/realrep.hpp"
#include "doctest.h"
#include "testutil.hpp"

using namespace coxpath;

namespace {

Word reversed(Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}

template <class Scalar>
double diff(const DenseMat<Scalar>& a, const DenseMat<Scalar>& b) {
  DenseMat<Scalar> d = a;
  d -= b;
  return matrix_residue(d);
}

/* Plain triple loop: Eigen's a * b considers a scalar-times-matrix overload
 * whose trait check does not survive the exact scalar type. */
DenseMat<Rational> mat_mul(const DenseMat<Rational>& a, const DenseMat<Rational>& b) {
  DenseMat<Rational> out = DenseMat<Rational>::Zero(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k)
      for (Eigen::Index j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
  return out;
}

} // namespace

TEST_CASE("crystallographic matrices") {
  const auto a3 = ngcm_crystallographic(preset("A3"));
  CHECK(a3.strict);
  CHECK(!a3.degenerate);
  CHECK(a3.a(0, 0) == 2);
  CHECK(a3.a(0, 1) == -1);
  CHECK(a3.a(1, 0) == -1);
  CHECK(a3.a(0, 2) == 0);

  const auto b2 = ngcm_crystallographic(preset("B2"));
  CHECK(b2.a(0, 1) * b2.a(1, 0) == 2); // 4cos^2(pi/4)

  const auto univ = ngcm_crystallographic(preset("universal"));
  CHECK(univ.a(0, 1) == -2);
  CHECK(univ.a(1, 0) == -2);

  CHECK_THROWS_AS(ngcm_crystallographic(preset("H3")), std::invalid_argument);
  CHECK_THROWS_AS(ngcm_crystallographic(preset("I2(5)")), std::invalid_argument);
}

TEST_CASE("float reflection matrices") {
  const CoxeterMatrix i5 = preset("I2(5)");
  const auto def = rrm_float(i5);
  CHECK(def.strict);
  CHECK(def.a(0, 1) == doctest::Approx(-2 * std::cos(M_PI / 5)));
  CHECK(def.a(0, 1) * def.a(1, 0) ==
        doctest::Approx(4 * std::pow(std::cos(M_PI / 5), 2)));

  const auto lax = rrm_float(preset("I2(6)"), {{0, 1, 2}});
  CHECK(!lax.strict); // gcd(2,6) = 2
  CHECK(!lax.degenerate);
  CHECK(lax.a(0, 1) == doctest::Approx(-1.0));

  const auto degen = rrm_float(preset("B2"), {{0, 1, 2}});
  CHECK(degen.degenerate); // 2k = m puts a zero off the diagonal
  CHECK(degen.a(0, 1) == doctest::Approx(0.0));

  CHECK(rrm_float(preset("universal")).a(0, 1) == doctest::Approx(-2.0));
  CHECK_THROWS_AS(rrm_float(i5, {{0, 1, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(rrm_float(i5, {{0, 1, 0}}), std::invalid_argument);
}

TEST_CASE("monomial homomorphism on single paths") {
  const CoxeterMatrix a2 = preset("A2");
  const auto A = ngcm_crystallographic(a2);

  DenseMat<Rational> m = theta_prime(A, parse_element("[s1]", a2));
  CHECK(m(0, 0) == 1);
  CHECK(m(0, 1) == 0);

  // One edge: (-1)^1 a_{12} e_{12} = +1 there.
  m = theta_prime(A, parse_element("[s1,s2]", a2));
  CHECK(m(0, 1) == 1);
  CHECK(m(1, 0) == 0);

  m = theta_prime(A, parse_element("[s1,s2,s1]", a2));
  CHECK(m(0, 0) == 1); // (+1) a_{12} a_{21}
}

TEST_CASE("kill check selects the relator family by strictness") {
  const auto report = check_kills_ideal(ngcm_crystallographic(preset("A3")), preset("A3"));
  CHECK(report.killed);
  CHECK(report.max_residue == 0.0);
  CHECK(report.failures.empty());

  // The k = 2 matrix on I2(6) factors through the lax quotient only: the
  // c_6 relators die, the strict C_6 relator survives with residue 2.
  const CoxeterMatrix g2 = preset("I2(6)");
  auto lax = rrm_float(g2, {{0, 1, 2}});
  CHECK(check_kills_ideal(lax, g2).killed);
  CHECK(check_kills_ideal(lax, g2).max_residue < kRealTol);

  auto forced = lax;
  forced.strict = true;
  const auto broken = check_kills_ideal(forced, g2);
  CHECK(!broken.killed);
  CHECK(broken.max_residue == doctest::Approx(2.0));
  CHECK(broken.failures.size() == 2);
}

TEST_CASE("theta is a ring homomorphism on the quotient") {
  std::mt19937_64 rng(0x5eed000a);
  for (const char* name : {"A3", "B2"}) {
    const CoxeterMatrix mat = preset(name);
    const auto A = ngcm_crystallographic(mat);
    const QuotientRing ring = make_quotient(mat, RingTag::R);
    const auto basis = enumerate_basis(ring, 5);

    DenseMat<Rational> id = theta_R(A, ring, ring_one(ring));
    CHECK(diff<Rational>(id, DenseMat<Rational>::Identity(mat.size(), mat.size())) == 0.0);

    for (int it = 0; it < 40; ++it) {
      const QElement x = testutil::random_element(ring, basis, rng);
      const QElement y = testutil::random_element(ring, basis, rng);
      const DenseMat<Rational> lhs = theta_R(A, ring, qmul(ring, x, y));
      const DenseMat<Rational> rhs = mat_mul(theta_R(A, ring, x), theta_R(A, ring, y));
      CHECK(diff(lhs, rhs) == 0.0);

      // theta' factors through the quotient, so any representative will do.
      CHECK(diff(theta_prime(A, mul(x, y)), lhs) == 0.0);
    }
  }
}

TEST_CASE("theta refuses a lax matrix on the strict quotient") {
  const CoxeterMatrix g2 = preset("I2(6)");
  const auto lax = rrm_float(g2, {{0, 1, 2}});
  const QuotientRing strict_ring = make_quotient(g2, RingTag::R);
  const QuotientRing lax_ring = make_quotient(g2, RingTag::Rtilde);
  const QElement x = parse_element("[r]", g2);

  CHECK_THROWS_AS(theta_R(lax, strict_ring, x), std::domain_error);
  CHECK_NOTHROW(theta_R(lax, lax_ring, x));

  // A strict matrix factors through both quotients.
  const CoxeterMatrix b2 = preset("B2");
  const auto A = ngcm_crystallographic(b2);
  CHECK_NOTHROW(theta_R(A, make_quotient(b2, RingTag::Rtilde), parse_element("[s1]", b2)));
}

TEST_CASE("the two-sided W-action intertwines theta with a word reversal") {
  std::mt19937_64 rng(0x5eed000b);
  for (const char* name : {"A3", "B2"}) {
    const CoxeterMatrix mat = preset(name);
    const auto A = ngcm_crystallographic(mat);
    const QuotientRing ring = make_quotient(mat, RingTag::R);
    const auto basis = enumerate_basis(ring, 5);
    for (int it = 0; it < 30; ++it) {
      const QElement x = testutil::random_element(ring, basis, rng);
      const Word w = testutil::random_word(rng, mat.size(), 4);
      const DenseMat<Rational> tx = theta_R(A, ring, x);

      CHECK(diff(theta_R(A, ring, act_word(ring, w, x, Side::Left)),
                 act_B_word(A, reversed(w), tx, Side::Right)) == 0.0);
      CHECK(diff(theta_R(A, ring, act_word(ring, w, x, Side::Right)),
                 act_B_word(A, reversed(w), tx, Side::Left)) == 0.0);
    }
  }
}

TEST_CASE("image rank") {
  const QuotientRing a3 = make_quotient(preset("A3"), RingTag::R);
  CHECK(image_rank(ngcm_crystallographic(preset("A3")), a3, 8) == 9);

  const QuotientRing b2 = make_quotient(preset("B2"), RingTag::R);
  CHECK(image_rank(ngcm_crystallographic(preset("B2")), b2, 8) == 4);

  // I2(5) has rank 8 as a module but lands in 2x2 matrices.
  const QuotientRing i5 = make_quotient(preset("I2(5)"), RingTag::R);
  CHECK(enumerate_basis(i5, 8).size() == 8);
  CHECK(image_rank(rrm_float(preset("I2(5)")), i5, 8) == 4);
}
