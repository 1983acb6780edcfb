#pragma once

#include <vector>

#include "coxpath/scalar.hpp"

namespace coxpath {

/* Dense univariate polynomial over Int, coefficients stored low degree
 * first.  Zero is the empty vector; the leading coefficient is never 0. */
class IntPoly {
public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs);
  static IntPoly constant(Int c);
  static IntPoly monomial(Int c, int deg);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for 0
  const std::vector<Int>& coeffs() const { return c_; }
  Int coeff(int k) const; // 0 beyond the stored range

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }
  bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

  // Throws std::domain_error unless `this` is exactly divisible by d.
  IntPoly div_exact(const IntPoly& d) const;

  double eval(double t) const;
  Rational eval(const Rational& t) const;

private:
  std::vector<Int> c_;
  void trim();
};

int euler_phi(int n);

/* Image of the Chebyshev-like elements c_n under ab, ba -> t, e, f -> 1
 * (even n additionally stripped of the leading a factor):
 *   e_0 = 0, e_1 = 1, e_{2k+1} = t e_{2k} - e_{2k-1}, e_{2k+2} = e_{2k+1} - e_{2k}.
 * Satisfies commutative_shadow(n) = prod over divisors N >= 3 of n of
 * min_poly_4cos2(N). */
IntPoly commutative_shadow(int n);

/* Minimal polynomial of 4 cos^2(pi/n) over the rationals, n >= 3; monic of
 * degree phi(n)/2, computed from the shadow by exact division through the
 * proper divisors.  Throws std::invalid_argument for n < 3. */
const IntPoly& min_poly_4cos2(int n);

} // namespace coxpath
