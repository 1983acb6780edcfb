#pragma once

#include "coxpath/intpoly.hpp"
#include "coxpath/lincomb.hpp"

namespace coxpath {

/* Chebyshev-like ring elements c_n(a,b,e,f) for idempotents e,f and
 * a in fBe, b in eBf:
 *   c_0 = 0, c_1 = e, c_{2n+2} = a c_{2n+1} - c_{2n}, c_{2n+1} = b c_{2n} - c_{2n-1}.
 * f only enters through the typing of a and b, but stays in the signature so
 * call sites read like the identities they implement.  The ring is supplied
 * as an ops object with members mul(x,y) and scale(x, const Int&). */
template <class E, class Ops>
E cheb_c(int n, const E& a, const E& b, const E& e, const E& /*f*/, const Ops& ops) {
  if (n < 0) throw std::invalid_argument("cheb_c: need n >= 0");
  E prev = e - e; // zero of B
  if (n == 0) return prev;
  E cur = e;
  for (int k = 2; k <= n; ++k) {
    E next = (k % 2 == 0 ? ops.mul(a, cur) : ops.mul(b, cur)) - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/* C_2 = a; for n >= 3, C_n(a,b,e,f) is the minimal polynomial of
 * 4cos^2(pi/n) evaluated in eBe under 1 -> e, t -> ba. */
template <class E, class Ops>
E cheb_C(int n, const E& a, const E& b, const E& e, const E& /*f*/, const Ops& ops) {
  if (n < 2) throw std::invalid_argument("cheb_C: need n >= 2");
  if (n == 2) return a;
  const IntPoly& poly = min_poly_4cos2(n);
  const E ba = ops.mul(b, a);
  E acc = ops.scale(e, poly.coeff(0));
  E power = e;
  for (int k = 1; k <= poly.degree(); ++k) {
    power = ops.mul(power, ba);
    acc = acc + ops.scale(power, poly.coeff(k));
  }
  return acc;
}

/* Ops for plain path/free algebra elements. */
struct LinCombOps {
  template <class M>
  LinComb<M> mul(const LinComb<M>& x, const LinComb<M>& y) const {
    return coxpath::mul(x, y);
  }
  template <class M>
  LinComb<M> scale(const LinComb<M>& x, const Int& k) const {
    return x * Rational(k);
  }
};

} // namespace coxpath
