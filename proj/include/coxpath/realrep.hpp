#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <cmath>

#include "coxpath/reflect.hpp"

namespace coxpath {

/* Homomorphisms into S x S real matrices.  Scalar is either Rational (exact
 * mode, bonds restricted to {2,3,4,6,inf}) or double (any bonds, tolerance
 * kRealTol).  The matrix A = (a_{r,s}) plays the role of a reflection
 * matrix: lax needs a_{r,s} a_{s,r} = 4cos^2(k pi / m_{r,s}), strict needs
 * gcd(k, m_{r,s}) = 1. */

inline constexpr double kRealTol = 1e-8;

template <class Scalar>
using DenseMat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <class Scalar>
struct ReflectionMatrix {
  DenseMat<Scalar> a;
  bool strict = false;
  bool degenerate = false; // some a_{r,s} = 0 despite m_{r,s} >= 3 (k = m/2)
};

/* Integral strict matrix with a_{r,r} = 2 and, for i < j, a_{ij} = -1 and
 * a_{ji} = -4cos^2(pi/m): (-1,-1), (-1,-2), (-1,-3) for m = 3, 4, 6, the
 * pair (-2,-2) for m = inf, and 0 for m = 2.  Other bonds have no rational
 * matrix and are rejected. */
ReflectionMatrix<Rational> ngcm_crystallographic(const CoxeterMatrix& m);

/* a_{r,s} = a_{s,r} = -2cos(k_{r,s} pi / m_{r,s}) with 1 <= k <= m/2
 * (default k = 1), and -2 for m = inf.  Strict iff every gcd(k, m) = 1. */
struct KChoice {
  int r, s, k;
};
ReflectionMatrix<double> rrm_float(const CoxeterMatrix& m,
                                   const std::vector<KChoice>& ks = {});

template <class Scalar>
Scalar scalar_cast(const Rational& q) {
  if constexpr (std::is_same_v<Scalar, Rational>) return q;
  else return q.template convert_to<Scalar>();
}

/* theta'([s_1...s_n]) = (-1)^{n-1} a_{s_1,s_2} ... a_{s_{n-1},s_n} e_{s_1,s_n},
 * extended linearly; defined on the whole path algebra. */
template <class Scalar>
DenseMat<Scalar> theta_prime(const ReflectionMatrix<Scalar>& A,
                             const LinComb<PathMono>& x) {
  const auto n = A.a.rows();
  DenseMat<Scalar> out = DenseMat<Scalar>::Zero(n, n);
  for (const auto& [p, c] : x.terms()) {
    Scalar v = scalar_cast<Scalar>(c);
    if (p.length() % 2 == 1) v = -v;
    for (int k = 0; k + 1 < static_cast<int>(p.syms.size()); ++k)
      v *= A.a(p.syms[k], p.syms[k + 1]);
    out(p.origin(), p.terminus()) += v;
  }
  return out;
}

template <class Scalar>
double matrix_residue(const DenseMat<Scalar>& m) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      double v;
      if constexpr (std::is_same_v<Scalar, Rational>)
        v = m(i, j).template convert_to<double>();
      else
        v = m(i, j);
      worst = std::max(worst, std::abs(v));
    }
  return worst;
}

struct KillReport {
  bool killed = true;
  double max_residue = 0.0; // largest |entry| over all generator images
  std::vector<std::string> failures; // one line per surviving generator
};

/* Evaluates theta' on every ideal generator: the C_m relators when A claims
 * strictness (ideal of R), the c_m relators otherwise (ideal of Rtilde). */
template <class Scalar>
KillReport check_kills_ideal(const ReflectionMatrix<Scalar>& A, const CoxeterMatrix& mat);

/* The homomorphism on the quotient; throws std::domain_error unless the
 * matching kill check passes (and, for ring R, unless A is strict). */
template <class Scalar>
DenseMat<Scalar> theta_R(const ReflectionMatrix<Scalar>& A, const QuotientRing& ring,
                         const LinComb<PathMono>& x);

/* W acts on B on both sides:
 *   right by s:  e_{r,t} -> e_{r,t} - a_{t,s} e_{r,s}   (column update)
 *   left by s:   e_{r,t} -> e_{r,t} - a_{s,r} e_{s,t}   (row update)
 * Word folding matches act_word: left right-to-left, right left-to-right. */
template <class Scalar>
DenseMat<Scalar> act_B(const ReflectionMatrix<Scalar>& A, DenseMat<Scalar> x, int s,
                       Side side) {
  // Explicit loops: only one row (resp. column) of x changes, and mixing
  // Eigen product expressions with the exact scalar is more trouble than it
  // is worth.
  if (side == Side::Right) {
    for (Eigen::Index r = 0; r < x.rows(); ++r) {
      Scalar acc(0);
      for (Eigen::Index t = 0; t < x.cols(); ++t) acc += x(r, t) * A.a(t, s);
      x(r, s) -= acc;
    }
  } else {
    for (Eigen::Index t = 0; t < x.cols(); ++t) {
      Scalar acc(0);
      for (Eigen::Index r = 0; r < x.rows(); ++r) acc += A.a(s, r) * x(r, t);
      x(s, t) -= acc;
    }
  }
  return x;
}

template <class Scalar>
DenseMat<Scalar> act_B_word(const ReflectionMatrix<Scalar>& A, const Word& w,
                            DenseMat<Scalar> x, Side side) {
  if (side == Side::Left) {
    for (auto it = w.rbegin(); it != w.rend(); ++it) x = act_B(A, std::move(x), *it, side);
  } else {
    for (int s : w) x = act_B(A, std::move(x), s, side);
  }
  return x;
}

/* Dimension of the span of the theta images of the basis paths of length
 * <= len_cutoff. */
template <class Scalar>
int image_rank(const ReflectionMatrix<Scalar>& A, const QuotientRing& ring,
               int len_cutoff);

} // namespace coxpath
