#include "coxpath/realrep.hpp"

#include <numeric>

#include "coxpath/cheb.hpp"

namespace coxpath {

ReflectionMatrix<Rational> ngcm_crystallographic(const CoxeterMatrix& mat) {
  const int n = mat.size();
  ReflectionMatrix<Rational> A;
  A.a = DenseMat<Rational>::Zero(n, n);
  A.strict = true;
  for (int i = 0; i < n; ++i) A.a(i, i) = 2;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int m = mat.bond(i, j);
      if (m == 2) continue;
      if (m == kInfinity) {
        A.a(i, j) = A.a(j, i) = -2;
        continue;
      }
      int prod; // 4cos^2(pi/m)
      switch (m) {
        case 3: prod = 1; break;
        case 4: prod = 2; break;
        case 6: prod = 3; break;
        default:
          throw std::invalid_argument(
              "ngcm_crystallographic: bond " + std::to_string(m) + " at (" + mat.name(i) +
              "," + mat.name(j) + ") has no rational matrix; use rrm_float");
      }
      A.a(i, j) = -1;
      A.a(j, i) = -prod;
    }
  return A;
}

ReflectionMatrix<double> rrm_float(const CoxeterMatrix& mat, const std::vector<KChoice>& ks) {
  const int n = mat.size();
  auto k_for = [&](int r, int s) {
    for (const KChoice& kc : ks)
      if ((kc.r == r && kc.s == s) || (kc.r == s && kc.s == r)) return kc.k;
    return 1;
  };
  ReflectionMatrix<double> A;
  A.a = DenseMat<double>::Zero(n, n);
  A.strict = true;
  for (int i = 0; i < n; ++i) A.a(i, i) = 2;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int m = mat.bond(i, j);
      if (m == 2) continue;
      if (m == kInfinity) {
        A.a(i, j) = A.a(j, i) = -2;
        continue;
      }
      const int k = k_for(i, j);
      if (k < 1 || 2 * k > m)
        throw std::invalid_argument("rrm_float: need 1 <= k <= m/2 at (" + mat.name(i) +
                                    "," + mat.name(j) + ")");
      if (std::gcd(k, m) != 1) A.strict = false;
      if (2 * k == m) A.degenerate = true; // cos(pi/2) = 0 decouples the pair
      A.a(i, j) = A.a(j, i) = -2.0 * std::cos(k * M_PI / m);
    }
  return A;
}

namespace {

/* Generators of the ideal the matrix must kill: C_m relators for a strict
 * matrix (ideal of R), c_m relators for a lax one (ideal of Rtilde). */
std::vector<std::pair<std::string, LinComb<PathMono>>> kill_targets(
    bool strict, const CoxeterMatrix& mat) {
  RewriteSystem<PathMono> sys = strict ? rules_for_R(mat) : rules_for_Rtilde(mat);
  std::vector<std::pair<std::string, LinComb<PathMono>>> out;
  for (const auto& rule : sys.rules()) {
    LinComb<PathMono> relator(rule.tip, 1);
    relator -= rule.repl;
    std::string label = (strict ? "C_m" : "c_m") + std::string(" at (") +
                        mat.name(rule.tip.syms[0]) + "," + mat.name(rule.tip.syms[1]) + ")";
    out.emplace_back(std::move(label), std::move(relator));
  }
  return out;
}

} // namespace

template <class Scalar>
KillReport check_kills_ideal(const ReflectionMatrix<Scalar>& A, const CoxeterMatrix& mat) {
  KillReport report;
  const double tol = std::is_same_v<Scalar, Rational> ? 0.0 : kRealTol;
  for (const auto& [label, relator] : kill_targets(A.strict, mat)) {
    const double residue = matrix_residue(theta_prime(A, relator));
    report.max_residue = std::max(report.max_residue, residue);
    if (residue > tol) {
      report.killed = false;
      report.failures.push_back(label + ": residue " + std::to_string(residue));
    }
  }
  return report;
}

template <class Scalar>
DenseMat<Scalar> theta_R(const ReflectionMatrix<Scalar>& A, const QuotientRing& ring,
                         const LinComb<PathMono>& x) {
  if (ring.sys.tag() == RingTag::R && !A.strict)
    throw std::domain_error("theta_R: a lax matrix only factors through Rtilde");
  if (ring.sys.tag() != RingTag::R && ring.sys.tag() != RingTag::Rtilde)
    throw std::domain_error("theta_R: ring must be R or Rtilde");
  if (!check_kills_ideal(A, ring.matrix).killed)
    throw std::domain_error("theta_R: matrix does not kill the defining ideal");
  return theta_prime(A, x);
}

template <class Scalar>
int image_rank(const ReflectionMatrix<Scalar>& A, const QuotientRing& ring,
               int len_cutoff) {
  const auto basis = enumerate_basis(ring, len_cutoff);
  const int n = ring.matrix.size();
  DenseMat<Scalar> rows(static_cast<int>(basis.size()), n * n);
  for (int i = 0; i < static_cast<int>(basis.size()); ++i) {
    DenseMat<Scalar> img = theta_R(A, ring, LinComb<PathMono>(basis[i], 1));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) rows(i, r * n + c) = img(r, c);
  }
  Eigen::FullPivLU<DenseMat<Scalar>> lu(rows);
  if constexpr (std::is_same_v<Scalar, double>) lu.setThreshold(kRealTol);
  return static_cast<int>(lu.rank());
}

template KillReport check_kills_ideal(const ReflectionMatrix<Rational>&, const CoxeterMatrix&);
template KillReport check_kills_ideal(const ReflectionMatrix<double>&, const CoxeterMatrix&);
template DenseMat<Rational> theta_R(const ReflectionMatrix<Rational>&, const QuotientRing&,
                                    const LinComb<PathMono>&);
template DenseMat<double> theta_R(const ReflectionMatrix<double>&, const QuotientRing&,
                                  const LinComb<PathMono>&);
template int image_rank(const ReflectionMatrix<Rational>&, const QuotientRing&, int);
template int image_rank(const ReflectionMatrix<double>&, const QuotientRing&, int);

} // namespace coxpath
