#include "coxpath/cheb.hpp"
#include "coxpath/intpoly.hpp"
#include "coxpath/rewrite.hpp"

namespace coxpath {

namespace {

RewriteRule<PathMono> rule_from_relator(const LinComb<PathMono>& relator) {
  // Relators here are monic; the rule sends the tip to tip - relator.
  RewriteRule<PathMono> rule;
  rule.tip = relator.tip();
  if (relator.tip_coeff() != 1)
    throw std::invalid_argument("relator is not monic");
  LinComb<PathMono> repl(relator.tip(), 1);
  repl -= relator;
  rule.repl = std::move(repl);
  return rule;
}

} // namespace

RewriteSystem<PathMono> rules_for_R(const CoxeterMatrix& mat) {
  RewriteSystem<PathMono> sys(RingTag::R);
  const int n = mat.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const int m = mat.bond(i, j);
      if (m < 3 || m == kInfinity) continue;
      // C_m evaluated at t = [s_i s_j s_i] with identity [s_i].
      const IntPoly& poly = min_poly_4cos2(m);
      LinComb<PathMono> relator;
      for (int k = 0; k <= poly.degree(); ++k)
        relator.add_term(alternating_path(i, j, 2 * k + 1), Rational(poly.coeff(k)));
      sys.add_rule(rule_from_relator(relator));
    }
  return sys;
}

RewriteSystem<PathMono> rules_for_Rtilde(const CoxeterMatrix& mat) {
  RewriteSystem<PathMono> sys(RingTag::Rtilde);
  const int n = mat.size();
  const LinCombOps ops;
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s) {
      if (r == s) continue;
      const int m = mat.bond(r, s);
      if (m < 3 || m == kInfinity) continue;
      LinComb<PathMono> a(alternating_path(r, s, 2), 1);
      LinComb<PathMono> b(alternating_path(s, r, 2), 1);
      LinComb<PathMono> e = vertex_idempotent(s);
      LinComb<PathMono> f = vertex_idempotent(r);
      sys.add_rule(rule_from_relator(cheb_c(m, a, b, e, f, ops)));
    }
  return sys;
}

} // namespace coxpath
