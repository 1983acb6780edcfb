#pragma once

#include <unordered_map>

#include "coxpath/lincomb.hpp"

namespace coxpath {

enum class RingTag { P, R, Rtilde, Q };

/* A monic rule tip -> replacement, i.e. the relator tip - replacement.  All
 * replacement monomials are strictly smaller than the tip; for paths they
 * share its extremities, so substitution stays inside the path algebra. */
template <class M>
struct RewriteRule {
  M tip;
  LinComb<M> repl;
};

template <class M>
class RewriteSystem {
public:
  explicit RewriteSystem(RingTag tag = RingTag::P) : tag_(tag) {}

  RingTag tag() const { return tag_; }
  const std::vector<RewriteRule<M>>& rules() const { return rules_; }

  void add_rule(RewriteRule<M> rule) {
    if (rule.tip.syms.empty())
      throw std::invalid_argument("rewrite rule with empty tip");
    for (const auto& [m, c] : rule.repl.terms()) {
      if (compare_llex(m, rule.tip) >= 0)
        throw std::invalid_argument("rewrite rule replacement not below tip");
      if constexpr (M::kSharedBoundary)
        if (m.syms.front() != rule.tip.syms.front() || m.syms.back() != rule.tip.syms.back())
          throw std::invalid_argument("rewrite rule is not uniform");
    }
    by_first_[rule.tip.syms.front()].push_back(static_cast<int>(rules_.size()));
    rules_.push_back(std::move(rule));
  }

  /* Index of a rule whose tip occurs at symbol offset `at`, or -1. */
  int match_at(const M& mono, int at) const {
    auto it = by_first_.find(mono.syms[at]);
    if (it == by_first_.end()) return -1;
    for (int ri : it->second) {
      const M& tip = rules_[ri].tip;
      if (at + tip.syms.size() <= mono.syms.size() &&
          std::equal(tip.syms.begin(), tip.syms.end(), mono.syms.begin() + at))
        return ri;
    }
    return -1;
  }

  /* (offset, rule) of the leftmost (or rightmost) redex, or nullopt. */
  std::optional<std::pair<int, int>> find_redex(const M& mono, bool leftmost = true) const {
    const int n = static_cast<int>(mono.syms.size());
    for (int k = 0; k < n; ++k) {
      const int at = leftmost ? k : n - 1 - k;
      if (int ri = match_at(mono, at); ri >= 0) return std::make_pair(at, ri);
    }
    return std::nullopt;
  }

  bool is_irreducible(const M& mono) const { return !find_redex(mono); }

private:
  RingTag tag_;
  std::vector<RewriteRule<M>> rules_;
  std::unordered_map<int32_t, std::vector<int>> by_first_;
};

/* Reduction strategy.  Both must converge to the same normal form once the
 * overlap check passes; keeping two around makes that testable. */
enum class ReduceOrder { LeftmostLargest, RightmostSmallest };

template <class M>
LinComb<M> normal_form(const LinComb<M>& x, const RewriteSystem<M>& sys,
                       ReduceOrder order = ReduceOrder::LeftmostLargest) {
  const bool largest = order == ReduceOrder::LeftmostLargest;
  LinComb<M> work = x;
  LinComb<M> done(x.domain());
  while (!work.is_zero()) {
    // Largest (resp. smallest) term first; each step strictly decreases the
    // multiset of monomials in the admissible order, so this terminates.
    const auto& entry = largest ? *work.terms().rbegin() : *work.terms().begin();
    const M mono = entry.first;
    const Rational coeff = entry.second;
    auto redex = sys.find_redex(mono, /*leftmost=*/largest);
    if (!redex) {
      done.add_term(mono, coeff); // irreducible monomials never reappear reducible
      work.add_term(mono, -coeff);
      continue;
    }
    const auto [at, ri] = *redex;
    const RewriteRule<M>& rule = sys.rules()[ri];
    work.add_term(mono, -coeff);
    for (const auto& [rm, rc] : rule.repl.terms())
      work.add_term(splice(mono, at, static_cast<int>(rule.tip.syms.size()), rm),
                    coeff * rc);
  }
  return done;
}

/* One overlap T(f) q = p T(g) together with the normal form of the overlap
 * relation o(f,g,p,q) = f q - p g.  A Groebner basis is certified by every
 * residue vanishing. */
template <class M>
struct Overlap {
  int f, g;
  M p, q;
  LinComb<M> residue;
};

template <class M>
std::vector<Overlap<M>> verify_overlaps(const RewriteSystem<M>& sys,
                                        bool include_resolved = false) {
  std::vector<Overlap<M>> out;
  const auto& rules = sys.rules();
  const int glue = M::kSharedBoundary ? 1 : 0;
  for (int fi = 0; fi < static_cast<int>(rules.size()); ++fi) {
    const M& t1 = rules[fi].tip;
    const int n1 = static_cast<int>(t1.syms.size());
    for (int gi = 0; gi < static_cast<int>(rules.size()); ++gi) {
      const M& t2 = rules[gi].tip;
      const int n2 = static_cast<int>(t2.syms.size());
      for (int at = (fi == gi ? 1 : 0); at < n1; ++at) {
        // t2 starts at symbol offset `at` of the combined monomial and must
        // reach past the end of t1.
        const int olen = n1 - at;
        if (olen > n2) continue;
        if (!std::equal(t1.syms.begin() + at, t1.syms.end(), t2.syms.begin()))
          continue;
        M p, q;
        p.syms.assign(t1.syms.begin(), t1.syms.begin() + at + glue);
        q.syms.assign(t2.syms.begin() + olen - glue, t2.syms.end());
        // Overlaps with a tip dividing a cofactor resolve for free and are
        // not part of the certificate.
        if (divides(t1, p) || divides(t2, q)) continue;
        LinComb<M> relf(t1, 1);
        relf -= rules[fi].repl;
        LinComb<M> relg(t2, 1);
        relg -= rules[gi].repl;
        LinComb<M> o = mul(relf, LinComb<M>(q, 1)) - mul(LinComb<M>(p, 1), relg);
        LinComb<M> residue = normal_form(o, sys);
        if (include_resolved || !residue.is_zero())
          out.push_back({fi, gi, std::move(p), std::move(q), std::move(residue)});
      }
    }
  }
  return out;
}

template <class M>
bool overlaps_resolve(const RewriteSystem<M>& sys) {
  for (const auto& ov : verify_overlaps(sys))
    if (!ov.residue.is_zero()) return false;
  return true;
}

/* Rule sets presenting the two quotients of the path algebra of (W,S): for
 * each ordered adjacent pair with finite bond m, RingTag::R installs the
 * degree-phi(m)/2 relator C_m([s_i s_j s_i]) with tip the alternating path on
 * 1 + phi(m) vertices, and RingTag::Rtilde installs c_m([rs],[sr],[s],[r])
 * with tip the alternating path on m vertices. */
RewriteSystem<PathMono> rules_for_R(const CoxeterMatrix& m);
RewriteSystem<PathMono> rules_for_Rtilde(const CoxeterMatrix& m);

} // namespace coxpath
