#pragma once

#include <map>
#include <stdexcept>

#include "coxpath/monomial.hpp"
#include "coxpath/scalar.hpp"

namespace coxpath {

/* Sparse exact linear combination of monomials.  Terms are kept in the
 * admissible order, so the tip is the last entry.  The coefficient domain is
 * one runtime tag, not two implementations: integer mode stores the same
 * rationals and is enforced as a closure check where the contract demands
 * it. */
template <class M>
class LinComb {
public:
  using Terms = std::map<M, Rational, LlexLess<M>>;

  LinComb() = default;
  explicit LinComb(Domain d) : domain_(d) {}
  LinComb(M mono, Rational coeff, Domain d = Domain::Rationals) : domain_(d) {
    add_term(std::move(mono), std::move(coeff));
  }

  Domain domain() const { return domain_; }
  void set_domain(Domain d) { domain_ = d; }
  bool is_zero() const { return terms_.empty(); }
  int nterms() const { return static_cast<int>(terms_.size()); }
  const Terms& terms() const { return terms_; }

  void add_term(M mono, Rational coeff) {
    if (coeff == 0) return;
    auto [it, fresh] = terms_.emplace(std::move(mono), coeff);
    if (!fresh) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const M& tip() const {
    if (terms_.empty()) throw std::invalid_argument("tip of the zero element");
    return terms_.rbegin()->first;
  }
  const Rational& tip_coeff() const {
    if (terms_.empty()) throw std::invalid_argument("tip of the zero element");
    return terms_.rbegin()->second;
  }

  bool integral() const {
    for (const auto& [m, c] : terms_)
      if (!is_integral(c)) return false;
    return true;
  }

  LinComb& operator+=(const LinComb& o) {
    domain_ = combine(domain_, o.domain_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    domain_ = combine(domain_, o.domain_);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  LinComb operator+(const LinComb& o) const { LinComb r = *this; r += o; return r; }
  LinComb operator-(const LinComb& o) const { LinComb r = *this; r -= o; return r; }
  LinComb operator-() const {
    LinComb r(domain_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  LinComb& operator*=(const Rational& s) {
    if (s == 0) { terms_.clear(); return *this; }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }
  LinComb operator*(const Rational& s) const { LinComb r = *this; r *= s; return r; }

  bool operator==(const LinComb& o) const { return terms_ == o.terms_; }
  bool operator!=(const LinComb& o) const { return !(*this == o); }

private:
  static Domain combine(Domain a, Domain b) {
    if (a != b)
      throw std::invalid_argument("mixed coefficient domains");
    return a;
  }

  Terms terms_;
  Domain domain_ = Domain::Rationals;
};

template <class M>
LinComb<M> operator*(const Rational& s, const LinComb<M>& x) { return x * s; }

/* Product in the path (resp. free) algebra; null concatenations drop out. */
template <class M>
LinComb<M> mul(const LinComb<M>& a, const LinComb<M>& b) {
  if (a.domain() != b.domain())
    throw std::invalid_argument("mixed coefficient domains");
  LinComb<M> out(a.domain());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms())
      if (auto m = concat(ma, mb)) out.add_term(std::move(*m), ca * cb);
  return out;
}

/* Terms starting at r and ending at s. */
inline LinComb<PathMono> component(const LinComb<PathMono>& x, int r, int s) {
  LinComb<PathMono> out(x.domain());
  for (const auto& [m, c] : x.terms())
    if (m.origin() == r && m.terminus() == s) out.add_term(m, c);
  return out;
}

inline LinComb<PathMono> vertex_idempotent(int v, Domain d = Domain::Rationals) {
  return LinComb<PathMono>(PathMono{{v}}, 1, d);
}

inline LinComb<WordMono> word_one(Domain d = Domain::Rationals) {
  return LinComb<WordMono>(WordMono{}, 1, d);
}

} // namespace coxpath
