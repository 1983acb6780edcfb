#include "coxpath/intpoly.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace coxpath {

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(Int c) { return IntPoly({std::move(c)}); }

IntPoly IntPoly::monomial(Int c, int deg) {
  std::vector<Int> v(deg + 1);
  v[deg] = std::move(c);
  return IntPoly(std::move(v));
}

Int IntPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[k];
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<Int> v(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + o.coeff(i);
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  std::vector<Int> v(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) - o.coeff(i);
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Int> v(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::div_exact(const IntPoly& d) const {
  if (d.is_zero()) throw std::domain_error("IntPoly: division by zero");
  std::vector<Int> rem = c_;
  std::vector<Int> quot(rem.size() >= d.c_.size() ? rem.size() - d.c_.size() + 1 : 0);
  const Int& lead = d.c_.back();
  for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
    Int top = rem[k + d.degree()];
    if (top == 0) continue;
    if (top % lead != 0) throw std::domain_error("IntPoly: inexact division");
    Int q = top / lead;
    quot[k] = q;
    for (size_t i = 0; i < d.c_.size(); ++i) rem[k + i] -= q * d.c_[i];
  }
  for (const Int& r : rem)
    if (r != 0) throw std::domain_error("IntPoly: inexact division");
  return IntPoly(std::move(quot));
}

double IntPoly::eval(double t) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * t + it->convert_to<double>();
  return acc;
}

Rational IntPoly::eval(const Rational& t) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + Rational(*it);
  return acc;
}

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

IntPoly commutative_shadow(int n) {
  if (n < 0) throw std::invalid_argument("commutative_shadow: n must be >= 0");
  IntPoly prev;                       // e_0 = 0
  IntPoly cur = IntPoly::constant(1); // e_1
  if (n == 0) return prev;
  const IntPoly t = IntPoly::monomial(1, 1);
  for (int k = 2; k <= n; ++k) {
    IntPoly next = (k % 2 == 1) ? t * cur - prev : cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

const IntPoly& min_poly_4cos2(int n) {
  if (n < 3) throw std::invalid_argument("min_poly_4cos2: need n >= 3");
  static std::map<int, IntPoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  // Fill divisors of n in ascending order; each C_d needs only C_e for the
  // proper divisors e >= 3 of d, which divide n and are already present.
  for (int d = 3; d <= n; ++d) {
    if (n % d != 0 || cache.count(d)) continue;
    IntPoly p = commutative_shadow(d);
    for (int e = 3; e < d; ++e)
      if (d % e == 0) p = p.div_exact(cache.at(e));
    cache.emplace(d, std::move(p));
  }
  return cache.at(n);
}

} // namespace coxpath
