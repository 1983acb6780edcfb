#pragma once

#include <random>
#include <vector>

#include "coxpath/quotient.hpp"
#include "coxpath/reflect.hpp"

/* Shared sampling helpers.  Everything is driven by an explicit mt19937_64,
 * so any failure reproduces from the seed in the test source. */
namespace testutil {

using namespace coxpath;

inline int below(std::mt19937_64& g, int n) { return static_cast<int>(g() % n); }

inline Word random_word(std::mt19937_64& g, int ngens, int max_len) {
  Word w(below(g, max_len + 1));
  for (int& s : w) s = below(g, ngens);
  return w;
}

/* Integer combination of basis paths, at most `terms` of them, coefficients
 * in [-bound, bound] \ {0}. */
inline QElement random_element(const QuotientRing& ring, const std::vector<PathMono>& basis,
                               std::mt19937_64& g, int terms = 3, int bound = 5) {
  QElement x(Domain::Rationals);
  const int n = 1 + below(g, terms);
  for (int k = 0; k < n; ++k) {
    Rational c = 1 + below(g, bound);
    if (g() % 2 == 0) c = -c;
    x.add_term(basis[below(g, static_cast<int>(basis.size()))], c);
  }
  return x;
}

/* Random Coxeter matrix on n generators with bonds drawn from `bonds`
 * (diagonal 1, symmetric). */
inline CoxeterMatrix random_coxeter(std::mt19937_64& g, int n, const std::vector<int>& bonds) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("g" + std::to_string(i + 1));
  std::vector<int> e(n * n, 1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      e[i * n + j] = e[j * n + i] = bonds[below(g, static_cast<int>(bonds.size()))];
  return CoxeterMatrix(names, std::move(e));
}

inline const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> n = {"A2",    "A3",    "B2",
                                             "I2(5)", "I2(6)", "I2(7)",
                                             "running-example", "universal"};
  return n;
}

} // namespace testutil
