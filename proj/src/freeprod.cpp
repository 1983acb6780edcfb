#include "coxpath/freeprod.hpp"

#include <random>

#include "coxpath/intpoly.hpp"
#include "coxpath/parse.hpp"

namespace coxpath {

namespace {

WordMono alternating_word(int edge, bool bar_first, int nletters) {
  WordMono w;
  w.syms.reserve(nletters);
  for (int k = 0; k < nletters; ++k)
    w.syms.push_back(word_letter(edge, bar_first ? k % 2 == 0 : k % 2 == 1));
  return w;
}

} // namespace

RewriteSystem<WordMono> q_system(const CoxeterMatrix& base) {
  RewriteSystem<WordMono> sys(RingTag::Q);
  const CoxGraph g = build_graph(base);
  for (int e = 0; e < static_cast<int>(g.pos_edges.size()); ++e) {
    const auto [i, j] = g.pos_edges[e];
    const int m = base.bond(i, j);
    if (m == kInfinity) continue; // that factor of Q is free
    const IntPoly& poly = min_poly_4cos2(m);
    for (bool bar_first : {false, true}) {
      // C_m(x xbar) = 0 rewrites (x xbar)^d to the lower-degree tail.
      RewriteRule<WordMono> rule;
      rule.tip = alternating_word(e, bar_first, 2 * poly.degree());
      for (int k = 0; k < poly.degree(); ++k)
        rule.repl.add_term(alternating_word(e, bar_first, 2 * k), -Rational(poly.coeff(k)));
      sys.add_rule(std::move(rule));
    }
  }
  return sys;
}

FreeProductRing make_q_ring(const CoxeterMatrix& base) {
  return FreeProductRing{base, build_graph(base), q_system(base)};
}

FPElement q_reduce(const FreeProductRing& q, const FPElement& x) {
  return normal_form(x, q.sys);
}

FPElement q_mul(const FreeProductRing& q, const FPElement& a, const FPElement& b) {
  return normal_form(mul(a, b), q.sys);
}

FPElement edge_inverse(const FreeProductRing& q, int edge) {
  const auto [i, j] = q.graph.pos_edges.at(edge);
  const int m = q.base.bond(i, j);
  if (m == kInfinity)
    throw std::invalid_argument("edge_inverse: letters on an infinite bond are free");
  // Write C_m(t) = kappa (t h(t) - 1); then xbar h(x xbar) inverts x.
  const IntPoly& poly = min_poly_4cos2(m);
  const Rational kappa = -Rational(poly.coeff(0));
  FPElement inv;
  for (int k = 1; k <= poly.degree(); ++k) {
    WordMono w = alternating_word(edge, /*bar_first=*/true, 2 * k - 1);
    inv.add_term(std::move(w), Rational(poly.coeff(k)) / kappa);
  }
  return q_reduce(q, inv);
}

ApexEmbedding make_embedding(const CoxeterMatrix& base) {
  CoxeterMatrix ext = extend_with_apex(base);
  return ApexEmbedding{base, make_quotient(ext, RingTag::R), make_q_ring(base),
                       base.size()};
}

bool MatrixQ::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

MatrixQ matq_mul(const FreeProductRing& q, const MatrixQ& a, const MatrixQ& b) {
  if (a.size() != b.size()) throw std::invalid_argument("matq_mul: size mismatch");
  MatrixQ out(a.size());
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) {
      FPElement acc;
      for (int k = 0; k < a.size(); ++k) {
        if (a.at(i, k).is_zero() || b.at(k, j).is_zero()) continue;
        acc += mul(a.at(i, k), b.at(k, j));
      }
      out.at(i, j) = q_reduce(q, acc);
    }
  return out;
}

QElement apex_P(const ApexEmbedding& e, int i, int j) {
  PathMono p;
  if (i != e.apex) p.syms.push_back(i);
  p.syms.push_back(e.apex);
  if (j != e.apex) p.syms.push_back(j);
  return reduce(e.ext, QElement(std::move(p), 1));
}

QElement psi(const ApexEmbedding& e, int i, const FPElement& x) {
  QElement out;
  for (const auto& [w, c] : x.terms()) {
    QElement acc = vertex_idempotent(i);
    for (int32_t letter : w.syms) {
      const auto [lo, hi] = e.q.graph.pos_edges[letter_edge(letter)];
      const int from = letter_bar(letter) ? hi : lo;
      const int to = letter_bar(letter) ? lo : hi;
      QElement img = qmul(e.ext, apex_P(e, i, from),
                          qmul(e.ext, QElement(PathMono{{from, to}}, 1), apex_P(e, to, i)));
      acc = qmul(e.ext, acc, img);
    }
    out += acc * c;
  }
  return out;
}

MatrixQ Phi(const ApexEmbedding& e, const QElement& x) {
  MatrixQ out(e.base.size() + 1);
  for (const auto& [p, c] : x.terms()) {
    WordMono w;
    for (size_t k = 0; k + 1 < p.syms.size(); ++k) {
      const int u = p.syms[k], v = p.syms[k + 1];
      if (u == e.apex || v == e.apex) continue; // apex edges map to bare matrix units
      w.syms.push_back(word_letter(e.q.graph.edge_index(u, v), u > v));
    }
    out.at(p.origin(), p.terminus()).add_term(std::move(w), c);
  }
  for (int i = 0; i <= e.base.size(); ++i)
    for (int j = 0; j <= e.base.size(); ++j)
      out.at(i, j) = q_reduce(e.q, out.at(i, j));
  return out;
}

QElement Psi(const ApexEmbedding& e, const MatrixQ& m) {
  if (m.size() != e.base.size() + 1) throw std::invalid_argument("Psi: size mismatch");
  QElement out;
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) {
      if (m.at(i, j).is_zero()) continue;
      out += qmul(e.ext, psi(e, i, m.at(i, j)), apex_P(e, i, j));
    }
  return out;
}

MatrixQ embed(const ApexEmbedding& e, const QElement& x) {
  for (const auto& [p, c] : x.terms())
    for (int32_t v : p.syms)
      if (v == e.apex) throw std::invalid_argument("embed: element is not in the base ring");
  return Phi(e, x);
}

namespace {

bool uniform_component(const QElement& x, int& from, int& to) {
  bool first = true;
  for (const auto& [p, c] : x.terms()) {
    if (first) {
      from = p.origin();
      to = p.terminus();
      first = false;
    } else if (p.origin() != from || p.terminus() != to) {
      return false;
    }
  }
  return !first;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t trial) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

QElement sample_component(std::mt19937_64& rng, const std::vector<PathMono>& paths,
                          int coeff_bound) {
  for (int attempt = 0; attempt < 16; ++attempt) {
    QElement x;
    const int nterms = 1 + static_cast<int>(rand_below(rng, 3));
    for (int t = 0; t < nterms; ++t) {
      const PathMono& p = paths[rand_below(rng, paths.size())];
      long c = 1 + static_cast<long>(rand_below(rng, coeff_bound));
      if (rand_below(rng, 2)) c = -c;
      x.add_term(p, c);
    }
    if (!x.is_zero()) {
      x.set_domain(Domain::Integers);
      return x;
    }
  }
  throw std::logic_error("sample_component: could not draw a nonzero element");
}

} // namespace

bool zero_product_is_counterexample(const QElement& x1, const QElement& x2) {
  int f1, t1, f2, t2;
  if (!uniform_component(x1, f1, t1) || !uniform_component(x2, f2, t2)) return false;
  return t1 == f2; // otherwise the product vanishes for bookkeeping reasons
}

DomainCheckReport near_domain_check(const CoxeterMatrix& base, int trials, int max_len,
                                    int coeff_bound, std::uint64_t seed) {
  DomainCheckReport report;
  report.seed = seed;
  report.trials = trials;
  report.max_len = max_len;
  report.coeff_bound = coeff_bound;

  const ApexEmbedding e = make_embedding(base);
  const QuotientRing ring = make_quotient(base, RingTag::R);
  const int n = base.size();
  std::vector<std::vector<std::vector<PathMono>>> basis(n);
  for (int r = 0; r < n; ++r) {
    basis[r].resize(n);
    for (int s = 0; s < n; ++s) basis[r][s] = enumerate_basis(ring, max_len, r, s);
  }

  for (int trial = 0; trial < trials; ++trial) {
    std::mt19937_64 rng(mix_seed(seed, trial));
    int r = -1, s = -1, t = -1;
    for (int attempt = 0; attempt < 64; ++attempt) {
      const int rr = static_cast<int>(rand_below(rng, n));
      const int ss = static_cast<int>(rand_below(rng, n));
      const int tt = static_cast<int>(rand_below(rng, n));
      if (!basis[rr][ss].empty() && !basis[ss][tt].empty()) {
        r = rr; s = ss; t = tt;
        break;
      }
    }
    if (r < 0) continue; // nothing composable at this length bound

    QElement x1 = sample_component(rng, basis[r][s], coeff_bound);
    QElement x2 = sample_component(rng, basis[s][t], coeff_bound);
    ++report.performed;

    const QElement y = qmul(ring, x1, x2);
    const MatrixQ my = matq_mul(e.q, embed(e, x1), embed(e, x2));
    if (!(my == embed(e, y))) report.embed_consistent = false;
    if (y.is_zero() && zero_product_is_counterexample(x1, x2))
      report.counterexamples.push_back(print_element(x1, base) + " | " +
                                       print_element(x2, base));
  }
  return report;
}

} // namespace coxpath
