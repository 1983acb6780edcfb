#include "coxpath/quotient.hpp"

#include <algorithm>

#include "coxpath/intpoly.hpp"

namespace coxpath {

QuotientRing make_quotient(const CoxeterMatrix& m, RingTag tag) {
  QuotientRing ring{m, build_graph(m), RewriteSystem<PathMono>(tag)};
  switch (tag) {
    case RingTag::P: break; // no relations
    case RingTag::R: ring.sys = rules_for_R(m); break;
    case RingTag::Rtilde: ring.sys = rules_for_Rtilde(m); break;
    case RingTag::Q: throw std::invalid_argument("make_quotient: Q is not a path quotient");
  }
  return ring;
}

QElement reduce(const QuotientRing& ring, const QElement& x) {
  return normal_form(x, ring.sys);
}

QElement qmul(const QuotientRing& ring, const QElement& a, const QElement& b) {
  QElement out = normal_form(mul(a, b), ring.sys);
  if (out.domain() == Domain::Integers && !out.integral())
    throw std::logic_error("qmul: integer mode lost closure");
  return out;
}

QElement ring_one(const QuotientRing& ring, Domain d) {
  QElement one(d);
  for (int v = 0; v < ring.graph.nverts; ++v) one.add_term(PathMono{{v}}, 1);
  return one;
}

namespace {

/* Number of vertices of the shortest forbidden alternating subword on the
 * pair {a,b}, or kInfinity when nothing is forbidden. */
int forbidden_nsyms(const CoxeterMatrix& m, RingTag tag, int a, int b) {
  if (tag == RingTag::P) return kInfinity;
  const int bond = m.bond(a, b);
  if (bond < 3 || bond == kInfinity) return kInfinity;
  return tag == RingTag::R ? 1 + euler_phi(bond) : bond;
}

void extend(const QuotientRing& ring, PathMono& path, int alt_run, int max_len, int to,
            std::vector<PathMono>& out) {
  if (to < 0 || path.terminus() == to) out.push_back(path);
  if (path.length() >= max_len) return;
  const int last = path.terminus();
  for (int next : ring.graph.neighbors[last]) {
    const int nsyms = static_cast<int>(path.syms.size());
    const int run = (nsyms >= 2 && path.syms[nsyms - 2] == next) ? alt_run + 1 : 2;
    if (run >= forbidden_nsyms(ring.matrix, ring.sys.tag(), last, next)) continue;
    path.syms.push_back(next);
    extend(ring, path, run, max_len, to, out);
    path.syms.pop_back();
  }
}

} // namespace

std::vector<PathMono> enumerate_basis(const QuotientRing& ring, int max_len, int from,
                                      int to) {
  if (ring.sys.tag() != RingTag::R && ring.sys.tag() != RingTag::Rtilde &&
      ring.sys.tag() != RingTag::P)
    throw std::invalid_argument("enumerate_basis: unsupported ring");
  std::vector<PathMono> out;
  for (int v = 0; v < ring.graph.nverts; ++v) {
    if (from >= 0 && v != from) continue;
    PathMono path{{v}};
    extend(ring, path, 1, max_len, to, out);
  }
  std::sort(out.begin(), out.end(), LlexLess<PathMono>{});
  return out;
}

GradedRank graded_rank(const QuotientRing& ring, int max_len) {
  const int n = ring.graph.nverts;
  GradedRank gr;
  gr.counts.assign(max_len + 1,
                   std::vector<std::vector<long>>(n, std::vector<long>(n, 0)));
  for (const PathMono& p : enumerate_basis(ring, max_len)) {
    ++gr.counts[p.length()][p.origin()][p.terminus()];
    ++gr.total;
  }
  return gr;
}

QElement surject_tilde_to_R(const QuotientRing& r_ring, const QElement& x) {
  if (r_ring.sys.tag() != RingTag::R)
    throw std::invalid_argument("surject_tilde_to_R: target must be ring R");
  return reduce(r_ring, x);
}

} // namespace coxpath
