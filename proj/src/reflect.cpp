#include "coxpath/reflect.hpp"

namespace coxpath {

QElement pairing_generator(const QuotientRing& ring, int r, int s, Domain d) {
  QElement out(d);
  if (r == s) {
    out.add_term(PathMono{{r}}, 2);
    return out;
  }
  const int m = ring.matrix.bond(r, s);
  if (m >= 3) out.add_term(alternating_path(r, s, 2), -1);
  return out;
}

namespace {

/* Sum over r of <alpha_r, alphacheck_s>; right-multiplying by it implements
 * the left reflection s. (and mirrored for the right action). */
QElement column_sum(const QuotientRing& ring, int s, Domain d) {
  QElement h(d);
  for (int r = 0; r < ring.matrix.size(); ++r) h += pairing_generator(ring, r, s, d);
  return h;
}

QElement row_sum(const QuotientRing& ring, int s, Domain d) {
  QElement h(d);
  for (int r = 0; r < ring.matrix.size(); ++r) h += pairing_generator(ring, s, r, d);
  return h;
}

} // namespace

QElement reflect_left(const QuotientRing& ring, int s, const QElement& m) {
  return m - qmul(ring, m, column_sum(ring, s, m.domain()));
}

QElement reflect_right(const QuotientRing& ring, const QElement& m, int s) {
  return m - qmul(ring, row_sum(ring, s, m.domain()), m);
}

QElement act_word(const QuotientRing& ring, const Word& w, const QElement& x, Side side) {
  QElement out = x;
  if (side == Side::Left) {
    for (auto it = w.rbegin(); it != w.rend(); ++it) out = reflect_left(ring, *it, out);
  } else {
    for (int s : w) out = reflect_right(ring, out, s);
  }
  return out;
}

QElement pairing(const QuotientRing& ring, const QElement& m, const QElement& mcheck) {
  QElement g(m.domain());
  for (int r = 0; r < ring.matrix.size(); ++r) g += column_sum(ring, r, m.domain());
  return qmul(ring, m, qmul(ring, g, mcheck));
}

} // namespace coxpath
