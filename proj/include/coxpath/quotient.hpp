#pragma once

#include <memory>

#include "coxpath/rewrite.hpp"

namespace coxpath {

/* A quotient of the path algebra presented by a confluent rewrite system.
 * Elements are plain LinComb<PathMono> kept in normal form by construction;
 * qmul is the only ring product that needs reduction. */
struct QuotientRing {
  CoxeterMatrix matrix;
  CoxGraph graph;
  RewriteSystem<PathMono> sys;
};

QuotientRing make_quotient(const CoxeterMatrix& m, RingTag tag);

using QElement = LinComb<PathMono>;

QElement reduce(const QuotientRing& ring, const QElement& x);
QElement qmul(const QuotientRing& ring, const QElement& a, const QElement& b);

/* Identity of the (unital when S is finite) quotient: the sum of the vertex
 * idempotents. */
QElement ring_one(const QuotientRing& ring, Domain d = Domain::Rationals);

/* The irreducible paths of length <= max_len, i.e. the paths avoiding every
 * alternating subword of 1 + phi(m_{r,s}) vertices (ring R) or m_{r,s}
 * vertices (ring Rtilde), enumerated combinatorially and sorted in the
 * admissible order.  from/to restrict the extremities when >= 0. */
std::vector<PathMono> enumerate_basis(const QuotientRing& ring, int max_len,
                                      int from = -1, int to = -1);

/* counts[len](r,s) = number of basis paths of that length from r to s. */
struct GradedRank {
  std::vector<std::vector<std::vector<long>>> counts;
  long total = 0;
};
GradedRank graded_rank(const QuotientRing& ring, int max_len);

/* Image of an element of Rtilde under the canonical surjection onto R. */
QElement surject_tilde_to_R(const QuotientRing& r_ring, const QElement& x);

} // namespace coxpath
