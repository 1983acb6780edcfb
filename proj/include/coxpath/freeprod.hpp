#pragma once

#include <cstdint>
#include <string>

#include "coxpath/quotient.hpp"

namespace coxpath {

/* The coefficient ring Q: the free product, over the rationals, of one
 * Laurent-like factor per positive edge y of the base graph, with letters
 * x_y, xbar_y subject to C_m(x_y xbar_y) = C_m(xbar_y x_y) = 0 for finite
 * bonds.  Words reduce by the same engine as paths. */
struct FreeProductRing {
  CoxeterMatrix base;
  CoxGraph graph;
  RewriteSystem<WordMono> sys;
};

using FPElement = LinComb<WordMono>;

FreeProductRing make_q_ring(const CoxeterMatrix& base);
RewriteSystem<WordMono> q_system(const CoxeterMatrix& base);

FPElement q_reduce(const FreeProductRing& q, const FPElement& x);
FPElement q_mul(const FreeProductRing& q, const FPElement& a, const FPElement& b);

/* xbar_y h(x_y xbar_y), the two-sided inverse of x_y in Q obtained from
 * C_m(t) = kappa (t h(t) - 1); defined for finite bonds only. */
FPElement edge_inverse(const FreeProductRing& q, int edge);

/* Everything needed to embed the rational quotient ring of the base system
 * into (N+1)x(N+1) matrices over Q: the extension by an apex generator
 * (bond 3 to everyone, last index), its quotient ring, and Q itself. */
struct ApexEmbedding {
  CoxeterMatrix base;
  QuotientRing ext; // ring R of the apex extension, rational coefficients
  FreeProductRing q;
  int apex; // = base.size()
};

ApexEmbedding make_embedding(const CoxeterMatrix& base);

/* Square matrix over Q. */
class MatrixQ {
public:
  MatrixQ() = default;
  explicit MatrixQ(int n) : n_(n), e_(n * n) {}
  int size() const { return n_; }
  FPElement& at(int i, int j) { return e_[i * n_ + j]; }
  const FPElement& at(int i, int j) const { return e_[i * n_ + j]; }
  bool is_zero() const;
  bool operator==(const MatrixQ& o) const { return n_ == o.n_ && e_ == o.e_; }

private:
  int n_ = 0;
  std::vector<FPElement> e_;
};

MatrixQ matq_mul(const FreeProductRing& q, const MatrixQ& a, const MatrixQ& b);

/* P_i^j: the reduced image of the path i -> apex -> j (collapsing repeats);
 * these satisfy P_i^i = [s_i] and P_i^j P_k^l = delta_{jk} P_i^l. */
QElement apex_P(const ApexEmbedding& e, int i, int j);

/* psi_i: Q -> [s_i] Rext [s_i], with 1 -> [s_i] and
 * x_y -> P_i^{o(y)} y P_{t(y)}^i (and the barred letter via the reversed
 * edge). */
QElement psi(const ApexEmbedding& e, int i, const FPElement& x);

/* Phi: Rext -> M_{N+1}(Q): [s_i] -> e_ii, a forward base edge -> x_y e_ij,
 * a reversed one -> xbar_y e_ji, apex edges -> e_ij. Psi is its inverse. */
MatrixQ Phi(const ApexEmbedding& e, const QElement& x);
QElement Psi(const ApexEmbedding& e, const MatrixQ& m);

/* The composite of the inclusion into the apex extension with Phi; injective
 * on the base quotient ring. */
MatrixQ embed(const ApexEmbedding& e, const QElement& x);

/* A zero product x1 x2 = 0 only witnesses a zero divisor when both factors
 * are nonzero, supported on single components [r]R[s] and [s']R[t], and the
 * middle idempotents agree. */
bool zero_product_is_counterexample(const QElement& x1, const QElement& x2);

struct DomainCheckReport {
  std::uint64_t seed = 0;
  int trials = 0;
  int max_len = 0;
  int coeff_bound = 0;
  int performed = 0;                      // trials that sampled a composable pair
  std::vector<std::string> counterexamples; // rendered "x1 | x2" pairs
  bool embed_consistent = true; // embed(x1 x2) == embed(x1) embed(x2) throughout
  bool ok() const { return counterexamples.empty() && embed_consistent; }
};

/* Random nonzero x1 in [r]Rhat[s], x2 in [s]Rhat[t] with basis support of
 * length <= max_len and integer coefficients in [-coeff_bound, coeff_bound];
 * reports every vanishing product, cross-checking each product against the
 * matrix embedding. */
DomainCheckReport near_domain_check(const CoxeterMatrix& base, int trials, int max_len,
                                    int coeff_bound, std::uint64_t seed);

} // namespace coxpath
