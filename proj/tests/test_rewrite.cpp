#include <random>

#include "coxpath/parse.hpp"
#include "coxpath/rewrite.hpp"
#include "doctest.h"
#include "testutil.hpp"

using namespace coxpath;

namespace {

PathMono walk(const CoxGraph& g, std::mt19937_64& rng, int len) {
  PathMono p;
  p.syms.push_back(testutil::below(rng, g.nverts));
  for (int k = 0; k < len; ++k) {
    const auto& nb = g.neighbors[p.syms.back()];
    if (nb.empty()) break;
    p.syms.push_back(nb[testutil::below(rng, static_cast<int>(nb.size()))]);
  }
  return p;
}

const RewriteRule<PathMono>* rule_with_tip(const RewriteSystem<PathMono>& sys,
                                           const PathMono& tip) {
  for (const auto& r : sys.rules())
    if (r.tip == tip) return &r;
  return nullptr;
}

} // namespace

TEST_CASE("add_rule rejects malformed rules") {
  RewriteSystem<PathMono> sys;
  CHECK_THROWS_AS(sys.add_rule({PathMono{}, {}}), std::invalid_argument);

  // Replacement at or above the tip.
  LinComb<PathMono> big(PathMono{{0, 1, 0}}, 1);
  CHECK_THROWS_AS(sys.add_rule({PathMono{{0, 1}}, big}), std::invalid_argument);
  CHECK_THROWS_AS(sys.add_rule({PathMono{{0, 1}}, LinComb<PathMono>(PathMono{{0, 1}}, 1)}),
                  std::invalid_argument);

  // Path rules must preserve extremities.
  CHECK_THROWS_AS(sys.add_rule({PathMono{{0, 1, 0}}, LinComb<PathMono>(PathMono{{1}}, 1)}),
                  std::invalid_argument);
  CHECK_NOTHROW(sys.add_rule({PathMono{{0, 1, 0}}, LinComb<PathMono>(PathMono{{0}}, 1)}));

  // Word rules have no extremities to preserve.
  RewriteSystem<WordMono> wsys;
  CHECK_NOTHROW(wsys.add_rule({WordMono{{0, 1}}, LinComb<WordMono>(WordMono{}, 1)}));
}

TEST_CASE("redex search") {
  RewriteSystem<PathMono> sys;
  sys.add_rule({PathMono{{0, 1, 0}}, LinComb<PathMono>(PathMono{{0}}, 1)});
  sys.add_rule({PathMono{{1, 0, 1}}, LinComb<PathMono>(PathMono{{1}}, 1)});

  const PathMono host{{1, 0, 1, 0, 1}};
  CHECK(sys.match_at(host, 0) == 1);
  CHECK(sys.match_at(host, 1) == 0);
  CHECK(sys.match_at(host, 3) == -1);
  CHECK(*sys.find_redex(host) == std::make_pair(0, 1));
  CHECK(*sys.find_redex(host, /*leftmost=*/false) == std::make_pair(2, 1));
  CHECK(sys.is_irreducible(PathMono{{0, 1}}));
  CHECK(!sys.is_irreducible(host));
}

TEST_CASE("normal forms in dihedral quotients") {
  const auto nf = [](const char* sysname, const char* expr) {
    const CoxeterMatrix m = preset(sysname);
    const auto sys = rules_for_R(m);
    return print_element(normal_form(parse_element(expr, m), sys), m);
  };
  CHECK(nf("I2(4)", "[r,s,r]") == "2*[r]");
  CHECK(nf("I2(4)", "[r,s,r,s]") == "2*[r,s]");
  CHECK(nf("I2(5)", "[r,s,r,s,r,s]") == "3*[r,s,r,s] - [r,s]");
  CHECK(nf("I2(5)", "[r,s,r] - [r,s,r]") == "0");
}

TEST_CASE("relators of the dihedral rule systems") {
  const CoxeterMatrix m = preset("I2(5)");
  const auto sys = rules_for_R(m);
  REQUIRE(sys.rules().size() == 2);
  const auto* r = rule_with_tip(sys, alternating_path(0, 1, 5));
  REQUIRE(r != nullptr);
  CHECK(print_element(r->repl, m) == "3*[r,s,r] - [r]");

  // For a prime bond the lax and strict relators coincide.
  const auto lax = rules_for_Rtilde(m);
  REQUIRE(lax.rules().size() == 2);
  const auto* lr = rule_with_tip(lax, alternating_path(0, 1, 5));
  REQUIRE(lr != nullptr);
  CHECK(lr->repl == r->repl);

  // For m = 6 the strict tip is short (deg C_6 = 1), the lax tip is the
  // full alternating path on 6 vertices.
  const CoxeterMatrix g2 = preset("I2(6)");
  CHECK(rules_for_R(g2).rules()[0].tip.syms.size() == 3);
  CHECK(rules_for_Rtilde(g2).rules()[0].tip.syms.size() == 6);

  // Infinite bonds contribute no relator at all.
  CHECK(rules_for_R(preset("universal")).rules().empty());
}

TEST_CASE("both reduction strategies give the same normal form") {
  std::mt19937_64 rng(0x5eed0001);
  for (const auto& name : testutil::preset_names()) {
    const CoxeterMatrix m = preset(name);
    const CoxGraph g = build_graph(m);
    const auto sys = rules_for_R(m);
    for (int it = 0; it < 60; ++it) {
      QElement x;
      for (int t = 0; t < 3; ++t)
        x.add_term(walk(g, rng, testutil::below(rng, 9)), testutil::below(rng, 11) - 5);
      const QElement a = normal_form(x, sys, ReduceOrder::LeftmostLargest);
      const QElement b = normal_form(x, sys, ReduceOrder::RightmostSmallest);
      CHECK(a == b);
      CHECK(normal_form(a, sys) == a);
      for (const auto& [mono, c] : a.terms()) CHECK(sys.is_irreducible(mono));
    }
  }
}

TEST_CASE("overlap certificate on a single dihedral pair") {
  const auto sys = rules_for_R(preset("A2"));
  const auto all = verify_overlaps(sys, /*include_resolved=*/true);

  // [s1,s2,s1] against [s2,s1,s2] in both orders; the self-overlaps divide
  // their own cofactors and are excluded from the certificate.
  CHECK(all.size() == 2);
  for (const auto& ov : all) CHECK(ov.residue.is_zero());
  CHECK(verify_overlaps(sys).empty());
  CHECK(overlaps_resolve(sys));
}

TEST_CASE("an incomplete system fails the certificate") {
  // aa -> 1 and ab -> 1 disagree on aab; the surviving residue is a - b.
  RewriteSystem<WordMono> sys;
  sys.add_rule({WordMono{{0, 0}}, word_one()});
  sys.add_rule({WordMono{{0, 1}}, word_one()});
  const auto bad = verify_overlaps(sys);
  REQUIRE(bad.size() == 1);
  LinComb<WordMono> expected(WordMono{{0}}, 1);
  expected.add_term(WordMono{{1}}, -1);
  CHECK(bad[0].residue == expected);
  CHECK(!overlaps_resolve(sys));
}
