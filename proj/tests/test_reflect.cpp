#include <random>

#include "coxpath/parse.hpp"
#include "coxpath/reflect.hpp"
#include "doctest.h"
#include "testutil.hpp"

using namespace coxpath;

namespace {

Word reversed(Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}

} // namespace

TEST_CASE("generator formulas") {
  const CoxeterMatrix a2 = preset("A2");
  const QuotientRing ring = make_quotient(a2, RingTag::R);
  auto str = [&](const QElement& x) { return print_element(x, a2); };

  CHECK(str(reflect_left(ring, 0, parse_element("[s1]", a2))) == "-[s1]");
  CHECK(str(reflect_left(ring, 0, parse_element("[s2]", a2))) == "[s2,s1] + [s2]");
  CHECK(str(reflect_right(ring, parse_element("[s1]", a2), 0)) == "-[s1]");
  CHECK(str(reflect_right(ring, parse_element("[s2]", a2), 0)) == "[s1,s2] + [s2]");

  // Bond 2 means no interaction beyond the sign on the fixed generator.
  const CoxeterMatrix re = preset("running-example");
  const QuotientRing ring2 = make_quotient(re, RingTag::R);
  CHECK(reflect_left(ring2, 2, parse_element("[r]", re)) == parse_element("[r]", re));
}

TEST_CASE("pairing of generators") {
  const CoxeterMatrix re = preset("running-example");
  const QuotientRing ring = make_quotient(re, RingTag::R);
  auto str = [&](const QElement& x) { return print_element(x, re); };

  CHECK(str(pairing_generator(ring, 0, 0)) == "2*[r]");
  CHECK(str(pairing_generator(ring, 0, 1)) == "-[r,s]");
  CHECK(pairing_generator(ring, 0, 2).is_zero()); // m_{rt} = 2

  const CoxeterMatrix a2 = preset("A2");
  const QuotientRing r2 = make_quotient(a2, RingTag::R);
  CHECK(print_element(pairing(r2, parse_element("[s1,s2]", a2), parse_element("[s2]", a2)),
                      a2) == "2*[s1,s2]");
}

TEST_CASE("generators act as involutions") {
  std::mt19937_64 rng(0x5eed0006);
  for (const auto& name : testutil::preset_names()) {
    const QuotientRing ring = make_quotient(preset(name), RingTag::R);
    const auto basis = enumerate_basis(ring, 5);
    const int n = ring.matrix.size();
    for (int it = 0; it < 25; ++it) {
      const QElement x = testutil::random_element(ring, basis, rng);
      const int s = testutil::below(rng, n);
      CHECK(reflect_left(ring, s, reflect_left(ring, s, x)) == x);
      CHECK(reflect_right(ring, reflect_right(ring, x, s), s) == x);
    }
  }
}

TEST_CASE("braid relations hold for every finite bond") {
  std::mt19937_64 rng(0x5eed0007);
  for (const auto& name : testutil::preset_names()) {
    const CoxeterMatrix mat = preset(name);
    const QuotientRing ring = make_quotient(mat, RingTag::R);
    const auto basis = enumerate_basis(ring, 5);
    for (int i = 0; i < mat.size(); ++i)
      for (int j = i + 1; j < mat.size(); ++j) {
        const int m = mat.bond(i, j);
        if (m == kInfinity) continue;
        Word lhs, rhs;
        for (int k = 0; k < m; ++k) {
          lhs.push_back(k % 2 == 0 ? i : j);
          rhs.push_back(k % 2 == 0 ? j : i);
        }
        for (int it = 0; it < 10; ++it) {
          const QElement x = testutil::random_element(ring, basis, rng);
          CHECK(act_word(ring, lhs, x, Side::Left) == act_word(ring, rhs, x, Side::Left));
          CHECK(act_word(ring, lhs, x, Side::Right) == act_word(ring, rhs, x, Side::Right));
        }
      }
  }
}

TEST_CASE("left and right actions commute") {
  std::mt19937_64 rng(0x5eed0008);
  for (const char* name : {"B2", "I2(5)", "running-example"}) {
    const QuotientRing ring = make_quotient(preset(name), RingTag::R);
    const auto basis = enumerate_basis(ring, 5);
    const int n = ring.matrix.size();
    for (int it = 0; it < 40; ++it) {
      const QElement x = testutil::random_element(ring, basis, rng);
      const Word w = testutil::random_word(rng, n, 4);
      const Word v = testutil::random_word(rng, n, 4);
      CHECK(act_word(ring, w, act_word(ring, v, x, Side::Right), Side::Left) ==
            act_word(ring, v, act_word(ring, w, x, Side::Left), Side::Right));
    }
  }
}

TEST_CASE("the pairing is invariant under the diagonal action") {
  std::mt19937_64 rng(0x5eed0009);
  for (const auto& name : testutil::preset_names()) {
    const QuotientRing ring = make_quotient(preset(name), RingTag::R);
    const auto basis = enumerate_basis(ring, 4);
    const int n = ring.matrix.size();
    for (int it = 0; it < 50; ++it) {
      const QElement m = testutil::random_element(ring, basis, rng);
      const QElement mc = testutil::random_element(ring, basis, rng);
      const Word w = testutil::random_word(rng, n, 5);
      CHECK(pairing(ring, act_word(ring, w, m, Side::Left),
                    act_word(ring, reversed(w), mc, Side::Right)) == pairing(ring, m, mc));
    }
  }
}

TEST_CASE("acting on the second slot by the left action breaks the pairing") {
  // Pins the module convention: the second slot carries the right-module
  // structure, so pushing the left action through both slots must fail.
  const CoxeterMatrix a2 = preset("A2");
  const QuotientRing ring = make_quotient(a2, RingTag::R);
  const QElement m = parse_element("[s1]", a2);
  const QElement mc = parse_element("[s2]", a2);
  const QElement before = pairing(ring, m, mc);
  CHECK(print_element(before, a2) == "-[s1,s2]");

  const QElement wrong = pairing(ring, reflect_left(ring, 0, m), reflect_left(ring, 0, mc));
  CHECK(wrong != before);
  const QElement right = pairing(ring, reflect_left(ring, 0, m),
                                 reflect_right(ring, mc, 0));
  CHECK(right == before);
}
