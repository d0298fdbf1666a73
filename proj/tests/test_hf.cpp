#include "doctest.h"
#include "oracles.hpp"

#include "cork/error.hpp"
#include "cork/hf.hpp"

#include <random>

using namespace cork;
using namespace cork::hf;

TEST_CASE("HF of the 3-sphere") {
  for (int n = -20; n <= 20; ++n) {
    CAPTURE(n);
    const bool even = n % 2 == 0;
    CHECK(hf_s3(Version::plus, n).rank == (even && n >= 0 ? 1 : 0));
    CHECK(hf_s3(Version::minus, n).rank == (even && n <= -2 ? 1 : 0));
    CHECK(hf_s3_module(Version::plus).tower_rank(n) == hf_s3(Version::plus, n).rank);
    CHECK(hf_s3_module(Version::minus).tower_rank(n) == hf_s3(Version::minus, n).rank);
  }
  CHECK(theta(Version::minus, -2).grading == Rational(-2));
  CHECK_THROWS_AS(theta(Version::plus, -2), PreconditionError);
}

TEST_CASE("degree shift against the oracle") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> v(-50, 50);
  for (int k = 0; k < 20; ++k) {
    const Rational c(v(rng)), s(v(rng)), x(v(rng));
    CHECK(degree_shift(c, s, x) == oracle::degree_shift(c, s, x));
  }
  const Rational zero(0), one(1);
  CHECK(degree_shift(one, zero, zero) - degree_shift(zero, zero, zero) == Rational(1, 4));
  CHECK(degree_shift(zero, one, zero) - degree_shift(zero, zero, zero) == Rational(-3, 4));
  CHECK(degree_shift(zero, zero, one) - degree_shift(zero, zero, zero) == Rational(-1, 2));
}

TEST_CASE("canonical class on a closed manifold has zero shift") {
  for (int chi = -10; chi <= 300; chi += 7)
    for (int sigma = -5; sigma <= 5; ++sigma)
      CHECK(degree_shift(Rational(canonical_c1_squared(chi, sigma)), Rational(sigma), Rational(chi)) == 0);
}

TEST_CASE("adjunction against the inequality") {
  for (int g = 0; g <= 3; ++g)
    for (int self = -2; self <= 4; ++self)
      for (int p = -6; p <= 6; ++p) {
        const auto a = adjunction(g, self, p);
        if (g < 1 || self < 0) {
          CHECK(a == Adjunction::not_applicable);
          CHECK_THROWS_AS(adjunction_violated(g, self, p), RuleNotApplicable);
        } else {
          CHECK((a == Adjunction::violated) == (std::abs(p) + self > 2 * g - 2));
          CHECK(adjunction_violated(g, self, p) == (std::abs(p) + self > 2 * g - 2));
        }
      }
  for (int p = -6; p <= 6; ++p) CHECK(adjunction(1, 1, p) == Adjunction::violated);
  try {
    adjunction_violated(0, 1, 0);
    FAIL("expected RuleNotApplicable");
  } catch (const RuleNotApplicable& e) {
    CHECK(std::string(e.what()) == "adjunction rule not applicable (g ≥ 1 fails)");
  }
}

TEST_CASE("composition counts gluings") {
  const MapRecord f{"F", "A", "B", 1, false}, g{"G", "B", "C", 1, false};
  CHECK(compose(f, g).size() == 1);
  const MapRecord h{"H", "B", "C", 3, false};
  CHECK(compose(f, h).size() == 3);
  CHECK_THROWS_AS(compose(g, f), PreconditionError);
}
