#include "doctest.h"
#include "oracles.hpp"

#include "cork/error.hpp"
#include "cork/mcg.hpp"

#include <numeric>
#include <random>

using namespace cork;
using namespace cork::mcg;

namespace {

std::vector<IntVector> vectors_of(const TwistWord& w) {
  std::vector<IntVector> out;
  for (const auto& l : w.letters) {
    REQUIRE(l.exponent == 1);
    out.push_back(l.curve.h1);
  }
  return out;
}

IntVector random_primitive(std::mt19937_64& rng, int genus) {
  std::uniform_int_distribution<int> entry(-4, 4);
  while (true) {
    IntVector v(2 * genus);
    std::int64_t g = 0;
    for (int i = 0; i < 2 * genus; ++i) {
      v(i) = entry(rng);
      g = std::gcd(g, std::abs(v(i)));
    }
    if (g == 1) return v;
  }
}

}  // namespace

TEST_CASE("transvection matches the intersection-form oracle") {
  std::mt19937_64 rng(3);
  for (int g = 1; g <= 3; ++g)
    for (int k = 0; k < 20; ++k) {
      const auto c = random_primitive(rng, g);
      CHECK(transvection(c) == oracle::twist_action({c}, g));
      CHECK(is_symplectic(transvection(c)));
      CHECK(pairing(c, c) == 0);
    }
}

TEST_CASE("chain relation on H1") {
  for (int g = 1; g <= 4; ++g) {
    CAPTURE(g);
    const auto full = chain_word(g, chain_exponent(g));
    CHECK(full.size() == static_cast<std::size_t>(2 * g * (4 * g + 2)));
    CHECK(is_identity(h1_action(full)));
    CHECK(is_identity(oracle::twist_action(vectors_of(full), g)));
    CHECK(verify_chain_relation(g));
  }
  CHECK_FALSE(is_identity(h1_action(chain_word(1, 5))));
}

TEST_CASE("chain curves meet in a chain") {
  for (int g = 1; g <= 4; ++g) {
    const auto cs = chain_curves(g);
    REQUIRE(cs.size() == static_cast<std::size_t>(2 * g));
    CHECK(cs[0].name == "beta1");
    for (std::size_t i = 0; i < cs.size(); ++i)
      for (std::size_t j = i + 1; j < cs.size(); ++j)
        CHECK(std::abs(oracle::intersection(cs[i].h1, cs[j].h1)) == (j == i + 1 ? 1 : 0));
  }
}

TEST_CASE("identify_with_beta1 is symplectic and sends a1 to c") {
  std::mt19937_64 rng(5);
  for (int g = 1; g <= 3; ++g)
    for (int k = 0; k < 20; ++k) {
      const auto c = make_curve("c", random_primitive(rng, g));
      const auto s = identify_with_beta1(c);
      CHECK(is_symplectic(s));
      IntVector e1 = IntVector::Zero(2 * g);
      e1(0) = 1;
      CHECK((s * e1) == c.h1);
    }
}

TEST_CASE("positive inverse of random primitive curves") {
  std::mt19937_64 rng(9);
  for (int g = 1; g <= 2; ++g)
    for (int k = 0; k < 10; ++k) {
      const auto c = make_curve("c", random_primitive(rng, g));
      const auto w = positive_inverse(c);
      CHECK(w.positive());
      CHECK(w.size() == static_cast<std::size_t>(2 * g * (4 * g + 2) - 1));
      CHECK(w.size() == positive_inverse_length(g));
      auto all = vectors_of(w);
      all.insert(all.begin(), c.h1);
      CHECK(is_identity(oracle::twist_action(all, g)));
    }
}

TEST_CASE("trivialize a positive word") {
  const auto w = parse_word("genus 2\ncurve x = [1,0,1,0]\nT(beta1) T(x) T(beta3)\n");
  const auto t = trivialize(w);
  CHECK(t.size() == 3 * positive_inverse_length(2));
  CHECK(is_identity(h1_action(w.then(t))));
  CHECK_THROWS_AS(trivialize(parse_word("genus 1\nT'(beta1)\n")), PreconditionError);
}

TEST_CASE("word documents") {
  const auto w = parse_word("genus 1\ncurve c = [1,1]\nT(beta1) T'(c) T(beta2)\n");
  CHECK(w.size() == 3);
  CHECK_FALSE(w.positive());
  CHECK(write_word(parse_word(write_word(w))) == write_word(w));
  CHECK_THROWS_AS(parse_word("genus 1\ncurve c = [2,2]\nT(c)\n"), Error);
  CHECK_THROWS_AS(parse_word("genus 1\nT(nope)\n"), ParseError);
  CHECK_THROWS_AS(make_curve("z", IntVector::Zero(2)), PreconditionError);
}
