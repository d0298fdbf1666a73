#include "doctest.h"
#include "fixture_io.hpp"
#include "oracles.hpp"

#include "cork/error.hpp"
#include "cork/kirby.hpp"

#include <random>

using namespace cork;
using namespace cork::kirby;

TEST_CASE("clasped pairs: boundary homology matches the oracle") {
  for (int n = 0; n <= 5; ++n) {
    CAPTURE(n);
    const auto d = parse_diagram(oracle::clasped_pair(n));
    const auto r = homology(d);
    const auto [free, torsion] = oracle::cokernel(r.linking_matrix);
    CHECK(r.h_of_boundary[1].free_rank == free);
    CHECK(r.h_of_boundary[1].torsion == torsion);
    const std::vector<std::int64_t> expected =
        n >= 2 ? std::vector<std::int64_t>{n, n} : std::vector<std::int64_t>{};
    CHECK(r.h_of_boundary[1].torsion == expected);
    CHECK(r.h_of_boundary[1].free_rank == (n == 0 ? 2 : 0));
    CHECK(r.is_homology_sphere == (n == 1));
    CHECK(r.is_contractible == (n == 1));
  }
}

TEST_CASE("homology sphere iff the surgery matrix is unimodular") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    IntMatrix b(2, 2);
    b << 0, entry(rng), 0, entry(rng);
    b(1, 0) = b(0, 1);
    IntMatrix attaching(1, 1);
    attaching << b(0, 1);
    const auto r = homology_from_matrices(b, attaching);
    const auto det = determinant(b);
    CHECK(r.is_homology_sphere == (det == 1 || det == -1));
  }
}

TEST_CASE("W1 fixture") {
  const auto d = parse_diagram(fixture("w1.diagram"));
  CHECK(d.dotted() == std::vector<std::string>{"K1"});
  CHECK(d.framed() == std::vector<std::string>{"K2"});
  CHECK(verify_involution(d).verified);
  const auto r = check_admissible(d, 8);
  CHECK(r.admissible());
  CHECK(r.linking == 1);
  CHECK(r.stein_tb == 1);
  CHECK(homology(d).is_contractible);
  // Six crossings between the components, three pairs exchanged by the involution.
  int between = 0;
  for (const auto& x : d.front.crossings())
    if (x.over != x.under) ++between;
  CHECK(between == 6);
}

TEST_CASE("Hopf fixture fails only the tb condition") {
  const auto r = check_admissible(parse_diagram(fixture("hopf.diagram")), 8);
  CHECK(r.cond2);
  CHECK(r.cond3);
  CHECK_FALSE(r.cond4prime);
  CHECK(r.stein_tb == 0);
  CHECK_FALSE(r.admissible());
  CHECK_FALSE(r.inconclusive());
}

TEST_CASE("knotted component is inconclusive at budget 0") {
  const auto r = check_admissible(parse_diagram(fixture("knotted.diagram")), 0);
  CHECK(r.inconclusive());
  CHECK_FALSE(r.admissible());
  CHECK(to_json(r)["verdict"] == "inconclusive");
}

TEST_CASE("clasped pair with two clasps fails the linking condition") {
  auto text = oracle::clasped_pair(2);
  auto r = check_admissible(parse_diagram(text), 4);
  CHECK_FALSE(r.cond3);
  CHECK(r.linking == 2);
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(check_admissible(parse_diagram(fixture("w1.diagram")), -1), PreconditionError);
  CHECK_THROWS_AS(cork_twist(parse_diagram(fixture("knotted.diagram"))), PreconditionError);
  CHECK_THROWS_AS(parse_diagram("arc A : (0,0) (1,1) (2,0) (1,-1) (0,0)\n"), ParseError);
  CHECK_THROWS_AS(parse_diagram("arc A : (0,0) (1,1) (2,0) (1,-1) (0,0)\ndot A\ndot A\n"), ParseError);
}

TEST_CASE("a broken symmetry is not verified") {
  auto text = fixture("w1.diagram");
  const auto pos = text.find("rot180 (0,0)");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 12, "rot180 (1,0)");
  CHECK_FALSE(verify_involution(parse_diagram(text)).verified);
}

TEST_CASE("cork twist is an involution and preserves homology") {
  const auto d = parse_diagram(fixture("w1.diagram"));
  const auto t = cork_twist(d);
  CHECK(t.decorations.at("K1").dotted == false);
  CHECK(t.decorations.at("K2").dotted == true);
  CHECK(write_diagram(cork_twist(t)) == write_diagram(d));
  CHECK(homology(t) == homology(d));
}

TEST_CASE("trefoil inflation: Stein before the twist, not after") {
  const auto d = parse_diagram(fixture("w1.diagram"));
  const auto spec = parse_inflation(fixture("trefoil.inflation"));
  const auto before = inflate(d, spec.untwisted, spec.component, spec.framing, spec.knot);
  CHECK(before.stein.tb == 2);
  CHECK(before.stein.pass);
  const auto after = inflate(cork_twist(d), spec.twisted, spec.component, spec.framing, spec.knot);
  CHECK_FALSE(after.stein.pass);
  CHECK(after.stein.reason == "framing 1 ≠ tb − 1 for exhibited tb ≤ 1");
  CHECK_THROWS_AS(inflate(cork_twist(d), spec.untwisted, spec.component, spec.framing, spec.knot), PreconditionError);
}

TEST_CASE("stabilization never rescues a framing above tb - 1") {
  const auto spec = parse_inflation(fixture("trefoil.inflation"));
  for (int framing = -3; framing <= 3; ++framing) {
    auto front = spec.untwisted;
    bool too_high = framing > front.tb("T") - 1;
    for (int k = 0; k < 5; ++k) {
      front = front::stabilize(front, "T", k % 2 == 0);
      const auto v = stein_check(front, "T", framing);
      if (too_high) CHECK_FALSE(v.pass);
      CHECK(v.pass == (framing == 2 - (k + 1) - 1));
      too_high = too_high || v.pass;
    }
  }
}

TEST_CASE("plane maps compose left to right") {
  const auto m = parse_plane_map("translate (1,0); reflect-x 0");
  const auto p = m.apply({Rational(2), Rational(3)});
  CHECK(p.x == -3);
  CHECK(p.y == 3);
  CHECK(parse_plane_map("rot180 (1,1); rot180 (1,1)").is_identity());
}
