// One line per acceptance criterion; exit status is the number of failures.

#include "certificate_mutation.hpp"
#include "fixture_io.hpp"
#include "oracles.hpp"

#include "cork/certificate.hpp"
#include "cork/cli.hpp"
#include "cork/error.hpp"
#include "cork/fillings.hpp"
#include "cork/front.hpp"
#include "cork/hf.hpp"
#include "cork/kirby.hpp"
#include "cork/mcg.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

using namespace cork;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::string note;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      note = what;
    }
  }
};

IntVector random_primitive(std::mt19937_64& rng, int genus) {
  std::uniform_int_distribution<int> entry(-5, 5);
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

Outcome chain_relation() {
  Outcome o;
  const auto t0 = Clock::now();
  for (int g = 1; g <= 4; ++g) {
    const auto w = mcg::chain_word(g, 4 * g + 2);
    o.require(is_identity(mcg::h1_action(w)), "relator not identity at g=" + std::to_string(g));
    std::vector<IntVector> curves;
    for (const auto& l : w.letters) curves.push_back(l.curve.h1);
    o.require(is_identity(oracle::twist_action(curves, g)), "oracle disagrees at g=" + std::to_string(g));
  }
  o.require(!is_identity(mcg::h1_action(mcg::chain_word(1, 5))), "(4g+1)-power is the identity at g=1");
  o.require(seconds_since(t0) < 1.0, "slower than 1 s");
  return o;
}

Outcome positive_inversion() {
  Outcome o;
  const auto t0 = Clock::now();
  std::mt19937_64 rng(2024);
  for (int g = 1; g <= 2; ++g)
    for (int k = 0; k < 10; ++k) {
      const auto c = mcg::make_curve("c", random_primitive(rng, g));
      const auto w = mcg::positive_inverse(c);
      o.require(w.positive(), "word not positive");
      o.require(w.size() == static_cast<std::size_t>(2 * g * (4 * g + 2) - 1), "wrong length");
      mcg::TwistWord tc{g, {{c, 1}}};
      o.require(is_identity(mcg::h1_action(tc.then(w))), "t_c w is not the identity");
    }
  o.require(seconds_since(t0) < 1.0, "slower than 1 s");
  return o;
}

Outcome tb_arithmetic() {
  Outcome o;
  const auto lens = front::parse_front(fixture("lens.front"));
  const auto trefoil = front::parse_front(fixture("trefoil_tb1.front"));
  o.require(lens.tb("U") == -1, "lens tb");
  o.require(trefoil.tb("T") == 1, "trefoil tb");
  for (auto [d, c] : {std::pair{lens, std::string("U")}, std::pair{trefoil, std::string("T")}}) {
    const int base = d.tb(c);
    for (int k = 1; k <= 10; ++k) {
      d = front::stabilize(d, c, k % 2 == 1);
      o.require(d.tb(c) == base - k, "stabilization " + std::to_string(k) + " of " + c);
    }
  }
  return o;
}

Outcome homology_of_clasped_pairs() {
  Outcome o;
  for (int n = 0; n <= 5; ++n) {
    const auto d = kirby::parse_diagram(oracle::clasped_pair(n));
    const auto r = kirby::homology(d);
    const auto [free, torsion] = oracle::cokernel(r.linking_matrix);
    const auto [a, b] = oracle::clasped_pair_polygons(n);
    o.require(oracle::linking_of_polygons(a, b) == n, "oracle linking at n=" + std::to_string(n));
    o.require(r.linking_matrix(0, 1) == n, "linking matrix at n=" + std::to_string(n));
    o.require(r.h_of_boundary[1].free_rank == free && r.h_of_boundary[1].torsion == torsion,
              "smith form disagrees at n=" + std::to_string(n));
    const AbelianGroup expected = n == 0 ? AbelianGroup{2, {}} : n == 1 ? AbelianGroup{} : AbelianGroup{0, {n, n}};
    o.require(r.h_of_boundary[1] == expected, "H1 is not Z/n + Z/n at n=" + std::to_string(n));
    o.require(r.is_homology_sphere == (n == 1) && r.is_contractible == (n == 1), "flags at n=" + std::to_string(n));
  }
  return o;
}

Outcome stein_framing_rule() {
  Outcome o;
  const auto d = kirby::parse_diagram(fixture("w1.diagram"));
  const auto spec = kirby::parse_inflation(fixture("trefoil.inflation"));
  const auto before = kirby::inflate(d, spec.untwisted, spec.component, spec.framing, spec.knot);
  o.require(before.stein.tb == 2 && before.stein.framing == 1 && before.stein.pass, "untwisted side does not pass");
  const auto after = kirby::inflate(kirby::cork_twist(d), spec.twisted, spec.component, spec.framing, spec.knot);
  o.require(!after.stein.pass, "twisted side passes");
  o.require(after.stein.reason == "framing 1 ≠ tb − 1 for exhibited tb ≤ 1", "reason: " + after.stein.reason);
  return o;
}

Outcome filling_tallies() {
  Outcome o;
  const auto palf = fillings::parse_palf("genus 2\ncurve x = [1,1,0,0]\nT(beta1) T(beta2) T(x)\n");
  const auto plan = fillings::build_concave(fillings::palf_to_openbook(palf));
  const int g = plan.fiber_genus;
  const auto by_formula = static_cast<int>(plan.monodromy.size()) * (2 * g * (4 * g + 2) - 1);
  o.require(g == 2 && plan.monodromy.size() == 3, "setup");
  o.require(static_cast<int>(plan.trivializing_handles.size()) == 117 && by_formula == 117, "handle count");
  int enumerated = 0;
  for (const auto& c : fillings::enumerate_handles(plan)) enumerated += c.index % 2 ? -1 : 1;
  o.require(plan.euler_char == 116 && enumerated == 116, "euler characteristic");
  o.require(1 + by_formula + 2 - 2 * g == 116, "closed-form tally");
  return o;
}

Outcome degree_formula() {
  Outcome o;
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> v(-100, 100);
  for (int k = 0; k < 20; ++k) {
    const Rational c(v(rng)), s(v(rng)), x(v(rng));
    o.require(hf::degree_shift(c, s, x) == oracle::degree_shift(c, s, x), "random triple " + std::to_string(k));
  }
  const Rational z(0), one(1);
  const auto base = hf::degree_shift(z, z, z);
  o.require(hf::degree_shift(one, z, z) - base == Rational(1, 4), "c1^2 coefficient");
  o.require(hf::degree_shift(z, one, z) - base == Rational(-3, 4), "sigma coefficient");
  o.require(hf::degree_shift(z, z, one) - base == Rational(-1, 2), "chi coefficient");
  return o;
}

Outcome adjunction_rule() {
  Outcome o;
  for (int g = 0; g <= 3; ++g)
    for (int self = -4; self <= 4; ++self)
      for (int p = -6; p <= 6; ++p) {
        const auto a = hf::adjunction(g, self, p);
        const auto expected = (g < 1 || self < 0)                ? hf::Adjunction::not_applicable
                              : std::abs(p) + self > 2 * g - 2 ? hf::Adjunction::violated
                                                               : hf::Adjunction::satisfied;
        o.require(a == expected, "g=" + std::to_string(g) + " self=" + std::to_string(self) + " p=" + std::to_string(p));
      }
  for (int p = -6; p <= 6; ++p) o.require(hf::adjunction(1, 1, p) == hf::Adjunction::violated, "torus case");
  return o;
}

Outcome end_to_end() {
  Outcome o;
  const auto path = (std::filesystem::temp_directory_path() / "corktool-acceptance-cert.json").string();
  const auto t0 = Clock::now();
  std::ostringstream out, err;
  const int code = cli::run({"certify", std::string(FIXTURES_DIR) + "/w1.diagram", std::string(FIXTURES_DIR) + "/w1.palf",
                             std::string(FIXTURES_DIR) + "/trefoil.inflation", "-o", path},
                            out, err);
  o.require(seconds_since(t0) < 5.0, "slower than 5 s");
  o.require(code == 0, "exit code " + std::to_string(code) + ": " + err.str());
  if (!o.pass) return o;
  std::ifstream in(path);
  const auto cert = certificate::Json::parse(in);
  o.require(cert["verdict"]["value"] == "DISTINCT", "verdict");
  const auto phi = certificate::relative_invariant(cert);
  o.require(phi.untwisted == "±1" && phi.twisted == "0", "relative invariants");
  bool non_extension = false, fake_pair = false;
  for (const auto& c : cert["consequences"]) {
    non_extension |= c["id"] == "non-extension";
    fake_pair |= c["id"] == "fake-pair";
  }
  o.require(non_extension && fake_pair, "consequences missing");
  o.require(certificate::fake_pair_report(cert)["X'"]["basic"] == false, "fake pair report");
  std::ostringstream vout, verr;
  o.require(cli::run({"certify", "--validate", path}, vout, verr) == 0, "stored certificate does not validate");
  std::size_t survived = 0;
  const auto total = for_each_integer_mutation(cert, [&](const certificate::Json& bad, const std::string&) {
    if (certificate::validate(bad).ok) ++survived;
  });
  o.require(total > 0 && survived == 0, std::to_string(survived) + " of " + std::to_string(total) + " edits validated");
  std::filesystem::remove(path);
  return o;
}

Outcome hf_of_sphere() {
  Outcome o;
  for (int n = -20; n <= 20; ++n) {
    const bool even = n % 2 == 0;
    o.require(hf::hf_s3(hf::Version::plus, n).rank == (even && n >= 0 ? 1 : 0), "HF+ at " + std::to_string(n));
    o.require(hf::hf_s3(hf::Version::minus, n).rank == (even && n <= -2 ? 1 : 0), "HF- at " + std::to_string(n));
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"chain relation acts trivially on H1 for g = 1..4", chain_relation},
      {"positive inverses have length 2g(4g+2) - 1 and invert", positive_inversion},
      {"tb of lens, trefoil and stabilizations", tb_arithmetic},
      {"H1 of the boundary for lk = 0..5", homology_of_clasped_pairs},
      {"Stein framing rule before and after the twist", stein_framing_rule},
      {"filling tallies 117 handles, euler char 116", filling_tallies},
      {"degree shift formula and its coefficients", degree_formula},
      {"adjunction rule, exhaustive small range", adjunction_rule},
      {"end-to-end certificate and tamper detection", end_to_end},
      {"HF of the 3-sphere for |n| <= 20", hf_of_sphere},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string("exception: ") + e.what();
    }
    std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << " - " << criteria[i].first;
    if (!o.pass) std::cout << " (" << o.note << ")";
    std::cout << '\n';
    failures += o.pass ? 0 : 1;
  }
  return failures;
}
