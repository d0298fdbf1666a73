#include "cork/hf.hpp"

#include "cork/error.hpp"

namespace cork::hf {

std::string to_string(Version v) { return v == Version::plus ? "+" : "-"; }

CyclicGroup hf_s3(Version v, int n) {
  if (n % 2 != 0) return {0};
  return {v == Version::plus ? (n >= 0 ? 1 : 0) : (n <= -2 ? 1 : 0)};
}

int GradedModule::tower_rank(const Rational& n) const {
  int rank = 0;
  for (const auto& t : towers) {
    const Rational offset = (n - t.end) * t.direction;
    if (offset < 0) continue;
    const Rational half = offset / 2;
    if (denominator(half) == 1) ++rank;
  }
  return rank;
}

GradedModule hf_s3_module(Version v) {
  GradedModule m;
  m.name = "HF" + to_string(v) + "(S3)";
  m.towers.push_back(v == Version::plus ? Tower{0, 1} : Tower{-2, -1});
  return m;
}

ModuleElement theta(Version v, int n) {
  if (hf_s3(v, n).rank == 0)
    throw PreconditionError("HF" + to_string(v) + "(S3) vanishes in degree " + std::to_string(n));
  return {"Θ" + to_string(v) + "(" + std::to_string(n) + ")", Rational(n), hf_s3_module(v).name, "generator"};
}

Rational degree_shift(const Rational& c1_squared, const Rational& sigma, const Rational& chi) {
  return (c1_squared - 3 * sigma - 2 * chi) / 4;
}

Rational degree_shift(const SpinCDecoration& s) { return degree_shift(s.c1_squared, s.sigma, s.chi); }

int canonical_c1_squared(int chi, int sigma) { return 2 * chi + 3 * sigma; }

Adjunction adjunction(int genus, int self_int, int pairing) {
  if (genus < 1 || self_int < 0) return Adjunction::not_applicable;
  return std::abs(pairing) + self_int > 2 * genus - 2 ? Adjunction::violated : Adjunction::satisfied;
}

bool adjunction_violated(int genus, int self_int, int pairing) {
  if (genus < 1) throw RuleNotApplicable("adjunction rule", "g ≥ 1");
  if (self_int < 0) throw RuleNotApplicable("adjunction rule", "self-intersection ≥ 0");
  return adjunction(genus, self_int, pairing) == Adjunction::violated;
}

std::vector<std::string> compose(const MapRecord& f, const MapRecord& g) {
  if (f.target != g.source)
    throw PreconditionError("cannot compose " + f.name + " (ends at " + f.target + ") with " + g.name + " (starts at " +
                            g.source + ")");
  if (f.identity) return {g.name};
  if (g.identity) return {f.name};
  std::vector<std::string> terms;
  const int n = std::max(f.gluings, g.gluings);
  for (int k = 0; k < n; ++k)
    terms.push_back(g.name + "∘" + f.name + (n > 1 ? "[" + std::to_string(k + 1) + "]" : ""));
  return terms;
}

}  // namespace cork::hf
