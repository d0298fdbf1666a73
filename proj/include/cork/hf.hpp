#pragma once

// Formal Heegaard Floer bookkeeping. Nothing here computes Floer
// homology: groups of the 3-sphere, grading arithmetic and the
// applicability tests of cited rules are all that is evaluated.

#include "cork/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cork::hf {

enum class Version { plus, minus };

std::string to_string(Version v);

/// 0 for the trivial group, 1 for Z.
struct CyclicGroup {
  int rank = 0;
  std::string to_string() const { return rank ? "Z" : "0"; }
  friend bool operator==(const CyclicGroup&, const CyclicGroup&) = default;
};

/// HF+ is Z in even degrees >= 0, HF- is Z in even degrees <= -2.
CyclicGroup hf_s3(Version v, int n);

struct Tower {
  Rational end;    // extreme grading of the tower
  int direction;   // +1 grows upward from `end`, -1 downward
};

struct GradedModule {
  std::string name;
  std::vector<Tower> towers;
  std::vector<std::pair<Rational, int>> finite_parts;  // (grading, order)

  /// Rank of the summand in grading n (towers only move in steps of 2).
  int tower_rank(const Rational& n) const;
};

GradedModule hf_s3_module(Version v);

struct ModuleElement {
  std::string name;
  std::optional<Rational> grading;
  std::string module;
  std::string provenance;
};

/// Generator of HF(S^3) in degree n; throws PreconditionError where the group is 0.
ModuleElement theta(Version v, int n);

struct SpinCDecoration {
  int c1_squared = 0;
  int sigma = 0;
  int chi = 0;
  std::map<std::string, int> c1_pairings;
  bool torsion_c1 = true;
  bool canonical = false;
};

/// (c1^2 - 3 sigma - 2 chi) / 4.
Rational degree_shift(const Rational& c1_squared, const Rational& sigma, const Rational& chi);
Rational degree_shift(const SpinCDecoration& s);

/// c1^2 of the canonical class of a closed symplectic 4-manifold: 2 chi + 3 sigma.
int canonical_c1_squared(int chi, int sigma);

enum class Adjunction { violated, satisfied, not_applicable };

/// not_applicable when g < 1 or self_int < 0; violated iff |pairing| + self_int > 2g - 2.
Adjunction adjunction(int genus, int self_int, int pairing);

/// Throws RuleNotApplicable instead of answering not_applicable.
bool adjunction_violated(int genus, int self_int, int pairing);

struct MapRecord {
  std::string name;
  std::string source;
  std::string target;
  int gluings = 1;  // Spin^c structures on the composite restricting to both pieces
  bool identity = false;
};

/// Terms of the composite (f first, then g). Throws PreconditionError on an end mismatch.
std::vector<std::string> compose(const MapRecord& f, const MapRecord& g);

}  // namespace cork::hf
