#pragma once

// Dehn-twist words on a genus-g surface with at most one boundary
// component, tracked through their action on H1 in the basis
// (a1, b1, ..., ag, bg) with <a_i, b_i> = +1.
//
// Only the homological shadow of a mapping class is represented: two words
// with equal action need not be isotopic.
//
// Composition: the leftmost letter acts first, so the action of
// t1 t2 ... tn is M(tn) ... M(t2) M(t1).

#include "cork/intmatrix.hpp"

#include "json.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace cork::mcg {

struct Curve {
  std::string name;
  IntVector h1;  // primitive, length 2g
  int genus() const { return static_cast<int>(h1.size() / 2); }
};

/// Throws PreconditionError unless `h1` has even positive length and is primitive.
Curve make_curve(std::string name, IntVector h1);

struct Letter {
  Curve curve;
  int exponent = 1;  // +1 right-handed, -1 left-handed
};

struct TwistWord {
  int genus = 1;
  std::vector<Letter> letters;

  bool positive() const;
  std::size_t size() const { return letters.size(); }
  /// This word followed by `other`.
  TwistWord then(const TwistWord& other) const;
};

/// Standard symplectic pairing u^T J v.
std::int64_t pairing(const IntVector& u, const IntVector& v);

/// x -> x + <x, c> c.
IntMatrix transvection(const IntVector& c);

IntMatrix letter_action(const Letter& l);
IntMatrix h1_action(const TwistWord& w);

/// beta1 = a1, beta_{2i} = b_i, beta_{2i+1} = a_{i+1} - a_i.
std::vector<Curve> chain_curves(int genus);

/// (t_beta1 ... t_beta2g)^power.
TwistWord chain_word(int genus, int power);

/// Exponent 4g + 2 of the chain relator.
int chain_exponent(int genus);

/// Action of the full chain relator is the identity.
bool verify_chain_relation(int genus);

/// Symplectic S with S e1 = c, built by a symplectic Euclidean reduction.
IntMatrix identify_with_beta1(const Curve& c);

/// Positive word w with t_c w acting trivially: the chain relator,
/// conjugated so that beta1 goes to c, minus its first letter.
TwistWord positive_inverse(const Curve& c);

/// Length of positive_inverse in genus g: 2g(4g + 2) - 1.
std::size_t positive_inverse_length(int genus);

/// Positive w' with w w' acting trivially; w must be positive.
TwistWord trivialize(const TwistWord& w);

/// `genus g`, `curve name = [..]` and words of `T(name)` / `T'(name)`
/// tokens. Curves `beta1` ... `beta2g` are predeclared.
TwistWord parse_word(std::string_view text);
std::string write_word(const TwistWord& w);

nlohmann::ordered_json to_json(const TwistWord& w);

}  // namespace cork::mcg
