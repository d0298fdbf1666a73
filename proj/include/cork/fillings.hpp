#pragma once

// Planner for concave fillings built from a positive allowable Lefschetz
// fibration: cap the binding (V0), kill the monodromy with chain-relation
// handles, close with F x D^2 (V1), and tally the topology.

#include "cork/kirby.hpp"
#include "cork/mcg.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cork::fillings {

struct PALF {
  mcg::TwistWord word;  // vanishing cycles, positive, all primitive
  int binding_components = 1;
  std::string source;  // free-form origin note

  int genus() const { return word.genus; }
  /// 1 - 2g + (number of vanishing cycles), with a connected page boundary.
  int euler_char() const;
};

/// Throws PreconditionError unless the word is positive.
PALF make_palf(mcg::TwistWord word, int binding_components = 1, std::string source = "");

/// Word grammar plus optional `binding <n>` and `source <text>` lines.
PALF parse_palf(std::string_view text);
std::string write_palf(const PALF& p);

struct OpenBook {
  int genus = 1;
  mcg::TwistWord monodromy;
  int binding_components = 1;
};

/// Rejects pages with more than one binding component.
OpenBook palf_to_openbook(const PALF& p);

/// Genus +1 with connected binding: appends twists about a_{g+1} - a_g and b_{g+1}.
PALF stabilize_palf(const PALF& p);

struct CapOff {
  int two_handles = 1;
  int page_framing = 0;
  int euler_char = 1;
  int closed_fiber_genus = 0;
  mcg::TwistWord closed_monodromy;
};

CapOff cap_binding(const OpenBook& ob);

struct Assumption {
  std::string id;
  std::string statement;
};

struct FillingPlan {
  CapOff v0;
  mcg::TwistWord monodromy;
  mcg::TwistWord trivializing_handles;  // each attached with framing -1 relative to the fiber
  int closing_fiber_genus = 0;
  int closing_euler_char = 0;
  int euler_char = 0;
  int fiber_genus = 0;
  int relator_blocks = 0;
  int stabilizations = 0;
  bool composite_identity = false;
  bool built_from_openbook = true;
  /// Set when a Stein cobordism was absorbed ahead of V0.
  bool stein_absorbed = false;
  int absorbed_euler_char = 0;
  int absorbed_two_handles = 0;
  int palf_euler_char = 0;
  std::vector<Assumption> assumptions;
};

/// Stabilizes pages of genus < 2 first; every stabilization is recorded.
FillingPlan build_concave(const OpenBook& ob);

/// Absorbs the handles of a Stein cobordism without 1-handles into V1.
/// An empty record (no handles) yields exactly build_concave.
FillingPlan extend_with_cobordism(const std::optional<kirby::CobordismRecord>& m, const PALF& p);

struct HandleCell {
  std::string piece;  // "V0", "V1", "M" or "FxD2"
  int index = 0;
  std::string label;
};

/// Explicit cells of the filling; the alternating count equals euler_char.
std::vector<HandleCell> enumerate_handles(const FillingPlan& plan);

struct ClosedLF {
  int fiber_genus = 0;
  int chi_W = 0;
  int chi_X = 0;
  bool relatively_minimal = false;
  int fiber_self_intersection = 0;
  std::optional<int> sigma;
  std::vector<Assumption> assumptions;
  bool from_plan = false;
};

/// `one_handles`/`two_handles` describe the Stein handlebody W.
ClosedLF closed_total(int one_handles, int two_handles, const FillingPlan& plan, std::optional<int> sigma = std::nullopt);

bool has_assumption(const std::vector<Assumption>& list, std::string_view id);

nlohmann::ordered_json to_json(const FillingPlan& plan);
nlohmann::ordered_json to_json(const ClosedLF& x);

}  // namespace cork::fillings
