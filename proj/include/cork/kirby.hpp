#pragma once

// Handlebody diagrams of a 4-manifold: a front whose components are either
// dotted circles (1-handles) or framed 2-handle attaching circles.

#include "cork/front.hpp"
#include "cork/intmatrix.hpp"
#include "cork/knotdb.hpp"

#include "json.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cork::kirby {

using front::FrontDiagram;
using front::Point;

struct Decoration {
  bool dotted = false;
  int framing = 0;  // ignored when dotted
  friend bool operator==(const Decoration&, const Decoration&) = default;
};

/// Affine map p -> A p + t of the plane.
struct PlaneMap {
  Rational a11 = 1, a12 = 0, a21 = 0, a22 = 1;
  Rational tx = 0, ty = 0;

  Point apply(const Point& p) const;
  /// This map followed by `next`.
  PlaneMap then(const PlaneMap& next) const;
  bool is_identity() const;
};

/// `;`-separated steps: `rot180 (cx,cy)`, `reflect-x c` (mirror in x = c),
/// `reflect-y c` (mirror in y = c), `translate (dx,dy)`. Applied left to right.
PlaneMap parse_plane_map(std::string_view script, std::size_t line = 0);

struct Involution {
  std::string first;
  std::string second;
  std::string script;
  PlaneMap map;
};

struct KirbyDiagram {
  FrontDiagram front;
  std::map<std::string, Decoration> decorations;
  std::optional<Involution> involution;
  /// Legendrian presentation in 1-handle notation; ball pairs carry the id
  /// of the dotted circle they replace.
  std::optional<FrontDiagram> stein;

  std::vector<std::string> dotted() const;
  std::vector<std::string> framed() const;
};

/// Front lines plus `dot <c>`, `frame <c> <n>`, `involution <c1> <c2> : <script>`
/// and `stein <front line>`.
KirbyDiagram parse_diagram(std::string_view text);
std::string write_diagram(const KirbyDiagram& d);

struct InvolutionCheck {
  bool verified = false;
  std::string detail;
};

/// The self-map must be an affine involution carrying every component's
/// segments onto those of its partner, with crossing data preserved.
InvolutionCheck verify_involution(const KirbyDiagram& d);

/// Boundary surgery matrix: dotted circles count as 0-framed.
IntMatrix linking_matrix(const KirbyDiagram& d);

struct HomologyReport {
  IntMatrix linking_matrix;
  std::vector<AbelianGroup> h_of_W;         // degrees 0..4
  std::vector<AbelianGroup> h_of_boundary;  // degrees 0..3
  bool is_contractible = false;
  bool is_homology_sphere = false;
  friend bool operator==(const HomologyReport& a, const HomologyReport& b) {
    return a.linking_matrix == b.linking_matrix && a.h_of_W == b.h_of_W && a.h_of_boundary == b.h_of_boundary &&
           a.is_contractible == b.is_contractible && a.is_homology_sphere == b.is_homology_sphere;
  }
};

/// `boundary` is the surgery matrix; `attaching` has one row per 1-handle
/// and one column per 2-handle (algebraic passes of the 2-handle).
HomologyReport homology_from_matrices(const IntMatrix& boundary, const IntMatrix& attaching);
HomologyReport homology(const KirbyDiagram& d);

struct UnknotCheck {
  std::string component;
  bool verified = false;
  std::vector<std::string> moves;
  std::size_t states_explored = 0;
  bool truncated = false;
};

/// One-sided: verified when a Reidemeister sequence within `budget` moves
/// reaches a crossingless diagram. Components running over a handle are
/// never verified.
UnknotCheck unknot_certificate(const FrontDiagram& d, std::string_view component, int budget,
                               std::uint64_t seed = 0);

struct AdmissibilityReport {
  std::vector<UnknotCheck> cond1;
  bool cond2 = false;
  std::string cond2_detail;
  bool cond3 = false;
  int linking = 0;
  bool cond4prime = false;
  std::optional<int> stein_tb;
  std::string cond4_detail;
  int budget = 0;
  std::uint64_t seed = 0;

  bool inconclusive() const;
  bool admissible() const;
};

AdmissibilityReport check_admissible(const KirbyDiagram& d, int budget, std::uint64_t seed = 0);

/// Exchanges the dot and the 0-framing along the involution.
KirbyDiagram cork_twist(const KirbyDiagram& d);

struct SteinVerdict {
  std::string component;
  int framing = 0;
  int tb = 0;
  int writhe = 0;
  int cusps = 0;
  int handle_passes = 0;
  bool pass = false;
  std::string reason;
};

/// pass iff framing == tb - 1. When the knot type is known and the front
/// stays off every handle, a failure quotes the knot's maximal tb.
SteinVerdict stein_check(const FrontDiagram& front, std::string_view component, int framing,
                         const std::optional<knotdb::KnotFacts>& facts = std::nullopt);

/// One verdict per framed component, read from the stein presentation.
std::vector<SteinVerdict> stein_realizable(const KirbyDiagram& d);

struct CobordismRecord {
  std::string knot;
  std::string component;
  int framing = 0;
  int one_handles = 0;
  int two_handles = 1;
  int euler_char = 1;
  SteinVerdict stein;
  std::optional<knotdb::KnotFacts> facts;
  FrontDiagram front;
};

/// Adds a 2-handle along `component` of `k` (1-handle notation over the
/// dotted circles of `d`).
CobordismRecord inflate(const KirbyDiagram& d, const FrontDiagram& k, std::string_view component, int framing,
                        std::string_view knot = "");

/// `knot <name>`, `framing <n>`, `component <id>`, then `untwisted <front line>`
/// and `twisted <front line>` for the two sides of the cork twist.
struct InflationSpec {
  std::string knot;
  int framing = 0;
  std::string component;
  FrontDiagram untwisted;
  FrontDiagram twisted;
};

InflationSpec parse_inflation(std::string_view text);

nlohmann::ordered_json to_json(const AbelianGroup& g);
nlohmann::ordered_json to_json(const HomologyReport& r);
nlohmann::ordered_json to_json(const AdmissibilityReport& r);
nlohmann::ordered_json to_json(const SteinVerdict& v);
nlohmann::ordered_json to_json(const CobordismRecord& m);

}  // namespace cork::kirby
