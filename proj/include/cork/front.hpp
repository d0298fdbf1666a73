#pragma once

// Piecewise-linear Legendrian fronts.
//
// A front is a set of oriented polylines in the (x, y) plane with rational
// vertices. At a crossing the strand of smaller slope dy/dx is the over
// strand. A local x-extremum is a cusp. A component may leave the plane
// through a 1-handle attaching ball and re-enter through its partner ball;
// strands on a ball pair are matched top to bottom.

#include "cork/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cork::front {

struct Point {
  Rational x;
  Rational y;
  friend bool operator==(const Point&, const Point&) = default;
};

std::string to_string(const Point& p);

/// One polyline belonging to a component, listed in traversal order.
struct Arc {
  std::string component;
  std::vector<Point> points;
};

/// Vertical attaching segment {x} x (ybot, ytop).
struct Ball {
  Rational x;
  Rational ytop;
  Rational ybot;
  bool contains(const Point& p) const { return p.x == x && p.y > ybot && p.y < ytop; }
  friend bool operator==(const Ball&, const Ball&) = default;
};

/// A 1-handle: two balls, `first` and `second`, in the order they were declared.
struct Handle {
  std::string id;
  Ball first;
  Ball second;
  friend bool operator==(const Handle&, const Handle&) = default;
};

enum class Orientation { forward, reverse };

/// Oriented straight piece of a component in traversal order.
struct Segment {
  Point from;
  Point to;
  std::size_t arc = 0;    // index into FrontDiagram::arcs()
  std::size_t index = 0;  // segment index inside that arc (storage direction)
};

/// A passage through a 1-handle between segment `after` and the next one.
struct HandlePassage {
  std::string handle;
  std::size_t after = 0;
  bool first_to_second = true;
};

struct Crossing {
  std::string over;
  std::string under;
  int sign = 0;
  Point at;
  std::size_t over_segment = 0;  // index into the over component's segments
  std::size_t under_segment = 0;
  Rational over_t;  // parameter along that segment, 0 < t < 1
  Rational under_t;
};

struct Cusp {
  std::string component;
  Point at;
  bool left = false;  // left cusp: both branches leave to the right
};

/// Signed Gauss code of one component's self-crossings.
struct GaussCode {
  struct Passage {
    int crossing = 0;
    bool over = false;
    friend bool operator==(const Passage&, const Passage&) = default;
  };
  std::vector<Passage> passages;
  std::vector<int> signs;  // per crossing
  friend bool operator==(const GaussCode&, const GaussCode&) = default;
};

class FrontDiagram {
 public:
  FrontDiagram() = default;

  /// Validates every invariant; throws GenericityError or ParseError.
  static FrontDiagram build(std::vector<Arc> arcs, std::vector<Handle> handles,
                            std::map<std::string, Orientation> orientation);

  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<Handle>& handles() const { return handles_; }
  const std::map<std::string, Orientation>& orientation() const { return orientation_; }

  /// Component ids in order of first appearance.
  const std::vector<std::string>& components() const { return components_; }
  bool has_component(std::string_view id) const;

  const std::vector<Segment>& segments(std::string_view component) const;
  const std::vector<HandlePassage>& passages(std::string_view component) const;
  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::vector<Cusp>& cusps() const { return cusps_; }

  int cusp_count(std::string_view component) const;
  /// Sum of crossing signs over self-crossings.
  int writhe(std::string_view component) const;
  /// writhe - cusps / 2.
  int tb(std::string_view component) const;
  /// Half the signed count of crossings between two distinct components.
  int linking_number(std::string_view c1, std::string_view c2) const;
  /// Signed number of passages through `handle` (first ball to second is +1).
  int winding(std::string_view component, std::string_view handle) const;
  int handle_passages(std::string_view component) const;

  GaussCode gauss_code(std::string_view component) const;

  /// Copy with one component's orientation flipped.
  FrontDiagram reversed(std::string_view component) const;
  /// Copy with component and handle ids renamed; unnamed ids are kept.
  FrontDiagram renamed(const std::map<std::string, std::string>& ids) const;
  /// Copy restricted to the given components (handles kept).
  FrontDiagram restricted(const std::vector<std::string>& keep) const;

 private:
  struct ComponentPath {
    std::vector<Segment> segments;
    std::vector<HandlePassage> passages;
  };

  void require_component(std::string_view id) const;
  void trace_components();
  void find_cusps();
  void find_crossings();

  std::vector<Arc> arcs_;
  std::vector<Handle> handles_;
  std::map<std::string, Orientation> orientation_;
  std::vector<std::string> components_;
  std::map<std::string, ComponentPath, std::less<>> paths_;
  std::vector<Crossing> crossings_;
  std::vector<Cusp> cusps_;
};

/// Parses the line format or, when the document starts with '{', the
/// equivalent JSON document.
FrontDiagram parse_front(std::string_view text);

/// Accumulates front lines (`arc`, `handle`, `orient`) so that other
/// document types can embed them.
class FrontBuilder {
 public:
  /// Returns false if the keyword is not a front keyword.
  bool accept(std::string_view keyword, std::string_view rest, std::size_t line);
  FrontDiagram build() const;
  bool empty() const { return arcs_.empty(); }

 private:
  std::vector<Arc> arcs_;
  std::vector<Handle> handles_;
  std::map<std::string, std::vector<Ball>> balls_;
  std::map<std::string, Orientation> orientation_;
};

std::string write_front(const FrontDiagram& d, std::string_view prefix = "");

/// Inserts a zigzag (two cusps, no crossings) into a component. `positive`
/// puts the zigzag below the strand, otherwise above.
FrontDiagram stabilize(const FrontDiagram& d, std::string_view component, bool positive);

}  // namespace cork::front
