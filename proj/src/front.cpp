#include "cork/front.hpp"

#include "cork/error.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <tuple>

namespace cork::front {

namespace {

Rational cross(const Rational& ax, const Rational& ay, const Rational& bx, const Rational& by) {
  return ax * by - ay * bx;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Rational slope(const Segment& s) { return (s.to.y - s.from.y) / (s.to.x - s.from.x); }

int x_direction(const Segment& s) { return sign(s.to.x - s.from.x); }

// Splits "<id> : <body>" and returns {id, body}.
std::pair<std::string, std::string_view> split_id(std::string_view rest, std::size_t line, std::string_view what) {
  const auto colon = rest.find(':');
  if (colon == std::string_view::npos) throw ParseError(std::string(what) + " needs '<id> : ...'", line, 1);
  auto id = trim(rest.substr(0, colon));
  if (id.empty() || id.find_first_of(" \t") != std::string_view::npos)
    throw ParseError("bad " + std::string(what) + " id '" + std::string(id) + "'", line, 1);
  return {std::string(id), rest.substr(colon + 1)};
}

std::vector<Point> parse_points(std::string_view body, std::size_t line, std::size_t column) {
  std::vector<Point> points;
  std::size_t i = 0;
  while (true) {
    while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i;
    if (i == body.size()) break;
    if (body[i] != '(') throw ParseError("expected '(' to start a point", line, column + i);
    const auto close = body.find(')', i);
    if (close == std::string_view::npos) throw ParseError("unterminated point", line, column + i);
    const auto inner = body.substr(i + 1, close - i - 1);
    const auto comma = inner.find(',');
    if (comma == std::string_view::npos) throw ParseError("point needs two coordinates", line, column + i);
    try {
      points.push_back({parse_rational(trim(inner.substr(0, comma))), parse_rational(trim(inner.substr(comma + 1)))});
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line, column + i);
    }
    i = close + 1;
  }
  return points;
}

Ball parse_ball(std::string_view body, std::size_t line) {
  std::optional<Rational> x, ytop, ybot;
  std::istringstream in{std::string(body)};
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value in handle, got '" + token + "'", line, 1);
    const auto key = token.substr(0, eq);
    Rational value;
    try {
      value = parse_rational(token.substr(eq + 1));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line, 1);
    }
    if (key == "x")
      x = value;
    else if (key == "ytop")
      ytop = value;
    else if (key == "ybot")
      ybot = value;
    else
      throw ParseError("unknown handle key '" + key + "'", line, 1);
  }
  if (!x || !ytop || !ybot) throw ParseError("handle needs x, ytop and ybot", line, 1);
  if (*ytop <= *ybot) throw ParseError("handle ball needs ytop > ybot", line, 1);
  return {*x, *ytop, *ybot};
}

Rational json_rational(const nlohmann::json& v) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw ParseError("coordinates must be integers or \"p/q\" strings");
}

}  // namespace

std::string to_string(const Point& p) { return "(" + cork::to_string(p.x) + "," + cork::to_string(p.y) + ")"; }

// ---------------------------------------------------------------------------
// Construction and validation

FrontDiagram FrontDiagram::build(std::vector<Arc> arcs, std::vector<Handle> handles,
                                 std::map<std::string, Orientation> orientation) {
  FrontDiagram d;
  d.arcs_ = std::move(arcs);
  d.handles_ = std::move(handles);
  for (const auto& arc : d.arcs_)
    if (std::find(d.components_.begin(), d.components_.end(), arc.component) == d.components_.end())
      d.components_.push_back(arc.component);
  if (d.components_.empty()) throw ParseError("front has no arcs");
  for (const auto& [id, o] : orientation) {
    if (!d.has_component(id)) throw ParseError("orientation given for unknown component '" + id + "'");
  }
  for (const auto& c : d.components_) d.orientation_[c] = orientation.count(c) ? orientation.at(c) : Orientation::forward;

  std::set<std::string> handle_ids;
  for (const auto& h : d.handles_) {
    if (!handle_ids.insert(h.id).second) throw ParseError("handle '" + h.id + "' declared more than twice");
    if (h.first.x == h.second.x) throw GenericityError("balls of handle '" + h.id + "' share an x coordinate");
  }

  for (const auto& arc : d.arcs_) {
    if (arc.points.size() < 2) throw ParseError("arc of '" + arc.component + "' needs at least two points");
    for (std::size_t i = 0; i + 1 < arc.points.size(); ++i) {
      const auto& p = arc.points[i];
      const auto& q = arc.points[i + 1];
      if (p == q) throw GenericityError("zero-length segment at " + to_string(p) + " in '" + arc.component + "'");
      if (p.x == q.x)
        throw GenericityError("vertical segment " + to_string(p) + " -> " + to_string(q) + " in '" + arc.component + "'");
    }
  }

  d.trace_components();
  d.find_cusps();
  d.find_crossings();
  return d;
}

bool FrontDiagram::has_component(std::string_view id) const {
  return std::find(components_.begin(), components_.end(), id) != components_.end();
}

void FrontDiagram::require_component(std::string_view id) const {
  if (!has_component(id)) throw PreconditionError("unknown component '" + std::string(id) + "'");
}

const std::vector<Segment>& FrontDiagram::segments(std::string_view component) const {
  require_component(component);
  return paths_.find(component)->second.segments;
}

const std::vector<HandlePassage>& FrontDiagram::passages(std::string_view component) const {
  require_component(component);
  return paths_.find(component)->second.passages;
}

void FrontDiagram::trace_components() {
  // Rank the strand ends sitting on each ball, top to bottom.
  struct BallRef {
    std::size_t handle;
    bool first;
  };
  auto ball_of = [&](const Point& p) -> std::optional<BallRef> {
    for (std::size_t h = 0; h < handles_.size(); ++h) {
      if (handles_[h].first.contains(p)) return BallRef{h, true};
      if (handles_[h].second.contains(p)) return BallRef{h, false};
    }
    return std::nullopt;
  };
  std::map<std::pair<std::size_t, bool>, std::vector<Rational>> heights;
  for (const auto& arc : arcs_) {
    for (const auto* end : {&arc.points.front(), &arc.points.back()})
      if (auto b = ball_of(*end)) heights[{b->handle, b->first}].push_back(end->y);
    for (std::size_t i = 1; i + 1 < arc.points.size(); ++i)
      if (ball_of(arc.points[i]))
        throw GenericityError("interior vertex " + to_string(arc.points[i]) + " of '" + arc.component +
                              "' lies on an attaching ball");
  }
  for (auto& [key, ys] : heights) {
    std::sort(ys.begin(), ys.end(), std::greater<>());
    if (std::adjacent_find(ys.begin(), ys.end()) != ys.end())
      throw GenericityError("two strands end at the same point of ball '" + handles_[key.first].id + "'");
  }
  for (std::size_t h = 0; h < handles_.size(); ++h)
    if (heights[{h, true}].size() != heights[{h, false}].size())
      throw GenericityError("balls of handle '" + handles_[h].id + "' carry different numbers of strands");
  auto rank_of = [&](const BallRef& b, const Rational& y) {
    const auto& ys = heights[{b.handle, b.first}];
    return static_cast<std::size_t>(std::find(ys.begin(), ys.end(), y) - ys.begin());
  };

  for (const auto& component : components_) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < arcs_.size(); ++i)
      if (arcs_[i].component == component) members.push_back(i);

    ComponentPath path;
    for (std::size_t m = 0; m < members.size(); ++m) {
      const Arc& arc = arcs_[members[m]];
      for (std::size_t j = 0; j + 1 < arc.points.size(); ++j)
        path.segments.push_back({arc.points[j], arc.points[j + 1], members[m], j});
      const Point& end = arc.points.back();
      const Point& next = arcs_[members[(m + 1) % members.size()]].points.front();
      const auto end_ball = ball_of(end);
      const auto next_ball = ball_of(next);
      if (!end_ball && !next_ball && end == next) continue;
      if (end_ball && next_ball && end_ball->handle == next_ball->handle && end_ball->first != next_ball->first &&
          rank_of(*end_ball, end.y) == rank_of(*next_ball, next.y)) {
        path.passages.push_back({handles_[end_ball->handle].id, path.segments.size() - 1, end_ball->first});
        continue;
      }
      throw GenericityError("component '" + component + "' is not closed: arc ends at " + to_string(end) +
                            " but the next arc starts at " + to_string(next));
    }

    if (orientation_.at(component) == Orientation::reverse) {
      const std::size_t n = path.segments.size();
      std::reverse(path.segments.begin(), path.segments.end());
      for (auto& s : path.segments) std::swap(s.from, s.to);
      for (auto& p : path.passages) {
        p.after = (2 * n - 2 - p.after) % n;
        p.first_to_second = !p.first_to_second;
      }
      std::sort(path.passages.begin(), path.passages.end(),
                [](const HandlePassage& a, const HandlePassage& b) { return a.after < b.after; });
    }
    paths_[component] = std::move(path);
  }
}

void FrontDiagram::find_cusps() {
  for (const auto& component : components_) {
    const auto& path = paths_.at(component);
    const auto& segs = path.segments;
    const std::size_t n = segs.size();
    int count = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const bool passage = std::any_of(path.passages.begin(), path.passages.end(),
                                       [&](const HandlePassage& p) { return p.after == k; });
      if (passage) continue;
      const int in = x_direction(segs[k]);
      const int out = x_direction(segs[(k + 1) % n]);
      if (in != out) {
        cusps_.push_back({component, segs[k].to, in < 0});
        ++count;
      }
    }
    if (count % 2 != 0) throw GenericityError("component '" + component + "' has an odd number of cusps");
    if (path.passages.empty() && count < 2)
      throw GenericityError("component '" + component + "' has fewer than two cusps");
  }
}

void FrontDiagram::find_crossings() {
  struct Ref {
    std::size_t component;
    std::size_t index;
  };
  std::vector<Ref> all;
  for (std::size_t c = 0; c < components_.size(); ++c)
    for (std::size_t k = 0; k < paths_.at(components_[c]).segments.size(); ++k) all.push_back({c, k});

  auto seg = [&](const Ref& r) -> const Segment& { return paths_.at(components_[r.component]).segments[r.index]; };
  auto adjacent = [&](const Ref& a, const Ref& b) {
    if (a.component != b.component) return false;
    const auto& path = paths_.at(components_[a.component]);
    const std::size_t n = path.segments.size();
    auto joined = [&](std::size_t k) {
      return std::none_of(path.passages.begin(), path.passages.end(),
                          [&](const HandlePassage& p) { return p.after == k; });
    };
    return ((a.index + 1) % n == b.index && joined(a.index)) || ((b.index + 1) % n == a.index && joined(b.index));
  };

  // Strands may touch a ball only at their passage ends.
  for (const auto& r : all) {
    const Segment& s = seg(r);
    for (const auto& h : handles_)
      for (const Ball* ball : {&h.first, &h.second}) {
        const Rational lo = std::min(s.from.x, s.to.x);
        const Rational hi = std::max(s.from.x, s.to.x);
        if (ball->x <= lo || ball->x >= hi) continue;
        const Rational y = s.from.y + (ball->x - s.from.x) * (s.to.y - s.from.y) / (s.to.x - s.from.x);
        if (y >= ball->ybot && y <= ball->ytop)
          throw GenericityError("strand of '" + components_[r.component] + "' runs through attaching ball of '" +
                                h.id + "'");
      }
  }

  std::set<std::pair<Rational, Rational>> seen;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      const Segment& a = seg(all[i]);
      const Segment& b = seg(all[j]);
      const Rational dax = a.to.x - a.from.x, day = a.to.y - a.from.y;
      const Rational dbx = b.to.x - b.from.x, dby = b.to.y - b.from.y;
      const Rational denom = cross(dax, day, dbx, dby);
      const Rational rx = b.from.x - a.from.x, ry = b.from.y - a.from.y;

      if (adjacent(all[i], all[j])) {
        if (denom == 0 && dax * dbx + day * dby < 0)
          throw GenericityError("strand of '" + components_[all[i].component] + "' doubles back on itself at " +
                                to_string(a.to));
        continue;
      }
      if (denom == 0) {
        if (cross(rx, ry, dax, day) != 0) continue;  // parallel, disjoint lines
        // Collinear: any shared point is non-generic.
        const Rational a0 = std::min(a.from.x, a.to.x), a1 = std::max(a.from.x, a.to.x);
        const Rational b0 = std::min(b.from.x, b.to.x), b1 = std::max(b.from.x, b.to.x);
        if (std::max(a0, b0) <= std::min(a1, b1))
          throw GenericityError("overlapping collinear strands near " + to_string(a.from));
        continue;
      }
      const Rational t = cross(rx, ry, dbx, dby) / denom;
      const Rational u = cross(rx, ry, dax, day) / denom;
      if (t < 0 || t > 1 || u < 0 || u > 1) continue;
      const Point at{a.from.x + t * dax, a.from.y + t * day};
      if (t == 0 || t == 1 || u == 0 || u == 1)
        throw GenericityError("strands meet at a vertex " + to_string(at) + " instead of crossing transversally");
      if (!seen.insert({at.x, at.y}).second) throw GenericityError("triple point at " + to_string(at));

      const bool a_over = slope(a) < slope(b);
      const Segment& over = a_over ? a : b;
      const Segment& under = a_over ? b : a;
      Crossing x;
      x.over = components_[a_over ? all[i].component : all[j].component];
      x.under = components_[a_over ? all[j].component : all[i].component];
      x.over_segment = a_over ? all[i].index : all[j].index;
      x.under_segment = a_over ? all[j].index : all[i].index;
      x.over_t = a_over ? t : u;
      x.under_t = a_over ? u : t;
      x.at = at;
      x.sign = sign(cross(over.to.x - over.from.x, over.to.y - over.from.y, under.to.x - under.from.x,
                          under.to.y - under.from.y));
      crossings_.push_back(std::move(x));
    }
  }
}

// ---------------------------------------------------------------------------
// Invariants

int FrontDiagram::cusp_count(std::string_view component) const {
  require_component(component);
  return static_cast<int>(
      std::count_if(cusps_.begin(), cusps_.end(), [&](const Cusp& c) { return c.component == component; }));
}

int FrontDiagram::writhe(std::string_view component) const {
  require_component(component);
  int w = 0;
  for (const auto& x : crossings_)
    if (x.over == component && x.under == component) w += x.sign;
  return w;
}

int FrontDiagram::tb(std::string_view component) const {
  const int cusps = cusp_count(component);
  if (cusps % 2 != 0) throw GenericityError("odd cusp count on '" + std::string(component) + "'");
  return writhe(component) - cusps / 2;
}

int FrontDiagram::linking_number(std::string_view c1, std::string_view c2) const {
  require_component(c1);
  require_component(c2);
  if (c1 == c2) throw PreconditionError("linking number needs two distinct components");
  int sum = 0;
  for (const auto& x : crossings_)
    if ((x.over == c1 && x.under == c2) || (x.over == c2 && x.under == c1)) sum += x.sign;
  if (sum % 2 != 0)
    throw Error("crossings between '" + std::string(c1) + "' and '" + std::string(c2) +
                "' have odd signed sum; linking number undefined in this diagram");
  return sum / 2;
}

int FrontDiagram::winding(std::string_view component, std::string_view handle) const {
  int w = 0;
  for (const auto& p : passages(component))
    if (p.handle == handle) w += p.first_to_second ? 1 : -1;
  return w;
}

int FrontDiagram::handle_passages(std::string_view component) const {
  return static_cast<int>(passages(component).size());
}

GaussCode FrontDiagram::gauss_code(std::string_view component) const {
  require_component(component);
  struct Event {
    std::size_t segment;
    Rational t;
    std::size_t crossing;
    bool over;
  };
  std::vector<Event> events;
  for (std::size_t i = 0; i < crossings_.size(); ++i) {
    const auto& x = crossings_[i];
    if (x.over != component || x.under != component) continue;
    events.push_back({x.over_segment, x.over_t, i, true});
    events.push_back({x.under_segment, x.under_t, i, false});
  }
  std::sort(events.begin(), events.end(),
            [](const Event& a, const Event& b) { return std::tie(a.segment, a.t) < std::tie(b.segment, b.t); });
  GaussCode code;
  std::map<std::size_t, int> label;
  for (const auto& e : events) {
    auto [it, fresh] = label.try_emplace(e.crossing, static_cast<int>(label.size()));
    if (fresh) code.signs.push_back(crossings_[e.crossing].sign);
    code.passages.push_back({it->second, e.over});
  }
  return code;
}

FrontDiagram FrontDiagram::reversed(std::string_view component) const {
  require_component(component);
  auto orientation = orientation_;
  auto& o = orientation.at(std::string(component));
  o = o == Orientation::forward ? Orientation::reverse : Orientation::forward;
  return build(arcs_, handles_, orientation);
}

FrontDiagram FrontDiagram::renamed(const std::map<std::string, std::string>& ids) const {
  auto rename = [&](const std::string& id) {
    auto it = ids.find(id);
    return it == ids.end() ? id : it->second;
  };
  auto arcs = arcs_;
  for (auto& a : arcs) a.component = rename(a.component);
  auto handles = handles_;
  for (auto& h : handles) h.id = rename(h.id);
  std::map<std::string, Orientation> orientation;
  for (const auto& [c, o] : orientation_) orientation[rename(c)] = o;
  return build(std::move(arcs), std::move(handles), std::move(orientation));
}

FrontDiagram FrontDiagram::restricted(const std::vector<std::string>& keep) const {
  std::vector<Arc> arcs;
  for (const auto& a : arcs_)
    if (std::find(keep.begin(), keep.end(), a.component) != keep.end()) arcs.push_back(a);
  std::map<std::string, Orientation> orientation;
  for (const auto& [c, o] : orientation_)
    if (std::find(keep.begin(), keep.end(), c) != keep.end()) orientation[c] = o;
  return build(std::move(arcs), handles_, std::move(orientation));
}

// ---------------------------------------------------------------------------
// Documents

bool FrontBuilder::accept(std::string_view keyword, std::string_view rest, std::size_t line) {
  if (keyword == "arc") {
    auto [id, body] = split_id(rest, line, "arc");
    const std::size_t column = static_cast<std::size_t>(body.data() - rest.data()) + 5;
    arcs_.push_back({id, parse_points(body, line, column)});
    return true;
  }
  if (keyword == "handle") {
    auto [id, body] = split_id(rest, line, "handle");
    auto& balls = balls_[id];
    if (balls.size() == 2) throw ParseError("handle '" + id + "' declared more than twice", line, 1);
    balls.push_back(parse_ball(body, line));
    if (balls.size() == 2) handles_.push_back({id, balls[0], balls[1]});
    return true;
  }
  if (keyword == "orient") {
    std::istringstream in{std::string(rest)};
    std::string id, dir;
    if (!(in >> id >> dir) || (dir != "+" && dir != "-"))
      throw ParseError("orient needs '<component> +|-'", line, 1);
    orientation_[id] = dir == "+" ? Orientation::forward : Orientation::reverse;
    return true;
  }
  return false;
}

FrontDiagram FrontBuilder::build() const {
  for (const auto& [id, balls] : balls_)
    if (balls.size() != 2) throw ParseError("handle '" + id + "' needs exactly two balls");
  return FrontDiagram::build(arcs_, handles_, orientation_);
}

FrontDiagram parse_front(std::string_view text) {
  const auto body = trim(text);
  if (!body.empty() && body.front() == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(body);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("JSON: ") + e.what(), 0, e.byte);
    }
    try {
      std::vector<Arc> arcs;
      for (const auto& a : doc.at("arcs")) {
        Arc arc{a.at("component").get<std::string>(), {}};
        for (const auto& p : a.at("points")) arc.points.push_back({json_rational(p.at(0)), json_rational(p.at(1))});
        arcs.push_back(std::move(arc));
      }
      std::vector<Handle> handles;
      if (doc.contains("handles")) {
        std::map<std::string, std::vector<Ball>> balls;
        std::vector<std::string> order;
        for (const auto& h : doc.at("handles")) {
          const auto id = h.at("id").get<std::string>();
          if (!balls.count(id)) order.push_back(id);
          balls[id].push_back({json_rational(h.at("x")), json_rational(h.at("ytop")), json_rational(h.at("ybot"))});
        }
        for (const auto& id : order) {
          if (balls[id].size() != 2) throw ParseError("handle '" + id + "' needs exactly two balls");
          handles.push_back({id, balls[id][0], balls[id][1]});
        }
      }
      std::map<std::string, Orientation> orientation;
      if (doc.contains("orient"))
        for (const auto& [id, dir] : doc.at("orient").items()) {
          const auto s = dir.get<std::string>();
          if (s != "+" && s != "-") throw ParseError("orientation of '" + id + "' must be \"+\" or \"-\"");
          orientation[id] = s == "+" ? Orientation::forward : Orientation::reverse;
        }
      return FrontDiagram::build(std::move(arcs), std::move(handles), std::move(orientation));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("JSON front: ") + e.what());
    }
  }

  FrontBuilder builder;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    auto content = trim(std::string_view(line).substr(0, line.find('#')));
    if (content.empty()) continue;
    const auto space = content.find_first_of(" \t");
    const auto keyword = content.substr(0, space);
    const auto rest = space == std::string_view::npos ? std::string_view{} : content.substr(space + 1);
    if (!builder.accept(keyword, rest, line_no))
      throw ParseError("unknown keyword '" + std::string(keyword) + "'", line_no, 1);
  }
  return builder.build();
}

std::string write_front(const FrontDiagram& d, std::string_view prefix) {
  std::ostringstream out;
  for (const auto& a : d.arcs()) {
    out << prefix << "arc " << a.component << " :";
    for (const auto& p : a.points) out << ' ' << to_string(p);
    out << '\n';
  }
  for (const auto& h : d.handles())
    for (const Ball* b : {&h.first, &h.second})
      out << prefix << "handle " << h.id << " : x=" << cork::to_string(b->x) << " ytop=" << cork::to_string(b->ytop)
          << " ybot=" << cork::to_string(b->ybot) << '\n';
  for (const auto& c : d.components())
    out << prefix << "orient " << c << ' ' << (d.orientation().at(c) == Orientation::forward ? '+' : '-') << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Stabilization

FrontDiagram stabilize(const FrontDiagram& d, std::string_view component, bool positive) {
  const auto& segs = d.segments(component);
  const std::size_t before = d.crossings().size();

  // Zigzag template in host-aligned units: u runs along the storage
  // direction of the host segment, v is the offset from the host line.
  struct Offset {
    int u, v;
  };
  const int down = positive ? -1 : 1;
  const Offset shape[] = {{-1, 0}, {1, down}, {0, 2 * down}, {4, 0}};

  for (std::size_t k = 0; k < segs.size(); ++k) {
    const Segment& s = segs[k];
    const Arc& arc = d.arcs()[s.arc];
    const Point& p = arc.points[s.index];
    const Point& q = arc.points[s.index + 1];

    // Crossing-free gap of the host segment, measured in x.
    std::vector<Rational> cuts{p.x, q.x};
    for (const auto& x : d.crossings())
      if ((x.over == component && x.over_segment == k) || (x.under == component && x.under_segment == k))
        cuts.push_back(x.at.x);
    const int dir = sign(q.x - p.x);
    std::sort(cuts.begin(), cuts.end(), [&](const Rational& a, const Rational& b) { return dir > 0 ? a < b : a > b; });
    std::size_t best = 0;
    for (std::size_t i = 1; i + 1 < cuts.size(); ++i)
      if (abs(cuts[i + 1] - cuts[i]) > abs(cuts[best + 1] - cuts[best])) best = i;
    const Rational start = cuts[best];
    const Rational width = abs(cuts[best + 1] - cuts[best]);

    const Rational host_slope = (q.y - p.y) / (q.x - p.x);
    Rational eps = width / 8;
    for (int attempt = 0; attempt < 40; ++attempt, eps /= 2) {
      const Rational mx = start + dir * 2 * eps;
      std::vector<Point> zig;
      for (const auto& o : shape) {
        const Rational x = mx + dir * o.u * eps;
        zig.push_back({x, p.y + host_slope * (x - p.x) + o.v * eps});
      }
      auto arcs = d.arcs();
      auto& pts = arcs[s.arc].points;
      pts.insert(pts.begin() + static_cast<std::ptrdiff_t>(s.index + 1), zig.begin(), zig.end());
      try {
        auto result = FrontDiagram::build(std::move(arcs), d.handles(), d.orientation());
        if (result.crossings().size() == before) return result;
      } catch (const GenericityError&) {
      }
    }
  }
  throw Error("no room to stabilize component '" + std::string(component) + "'");
}

}  // namespace cork::front
