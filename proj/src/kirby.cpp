#include "cork/kirby.hpp"

#include "cork/error.hpp"
#include "cork/reidemeister.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace cork::kirby {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::pair<std::string_view, std::string_view> split_keyword(std::string_view content) {
  const auto space = content.find_first_of(" \t");
  if (space == std::string_view::npos) return {content, {}};
  return {content.substr(0, space), trim(content.substr(space + 1))};
}

// Calls `handle(keyword, rest, line)` for every non-blank, comment-stripped line.
template <class F>
void for_each_line(std::string_view text, F&& handle) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto content = trim(std::string_view(line).substr(0, line.find('#')));
    if (content.empty()) continue;
    const auto [keyword, rest] = split_keyword(content);
    handle(keyword, rest, line_no);
  }
}

Point parse_pair(std::string_view text, std::size_t line) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    throw ParseError("expected '(a,b)', got '" + std::string(text) + "'", line, 1);
  const auto inner = text.substr(1, text.size() - 2);
  const auto comma = inner.find(',');
  if (comma == std::string_view::npos) throw ParseError("expected '(a,b)'", line, 1);
  try {
    return {parse_rational(trim(inner.substr(0, comma))), parse_rational(trim(inner.substr(comma + 1)))};
  } catch (const ParseError& e) {
    throw ParseError(e.what(), line, 1);
  }
}

int parse_int(std::string_view text, std::size_t line, std::string_view what) {
  text = trim(text);
  try {
    std::size_t used = 0;
    const int v = std::stoi(std::string(text), &used);
    if (used != text.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string(what) + " must be an integer, got '" + std::string(text) + "'", line, 1);
  }
}

using SegmentKey = std::pair<Point, Point>;

bool point_less(const Point& a, const Point& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

SegmentKey key_of(Point a, Point b) {
  if (point_less(b, a)) std::swap(a, b);
  return {a, b};
}

struct KeyLess {
  bool operator()(const SegmentKey& a, const SegmentKey& b) const {
    if (!(a.first == b.first)) return point_less(a.first, b.first);
    return point_less(a.second, b.second);
  }
};

using KeySet = std::set<SegmentKey, KeyLess>;

std::string partner(const Involution& inv, const std::string& c) {
  if (c == inv.first) return inv.second;
  if (c == inv.second) return inv.first;
  return c;
}

}  // namespace

// ---------------------------------------------------------------------------
// Plane maps

Point PlaneMap::apply(const Point& p) const { return {a11 * p.x + a12 * p.y + tx, a21 * p.x + a22 * p.y + ty}; }

PlaneMap PlaneMap::then(const PlaneMap& n) const {
  PlaneMap r;
  r.a11 = n.a11 * a11 + n.a12 * a21;
  r.a12 = n.a11 * a12 + n.a12 * a22;
  r.a21 = n.a21 * a11 + n.a22 * a21;
  r.a22 = n.a21 * a12 + n.a22 * a22;
  r.tx = n.a11 * tx + n.a12 * ty + n.tx;
  r.ty = n.a21 * tx + n.a22 * ty + n.ty;
  return r;
}

bool PlaneMap::is_identity() const { return a11 == 1 && a12 == 0 && a21 == 0 && a22 == 1 && tx == 0 && ty == 0; }

PlaneMap parse_plane_map(std::string_view script, std::size_t line) {
  PlaneMap total;
  std::size_t start = 0;
  bool any = false;
  while (start <= script.size()) {
    const auto semi = script.find(';', start);
    const auto step = trim(script.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start));
    start = semi == std::string_view::npos ? script.size() + 1 : semi + 1;
    if (step.empty()) continue;
    const auto [op, arg] = split_keyword(step);
    PlaneMap m;
    if (op == "rot180") {
      const auto c = parse_pair(arg, line);
      m.a11 = -1, m.a22 = -1, m.tx = 2 * c.x, m.ty = 2 * c.y;
    } else if (op == "reflect-x") {
      m.a11 = -1, m.tx = 2 * parse_rational(arg);
    } else if (op == "reflect-y") {
      m.a22 = -1, m.ty = 2 * parse_rational(arg);
    } else if (op == "translate") {
      const auto t = parse_pair(arg, line);
      m.tx = t.x, m.ty = t.y;
    } else {
      throw ParseError("unknown self-map step '" + std::string(op) + "'", line, 1);
    }
    total = total.then(m);
    any = true;
  }
  if (!any) throw ParseError("empty self-map script", line, 1);
  return total;
}

// ---------------------------------------------------------------------------
// Documents

std::vector<std::string> KirbyDiagram::dotted() const {
  std::vector<std::string> out;
  for (const auto& c : front.components())
    if (decorations.at(c).dotted) out.push_back(c);
  return out;
}

std::vector<std::string> KirbyDiagram::framed() const {
  std::vector<std::string> out;
  for (const auto& c : front.components())
    if (!decorations.at(c).dotted) out.push_back(c);
  return out;
}

KirbyDiagram parse_diagram(std::string_view text) {
  front::FrontBuilder main, stein;
  KirbyDiagram d;
  std::size_t involution_line = 0;
  for_each_line(text, [&](std::string_view keyword, std::string_view rest, std::size_t line) {
    if (main.accept(keyword, rest, line)) return;
    if (keyword == "dot" || keyword == "frame") {
      std::istringstream in{std::string(rest)};
      std::string id, extra;
      if (!(in >> id)) throw ParseError(std::string(keyword) + " needs a component id", line, 1);
      Decoration dec{keyword == "dot", 0};
      if (!dec.dotted) {
        std::string n;
        if (!(in >> n)) throw ParseError("frame needs '<component> <integer>'", line, 1);
        dec.framing = parse_int(n, line, "framing");
      }
      if (in >> extra) throw ParseError("unexpected '" + extra + "'", line, 1);
      if (!d.decorations.emplace(id, dec).second)
        throw ParseError("component '" + id + "' decorated twice", line, 1);
      return;
    }
    if (keyword == "involution") {
      if (d.involution) throw ParseError("second involution line", line, 1);
      const auto colon = rest.find(':');
      if (colon == std::string_view::npos) throw ParseError("involution needs '<c1> <c2> : <script>'", line, 1);
      std::istringstream in{std::string(rest.substr(0, colon))};
      Involution inv;
      std::string extra;
      if (!(in >> inv.first >> inv.second) || (in >> extra))
        throw ParseError("involution needs exactly two components", line, 1);
      inv.script = std::string(trim(rest.substr(colon + 1)));
      inv.map = parse_plane_map(inv.script, line);
      d.involution = std::move(inv);
      involution_line = line;
      return;
    }
    if (keyword == "stein") {
      const auto [k, r] = split_keyword(rest);
      if (!stein.accept(k, r, line)) throw ParseError("stein lines take front keywords", line, 1);
      return;
    }
    throw ParseError("unknown keyword '" + std::string(keyword) + "'", line, 1);
  });
  d.front = main.build();
  for (const auto& c : d.front.components())
    if (!d.decorations.count(c)) throw ParseError("component '" + c + "' has no decoration");
  for (const auto& [c, dec] : d.decorations)
    if (!d.front.has_component(c)) throw ParseError("decoration for unknown component '" + c + "'");
  if (d.involution) {
    const auto& inv = *d.involution;
    if (inv.first == inv.second || !d.front.has_component(inv.first) || !d.front.has_component(inv.second))
      throw ParseError("involution must exchange two distinct components", involution_line, 1);
  }
  if (!stein.empty()) {
    d.stein = stein.build();
    for (const auto& h : d.stein->handles()) {
      auto it = d.decorations.find(h.id);
      if (it == d.decorations.end() || !it->second.dotted)
        throw ParseError("stein handle '" + h.id + "' is not a dotted component");
    }
    for (const auto& c : d.stein->components()) {
      auto it = d.decorations.find(c);
      if (it == d.decorations.end() || it->second.dotted)
        throw ParseError("stein component '" + c + "' is not a framed component");
    }
  }
  return d;
}

std::string write_diagram(const KirbyDiagram& d) {
  std::ostringstream out;
  out << front::write_front(d.front);
  for (const auto& c : d.front.components()) {
    const auto& dec = d.decorations.at(c);
    if (dec.dotted)
      out << "dot " << c << '\n';
    else
      out << "frame " << c << ' ' << dec.framing << '\n';
  }
  if (d.involution) out << "involution " << d.involution->first << ' ' << d.involution->second << " : " << d.involution->script << '\n';
  if (d.stein) out << front::write_front(*d.stein, "stein ");
  return out.str();
}

// ---------------------------------------------------------------------------
// Involution

InvolutionCheck verify_involution(const KirbyDiagram& d) {
  if (!d.involution) return {false, "no involution supplied"};
  const auto& inv = *d.involution;
  const auto& m = inv.map;
  if (!m.then(m).is_identity()) return {false, "self-map is not an involution"};

  std::map<std::string, KeySet> keys;
  for (const auto& c : d.front.components())
    for (const auto& s : d.front.segments(c)) keys[c].insert(key_of(s.from, s.to));
  for (const auto& c : d.front.components()) {
    KeySet image;
    for (const auto& s : d.front.segments(c)) image.insert(key_of(m.apply(s.from), m.apply(s.to)));
    const auto target = partner(inv, c);
    if (image != keys.at(target))
      return {false, "image of '" + c + "' is not '" + target + "'"};
  }
  for (const auto& h : d.front.handles())
    for (const front::Ball* b : {&h.first, &h.second}) {
      const auto top = m.apply({b->x, b->ytop});
      const auto bot = m.apply({b->x, b->ybot});
      bool found = false;
      for (const auto& g : d.front.handles())
        for (const front::Ball* c : {&g.first, &g.second})
          found = found || key_of(top, bot) == key_of({c->x, c->ytop}, {c->x, c->ybot});
      if (!found) return {false, "image of a ball of handle '" + h.id + "' is not a ball"};
    }

  // Crossing data: the image of an over strand must be over at the image point.
  for (const auto& x : d.front.crossings()) {
    const auto p = m.apply(x.at);
    const auto& over_seg = d.front.segments(x.over)[x.over_segment];
    const auto over_key = key_of(m.apply(over_seg.from), m.apply(over_seg.to));
    bool ok = false;
    for (const auto& y : d.front.crossings()) {
      if (!(y.at == p)) continue;
      const auto& s = d.front.segments(y.over)[y.over_segment];
      ok = y.over == partner(inv, x.over) && y.under == partner(inv, x.under) && key_of(s.from, s.to) == over_key;
    }
    if (!ok) return {false, "crossing at " + front::to_string(x.at) + " changes type under the self-map"};
  }
  return {true, "self-map '" + inv.script + "' exchanges " + inv.first + " and " + inv.second};
}

// ---------------------------------------------------------------------------
// Homology

IntMatrix linking_matrix(const KirbyDiagram& d) {
  const auto& comps = d.front.components();
  const auto n = static_cast<Eigen::Index>(comps.size());
  IntMatrix l = IntMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& dec = d.decorations.at(comps[i]);
    l(i, i) = dec.dotted ? 0 : dec.framing;
    for (Eigen::Index j = i + 1; j < n; ++j) l(i, j) = l(j, i) = d.front.linking_number(comps[i], comps[j]);
  }
  return l;
}

HomologyReport homology_from_matrices(const IntMatrix& boundary, const IntMatrix& attaching) {
  HomologyReport r;
  r.linking_matrix = boundary;
  const AbelianGroup z{1, {}};
  const auto h1_boundary = smith_normal_form(boundary).cokernel();
  r.h_of_boundary = {z, h1_boundary, AbelianGroup{h1_boundary.free_rank, {}}, z};

  const auto d2 = smith_normal_form(attaching);
  const AbelianGroup h1 = attaching.rows() == 0 ? AbelianGroup{} : d2.cokernel();
  const AbelianGroup h2{static_cast<int>(attaching.cols() - d2.rank()), {}};
  r.h_of_W = {z, h1, h2, {}, {}};
  r.is_homology_sphere = h1_boundary.is_trivial();
  r.is_contractible = h1.is_trivial() && h2.is_trivial() && attaching.rows() == attaching.cols();
  return r;
}

HomologyReport homology(const KirbyDiagram& d) {
  const auto dots = d.dotted();
  const auto frames = d.framed();
  IntMatrix attaching = IntMatrix::Zero(static_cast<Eigen::Index>(dots.size()), static_cast<Eigen::Index>(frames.size()));
  for (std::size_t i = 0; i < dots.size(); ++i)
    for (std::size_t j = 0; j < frames.size(); ++j)
      attaching(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = d.front.linking_number(dots[i], frames[j]);
  return homology_from_matrices(linking_matrix(d), attaching);
}

// ---------------------------------------------------------------------------
// Admissibility

UnknotCheck unknot_certificate(const FrontDiagram& d, std::string_view component, int budget, std::uint64_t seed) {
  UnknotCheck check{std::string(component), false, {}, 0, false};
  if (d.handle_passages(component) > 0) return check;
  const auto result = reidemeister::search_unknot(d.gauss_code(component), budget, seed);
  check.verified = result.unknotted;
  check.states_explored = result.states_explored;
  check.truncated = result.truncated;
  for (const auto& m : result.moves) check.moves.push_back(m.to_string());
  return check;
}

bool AdmissibilityReport::inconclusive() const {
  return std::any_of(cond1.begin(), cond1.end(), [](const UnknotCheck& c) { return !c.verified; });
}

bool AdmissibilityReport::admissible() const { return !inconclusive() && cond2 && cond3 && cond4prime; }

AdmissibilityReport check_admissible(const KirbyDiagram& d, int budget, std::uint64_t seed) {
  const auto dots = d.dotted();
  const auto frames = d.framed();
  if (d.front.components().size() != 2 || dots.size() != 1 || frames.size() != 1 ||
      d.decorations.at(frames[0]).framing != 0)
    throw PreconditionError("admissibility needs one dotted and one 0-framed component");
  if (budget < 0) throw PreconditionError("move budget must be non-negative");

  AdmissibilityReport r;
  r.budget = budget;
  r.seed = seed;
  for (const auto& c : d.front.components()) r.cond1.push_back(unknot_certificate(d.front, c, budget, seed));

  const auto inv = verify_involution(d);
  r.cond2 = inv.verified;
  r.cond2_detail = inv.detail;

  r.linking = d.front.linking_number(dots[0], frames[0]);
  r.cond3 = r.linking == 1 || r.linking == -1;

  if (!d.stein) {
    r.cond4_detail = "max-tb condition checked on the exhibited front: no Legendrian presentation supplied";
  } else if (!d.stein->has_component(frames[0])) {
    r.cond4_detail = "max-tb condition checked on the exhibited front: presentation lacks '" + frames[0] + "'";
  } else {
    const int tb = d.stein->tb(frames[0]);
    const int wind = d.stein->winding(frames[0], dots[0]);
    r.stein_tb = tb;
    if (std::abs(wind) != std::abs(r.linking))
      r.cond4_detail = "max-tb condition checked on the exhibited front: presentation winds " + std::to_string(wind) +
                       " times over the 1-handle but the linking number is " + std::to_string(r.linking);
    else if (tb >= 1) {
      r.cond4prime = true;
      r.cond4_detail = "max-tb condition checked on the exhibited front: exhibited tb = " + std::to_string(tb) + " >= 1";
    } else {
      r.cond4_detail = "max-tb condition checked on the exhibited front: exhibited tb = " + std::to_string(tb) + " < 1";
    }
  }
  return r;
}

KirbyDiagram cork_twist(const KirbyDiagram& d) {
  if (!d.involution) throw PreconditionError("cork twist needs an involution");
  const auto& inv = *d.involution;
  const auto& a = d.decorations.at(inv.first);
  const auto& b = d.decorations.at(inv.second);
  const bool a_dot = a.dotted && !b.dotted && b.framing == 0;
  const bool b_dot = b.dotted && !a.dotted && a.framing == 0;
  if (!a_dot && !b_dot) throw PreconditionError("cork twist needs the involution to pair a dot with a 0-framing");
  KirbyDiagram out = d;
  std::swap(out.decorations.at(inv.first), out.decorations.at(inv.second));
  if (d.stein) out.stein = d.stein->renamed({{inv.first, inv.second}, {inv.second, inv.first}});
  return out;
}

// ---------------------------------------------------------------------------
// Stein handles

SteinVerdict stein_check(const FrontDiagram& front, std::string_view component, int framing,
                         const std::optional<knotdb::KnotFacts>& facts) {
  SteinVerdict v;
  v.component = std::string(component);
  v.framing = framing;
  v.tb = front.tb(component);
  v.writhe = front.writhe(component);
  v.cusps = front.cusp_count(component);
  v.handle_passes = front.handle_passages(component);
  v.pass = framing == v.tb - 1;
  const auto f = std::to_string(framing);
  if (v.pass)
    v.reason = "framing " + f + " = tb - 1 = " + std::to_string(v.tb - 1);
  else if (facts && v.handle_passes == 0 && framing + 1 > facts->max_tb)
    v.reason = "framing " + f + " ≠ tb − 1 for exhibited tb ≤ " + std::to_string(facts->max_tb);
  else
    v.reason = "framing " + f + " ≠ tb − 1 = " + std::to_string(v.tb - 1);
  return v;
}

std::vector<SteinVerdict> stein_realizable(const KirbyDiagram& d) {
  if (!d.stein) throw PreconditionError("no Legendrian presentation of the 2-handles");
  std::vector<SteinVerdict> out;
  for (const auto& c : d.framed()) {
    if (!d.stein->has_component(c)) throw PreconditionError("2-handle '" + c + "' has no Legendrian front");
    out.push_back(stein_check(*d.stein, c, d.decorations.at(c).framing));
  }
  return out;
}

CobordismRecord inflate(const KirbyDiagram& d, const FrontDiagram& k, std::string_view component, int framing,
                        std::string_view knot) {
  if (!k.has_component(component)) throw PreconditionError("inflation front lacks '" + std::string(component) + "'");
  for (const auto& h : k.handles()) {
    auto it = d.decorations.find(h.id);
    if (it == d.decorations.end() || !it->second.dotted)
      throw PreconditionError("ball pair '" + h.id + "' is not a dotted circle of the diagram");
  }
  CobordismRecord m;
  m.knot = std::string(knot);
  m.component = std::string(component);
  m.framing = framing;
  if (!knot.empty()) m.facts = knotdb::require(knot);
  m.stein = stein_check(k, component, framing, m.facts);
  m.front = k;
  return m;
}

InflationSpec parse_inflation(std::string_view text) {
  InflationSpec spec;
  front::FrontBuilder untwisted, twisted;
  bool have_framing = false;
  for_each_line(text, [&](std::string_view keyword, std::string_view rest, std::size_t line) {
    if (keyword == "knot") {
      spec.knot = std::string(rest);
    } else if (keyword == "framing") {
      spec.framing = parse_int(rest, line, "framing");
      have_framing = true;
    } else if (keyword == "component") {
      spec.component = std::string(rest);
    } else if (keyword == "untwisted" || keyword == "twisted") {
      const auto [k, r] = split_keyword(rest);
      auto& builder = keyword == "untwisted" ? untwisted : twisted;
      if (!builder.accept(k, r, line)) throw ParseError("expected a front keyword after " + std::string(keyword), line, 1);
    } else {
      throw ParseError("unknown keyword '" + std::string(keyword) + "'", line, 1);
    }
  });
  if (spec.knot.empty() || spec.component.empty() || !have_framing)
    throw ParseError("inflation needs knot, framing and component lines");
  if (untwisted.empty() || twisted.empty()) throw ParseError("inflation needs untwisted and twisted fronts");
  spec.untwisted = untwisted.build();
  spec.twisted = twisted.build();
  return spec;
}

// ---------------------------------------------------------------------------
// Structured output

nlohmann::ordered_json to_json(const AbelianGroup& g) {
  return {{"free_rank", g.free_rank}, {"torsion", g.torsion}, {"text", g.to_string()}};
}

nlohmann::ordered_json to_json(const HomologyReport& r) {
  nlohmann::ordered_json j;
  auto rows = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < r.linking_matrix.rows(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (Eigen::Index k = 0; k < r.linking_matrix.cols(); ++k) row.push_back(r.linking_matrix(i, k));
    rows.push_back(row);
  }
  j["linking_matrix"] = rows;
  j["h_of_W"] = nlohmann::ordered_json::array();
  for (const auto& g : r.h_of_W) j["h_of_W"].push_back(to_json(g));
  j["h_of_boundary"] = nlohmann::ordered_json::array();
  for (const auto& g : r.h_of_boundary) j["h_of_boundary"].push_back(to_json(g));
  j["is_contractible"] = r.is_contractible;
  j["is_homology_sphere"] = r.is_homology_sphere;
  return j;
}

nlohmann::ordered_json to_json(const AdmissibilityReport& r) {
  nlohmann::ordered_json j;
  j["cond1"] = nlohmann::ordered_json::array();
  for (const auto& c : r.cond1)
    j["cond1"].push_back({{"component", c.component},
                          {"status", c.verified ? "verified" : "inconclusive"},
                          {"moves", c.moves},
                          {"states_explored", c.states_explored},
                          {"truncated", c.truncated}});
  j["cond2"] = {{"status", r.cond2 ? "verified" : "absent"}, {"detail", r.cond2_detail}};
  j["cond3"] = {{"status", r.cond3 ? "holds" : "fails"}, {"linking_number", r.linking},
                {"note", "±1 for some choice of orientations"}};
  j["cond4prime"] = {{"status", r.cond4prime ? "certified" : "not-certified"},
                     {"tb", r.stein_tb ? nlohmann::ordered_json(*r.stein_tb) : nlohmann::ordered_json(nullptr)},
                     {"detail", r.cond4_detail}};
  j["verdict"] = r.inconclusive() ? "inconclusive" : r.admissible() ? "admissible" : "not admissible";
  j["budget"] = r.budget;
  j["seed"] = r.seed;
  j["tb_convention"] = "crossings and cusps counted as drawn; no correction for 1-handle passages";
  return j;
}

nlohmann::ordered_json to_json(const SteinVerdict& v) {
  return {{"component", v.component}, {"framing", v.framing},      {"tb", v.tb},
          {"writhe", v.writhe},       {"cusps", v.cusps},          {"handle_passes", v.handle_passes},
          {"pass", v.pass},           {"reason", v.reason}};
}

nlohmann::ordered_json to_json(const CobordismRecord& m) {
  nlohmann::ordered_json j{{"knot", m.knot},           {"component", m.component},     {"framing", m.framing},
                           {"one_handles", m.one_handles}, {"two_handles", m.two_handles}, {"euler_char", m.euler_char},
                           {"stein", to_json(m.stein)}};
  if (m.facts)
    j["facts"] = {{"seifert_genus", m.facts->seifert_genus}, {"max_tb", m.facts->max_tb}, {"source", m.facts->source}};
  return j;
}

}  // namespace cork::kirby
