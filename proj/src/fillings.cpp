#include "cork/fillings.hpp"

#include "cork/error.hpp"

#include <cctype>
#include <sstream>

namespace cork::fillings {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

IntVector padded(const IntVector& v, int genus) {
  IntVector out = IntVector::Zero(2 * genus);
  out.head(v.size()) = v;
  return out;
}

std::vector<Assumption> plan_assumptions() {
  return {
      {"symplectic-structure", "V carries a symplectic structure that is concave along the contact boundary"},
      {"b2plus", "the trivializing handles can be chosen so that b2+(V) >= 2"},
      {"relative-minimality", "the closed fibration has no sphere fiber components of square -1"},
      {"section", "the closed Lefschetz fibration admits a section"},
      {"chain-relation-isotopy",
       "the chain relator is trivial in the mapping class group, not only on H1 (only the H1 action is checked)"},
  };
}

}  // namespace

int PALF::euler_char() const { return 1 - 2 * word.genus + static_cast<int>(word.size()); }

PALF make_palf(mcg::TwistWord word, int binding_components, std::string source) {
  if (!word.positive()) throw PreconditionError("PALF vanishing cycles must be right-handed twists");
  for (const auto& l : word.letters) mcg::make_curve(l.curve.name, l.curve.h1);
  if (binding_components < 1) throw PreconditionError("binding needs at least one component");
  return {std::move(word), binding_components, std::move(source)};
}

PALF parse_palf(std::string_view text) {
  std::ostringstream word_text;
  int binding = 1;
  std::string source;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto content = trim(std::string_view(raw).substr(0, raw.find('#')));
    if (content.rfind("binding", 0) == 0) {
      try {
        binding = std::stoi(std::string(trim(content.substr(7))));
      } catch (const std::exception&) {
        throw ParseError("binding needs an integer", line, 1);
      }
      word_text << '\n';
    } else if (content.rfind("source", 0) == 0) {
      source = std::string(trim(content.substr(6)));
      word_text << '\n';
    } else {
      word_text << raw << '\n';
    }
  }
  try {
    return make_palf(mcg::parse_word(word_text.str()), binding, source);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

std::string write_palf(const PALF& p) {
  std::ostringstream out;
  if (!p.source.empty()) out << "source " << p.source << '\n';
  if (p.binding_components != 1) out << "binding " << p.binding_components << '\n';
  out << mcg::write_word(p.word);
  return out.str();
}

OpenBook palf_to_openbook(const PALF& p) {
  if (p.binding_components != 1)
    throw PreconditionError("open book has " + std::to_string(p.binding_components) +
                            " binding components; stabilize to a connected binding first");
  return {p.genus(), p.word, 1};
}

PALF stabilize_palf(const PALF& p) {
  const int g = p.genus() + 1;
  mcg::TwistWord w{g, {}};
  for (const auto& l : p.word.letters) w.letters.push_back({{l.curve.name, padded(l.curve.h1, g)}, l.exponent});
  IntVector a = IntVector::Zero(2 * g);
  a(2 * (g - 1)) = 1;
  a(2 * (g - 2)) = -1;
  IntVector b = IntVector::Zero(2 * g);
  b(2 * (g - 1) + 1) = 1;
  w.letters.push_back({{"stab" + std::to_string(g) + "a", a}, 1});
  w.letters.push_back({{"stab" + std::to_string(g) + "b", b}, 1});
  return make_palf(std::move(w), p.binding_components, p.source);
}

CapOff cap_binding(const OpenBook& ob) {
  if (ob.binding_components != 1) throw PreconditionError("capping needs a connected binding");
  CapOff v0;
  v0.closed_fiber_genus = ob.genus;
  v0.closed_monodromy = ob.monodromy;
  return v0;
}

FillingPlan build_concave(const OpenBook& input) {
  OpenBook ob = input;
  FillingPlan plan;
  plan.palf_euler_char = 1 - 2 * ob.genus + static_cast<int>(ob.monodromy.size());
  if (ob.genus < 2) {
    auto p = stabilize_palf(make_palf(ob.monodromy, ob.binding_components));
    ob = palf_to_openbook(p);
    plan.stabilizations = 1;
  }
  plan.v0 = cap_binding(ob);
  plan.monodromy = ob.monodromy;
  plan.trivializing_handles = mcg::trivialize(ob.monodromy);
  plan.fiber_genus = ob.genus;
  plan.closing_fiber_genus = ob.genus;
  plan.closing_euler_char = 2 - 2 * ob.genus;
  plan.relator_blocks = static_cast<int>(ob.monodromy.size());
  plan.euler_char = plan.v0.euler_char + static_cast<int>(plan.trivializing_handles.size()) + plan.closing_euler_char;
  plan.composite_identity = is_identity(mcg::h1_action(ob.monodromy.then(plan.trivializing_handles)));
  plan.assumptions = plan_assumptions();
  return plan;
}

FillingPlan extend_with_cobordism(const std::optional<kirby::CobordismRecord>& m, const PALF& p) {
  auto plan = build_concave(palf_to_openbook(p));
  if (!m) return plan;
  if (m->one_handles != 0) throw PreconditionError("cobordism contains a 1-handle; it cannot be absorbed");
  if (!m->stein.pass) throw PreconditionError("cobordism is not Stein: " + m->stein.reason);
  plan.stein_absorbed = true;
  plan.absorbed_two_handles = m->two_handles;
  plan.absorbed_euler_char = m->euler_char;
  plan.euler_char += m->euler_char;
  plan.assumptions.push_back(
      {"handle-reordering", "the absorbed Stein 2-handles can be attached after V0 inside the concave filling"});
  return plan;
}

std::vector<HandleCell> enumerate_handles(const FillingPlan& plan) {
  std::vector<HandleCell> cells;
  for (int i = 0; i < plan.absorbed_two_handles; ++i) cells.push_back({"M", 2, "absorbed Stein handle"});
  for (int i = 0; i < plan.v0.two_handles; ++i) cells.push_back({"V0", 2, "binding cap"});
  for (const auto& l : plan.trivializing_handles.letters) cells.push_back({"V1", 2, l.curve.name});
  cells.push_back({"FxD2", 0, "fiber 0-cell"});
  for (int i = 0; i < 2 * plan.closing_fiber_genus; ++i) cells.push_back({"FxD2", 1, "fiber 1-cell"});
  cells.push_back({"FxD2", 2, "fiber 2-cell"});
  return cells;
}

ClosedLF closed_total(int one_handles, int two_handles, const FillingPlan& plan, std::optional<int> sigma) {
  const int chi_w = 1 - one_handles + two_handles;
  if (chi_w + plan.absorbed_euler_char != plan.palf_euler_char)
    throw PreconditionError("plan was built over a different open book: chi(W) + chi(M) = " +
                            std::to_string(chi_w + plan.absorbed_euler_char) + " but the PALF has chi " +
                            std::to_string(plan.palf_euler_char));
  ClosedLF x;
  x.fiber_genus = plan.fiber_genus;
  x.chi_W = chi_w;
  x.chi_X = chi_w + plan.euler_char;
  x.relatively_minimal = true;  // every vanishing cycle is primitive
  x.sigma = sigma;
  x.assumptions = plan.assumptions;
  x.from_plan = plan.built_from_openbook;
  return x;
}

bool has_assumption(const std::vector<Assumption>& list, std::string_view id) {
  for (const auto& a : list)
    if (a.id == id) return true;
  return false;
}

namespace {

nlohmann::ordered_json assumptions_json(const std::vector<Assumption>& list) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& a : list) out.push_back({{"id", a.id}, {"statement", a.statement}, {"status", "declared-unverified"}});
  return out;
}

}  // namespace

nlohmann::ordered_json to_json(const FillingPlan& plan) {
  nlohmann::ordered_json j;
  j["v0"] = {{"two_handles", plan.v0.two_handles},
             {"page_framing", plan.v0.page_framing},
             {"euler_char", plan.v0.euler_char},
             {"closed_fiber_genus", plan.v0.closed_fiber_genus}};
  j["monodromy"] = mcg::to_json(plan.monodromy);
  j["trivializing_handles"] = {{"length", plan.trivializing_handles.size()},
                               {"framing", -1},
                               {"word", mcg::write_word(plan.trivializing_handles)}};
  j["closing_piece"] = {{"kind", "F x D2"},
                        {"fiber_genus", plan.closing_fiber_genus},
                        {"euler_char", plan.closing_euler_char}};
  j["euler_char"] = plan.euler_char;
  j["fiber_genus"] = plan.fiber_genus;
  j["relator_blocks"] = plan.relator_blocks;
  j["stabilizations"] = plan.stabilizations;
  j["composite_identity"] = plan.composite_identity;
  j["stein_absorbed"] = plan.stein_absorbed;
  j["absorbed"] = {{"two_handles", plan.absorbed_two_handles}, {"euler_char", plan.absorbed_euler_char}};
  j["palf_euler_char"] = plan.palf_euler_char;
  j["assumptions"] = assumptions_json(plan.assumptions);
  j["note"] = "monodromy identities are checked on H1 only";
  return j;
}

nlohmann::ordered_json to_json(const ClosedLF& x) {
  return {{"fiber_genus", x.fiber_genus},
          {"chi_W", x.chi_W},
          {"chi_X", x.chi_X},
          {"relatively_minimal", x.relatively_minimal},
          {"fiber_self_intersection", x.fiber_self_intersection},
          {"sigma", x.sigma ? nlohmann::ordered_json(*x.sigma) : nlohmann::ordered_json("unknown")},
          {"assumptions", assumptions_json(x.assumptions)}};
}

}  // namespace cork::fillings
