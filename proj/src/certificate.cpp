#include "cork/certificate.hpp"

#include "cork/expr.hpp"
#include "cork/hf.hpp"
#include "cork/mcg.hpp"

#include <set>
#include <sstream>

namespace cork::certificate {

namespace {

constexpr const char* kFormat = "cork-certificate/1";

std::string abort_text(const std::string& rule, const std::string& condition) {
  return rule + " not applicable (" + condition + " fails)";
}

class Builder {
 public:
  class Step {
   public:
    Step(Builder& owner, std::string rule, std::string quote) : owner_(owner) {
      j_["id"] = "s" + std::to_string(owner.steps_.size() + 1);
      j_["rule"] = rule;
      j_["quote"] = std::move(quote);
      j_["inputs"] = Json::array();
      j_["side_conditions"] = Json::array();
      j_["outputs"] = Json::array();
      rule_ = std::move(rule);
    }

    Step& input(const std::string& id) {
      j_["inputs"].push_back(id);
      return *this;
    }

    /// Records the condition; throws Aborted with `failure` (or a generic
    /// message) when it evaluates to false.
    Step& check(const std::string& label, const std::string& text, const expr::Bindings& bindings,
                const std::string& failure = "") {
      const bool ok = expr::holds(text, bindings);
      if (!ok) throw Aborted(rule_, failure.empty() ? abort_text(rule_, label) : failure);
      Json b = Json::object();
      for (const auto& [name, value] : bindings) b[name] = to_string(value);
      j_["side_conditions"].push_back({{"label", label}, {"expr", text}, {"bindings", b}, {"value", ok}});
      return *this;
    }

    std::string output(const std::string& statement, Json data = Json::object()) {
      const std::string id = "f" + std::to_string(++owner_.facts_);
      j_["outputs"].push_back({{"id", id}, {"statement", statement}, {"data", std::move(data)}});
      return id;
    }

    void commit() { owner_.steps_.push_back(std::move(j_)); }

   private:
    Builder& owner_;
    Json j_;
    std::string rule_;
  };

  Step step(std::string rule, std::string quote) { return Step(*this, std::move(rule), std::move(quote)); }
  Json steps() const { return steps_; }

 private:
  Json steps_ = Json::array();
  int facts_ = 0;
};

Rational r(long long v) { return Rational(v); }
Rational r(bool v) { return Rational(v ? 1 : 0); }

Json assumption(const std::string& id, const std::string& statement) {
  return {{"id", id}, {"statement", statement}, {"status", "declared-unverified"}};
}

}  // namespace

Json certify_distinct(const Inputs& in) {
  const auto d = kirby::parse_diagram(in.diagram);
  const auto palf = fillings::parse_palf(in.palf);
  const auto spec = kirby::parse_inflation(in.inflation);
  const auto facts = knotdb::require(spec.knot);

  const auto dots = d.dotted();
  const auto frames = d.framed();
  if (dots.size() != 1 || frames.size() != 1)
    throw PreconditionError("the cork diagram needs one dotted and one framed component");
  const std::string dotted = dots[0], framed = frames[0];

  Builder b;

  // Cork.
  const auto adm = kirby::check_admissible(d, in.budget, in.seed);
  const auto hom = kirby::homology(d);
  const int chi_w = 1 - static_cast<int>(dots.size()) + static_cast<int>(frames.size());
  const auto h1_order = hom.h_of_boundary[1].order();
  std::string f_cork;
  {
    auto s = b.step("cork_admissible",
                    "A two-component link of unknots exchanged by an involution of S^3, with linking number ±1 and a "
                    "Legendrian 1-handle presentation of the framed component with tb ≥ 1, gives a contractible "
                    "Stein domain W whose boundary involution is the cork twist.");
    s.input("axiom:diagram");
    for (const auto& c : adm.cond1)
      s.check("unknotted " + c.component, "verified == 1 && moves <= budget",
              {{"verified", r(c.verified)}, {"moves", r(static_cast<long long>(c.moves.size()))}, {"budget", r(static_cast<long long>(in.budget))}},
              abort_text("cork_admissible", "unknot certificate for " + c.component + " within " +
                                                std::to_string(in.budget) + " moves"));
    s.check("involution exchanges components", "involution == 1", {{"involution", r(adm.cond2)}},
            abort_text("cork_admissible", "involution certificate"));
    s.check("linking number ±1", "abs(lk) == 1", {{"lk", r(static_cast<long long>(adm.linking))}});
    s.check("Legendrian presentation tb ≥ 1", "tb >= 1 && abs(winding) == abs(lk)",
            {{"tb", r(static_cast<long long>(adm.stein_tb.value_or(-1000000)))},
             {"winding", r(static_cast<long long>(d.stein && d.stein->has_component(framed) ? d.stein->winding(framed, dotted) : 0))},
             {"lk", r(static_cast<long long>(adm.linking))}},
            abort_text("cork_admissible", "exhibited tb ≥ 1 over the 1-handle"));
    s.check("boundary is a homology sphere and W is contractible", "h1_order == 1 && contractible == 1",
            {{"h1_order", r(static_cast<long long>(h1_order))}, {"contractible", r(hom.is_contractible)}});
    s.input("assumption:legendrian-presentation");
    f_cork = s.output("W is a contractible Stein domain; τ exchanges " + dotted + " and " + framed +
                          "; ξ is the induced contact structure on ∂W",
                      {{"dotted", dotted},
                       {"framed", framed},
                       {"linking_number", adm.linking},
                       {"stein_tb", *adm.stein_tb},
                       {"chi_W", chi_w},
                       {"involution", d.involution->script},
                       {"search_seed", in.seed}});
    s.commit();
  }

  // Inflation, untwisted side.
  const auto untwisted = kirby::inflate(d, spec.untwisted, spec.component, spec.framing, spec.knot);
  std::string f_m;
  {
    auto s = b.step("stein_handle",
                    "A 2-handle attached along a Legendrian knot with framing tb − 1 extends the Stein structure.");
    s.input(f_cork).input("axiom:inflation");
    const auto& v = untwisted.stein;
    s.check("tb from the front", "tb == writhe - cusps/2",
            {{"tb", r(static_cast<long long>(v.tb))}, {"writhe", r(static_cast<long long>(v.writhe))}, {"cusps", r(static_cast<long long>(v.cusps))}});
    s.check("framing is tb − 1", "framing == tb - 1",
            {{"framing", r(static_cast<long long>(v.framing))}, {"tb", r(static_cast<long long>(v.tb))}},
            "untwisted Stein check wants framing = tb − 1 = " + std::to_string(v.tb - 1));
    s.check("no 1-handles in the cobordism", "one_handles == 0",
            {{"one_handles", r(static_cast<long long>(untwisted.one_handles))}});
    f_m = s.output("M: 2-handle along the " + spec.knot + " " + spec.component + " with framing " +
                       std::to_string(spec.framing) + " is a Stein cobordism from (∂W, ξ)",
                   {{"chi_M", untwisted.euler_char}, {"tb", v.tb}, {"handle_passes", v.handle_passes}});
    s.commit();
  }

  // Inflation, twisted side.
  const auto twisted_d = kirby::cork_twist(d);
  const auto twisted = kirby::inflate(twisted_d, spec.twisted, spec.component, spec.framing, spec.knot);
  {
    auto s = b.step("stein_obstruction",
                    "A Legendrian knot in S^3 has tb at most the maximal tb of its knot type, so a framing of at "
                    "least that maximum cannot be tb − 1.");
    s.input(f_cork).input("axiom:inflation").input("assumption:knot-type").input("assumption:max-tb");
    const auto& v = twisted.stein;
    s.check("twisted front avoids the 1-handle", "handle_passes == 0",
            {{"handle_passes", r(static_cast<long long>(v.handle_passes))}});
    s.check("exhibited tb within the bound", "exhibited_tb <= max_tb",
            {{"exhibited_tb", r(static_cast<long long>(v.tb))}, {"max_tb", r(static_cast<long long>(facts.max_tb))}});
    s.check("framing exceeds every achievable tb − 1", "framing + 1 > max_tb",
            {{"framing", r(static_cast<long long>(spec.framing))}, {"max_tb", r(static_cast<long long>(facts.max_tb))}},
            "stein_obstruction not applicable (the twisted attachment may be Stein)");
    s.output("after the cork twist the same attachment is not a Stein handle: " + v.reason,
             {{"pass", v.pass}, {"tb", v.tb}, {"max_tb", facts.max_tb}});
    s.commit();
  }

  // PALF.
  std::string f_palf;
  {
    auto s = b.step("palf_consistency",
                    "A positive allowable Lefschetz fibration over the disk with fiber genus g and n vanishing "
                    "cycles has Euler characteristic 1 − 2g + n.");
    s.input(f_cork).input(f_m).input("axiom:palf").input("assumption:palf-presents-W-with-M");
    bool primitive = true;
    for (const auto& l : palf.word.letters) {
      try {
        mcg::make_curve(l.curve.name, l.curve.h1);
      } catch (const PreconditionError&) {
        primitive = false;
      }
    }
    s.check("Euler characteristic matches W ∪ M", "chi_W + chi_M == 1 - 2*genus + cycles",
            {{"chi_W", r(static_cast<long long>(chi_w))},
             {"chi_M", r(static_cast<long long>(untwisted.euler_char))},
             {"genus", r(static_cast<long long>(palf.genus()))},
             {"cycles", r(static_cast<long long>(palf.word.size()))}});
    s.check("positive, non-separating vanishing cycles", "positive == 1 && primitive == 1",
            {{"positive", r(palf.word.positive())}, {"primitive", r(primitive)}});
    f_palf = s.output("P is a PALF on W ∪ M with fiber genus " + std::to_string(palf.genus()),
                      {{"genus", palf.genus()}, {"cycles", palf.word.size()}});
    s.commit();
  }

  // Concave filling.
  const auto plan = fillings::extend_with_cobordism(untwisted, palf);
  const auto closed = fillings::closed_total(static_cast<int>(dots.size()), static_cast<int>(frames.size()), plan, in.sigma);
  std::string f_v;
  {
    auto s = b.step("concave_filling",
                    "Capping the binding of a connected-binding open book, attaching −1 framed handles that spell "
                    "a positive inverse of the monodromy, and closing with F × D^2 gives a concave filling; Stein "
                    "handles without 1-handles can be attached after the cap.");
    s.input(f_palf).input(f_m).input("assumption:symplectic-structure").input("assumption:chain-relation-isotopy");
    const int g = plan.fiber_genus;
    s.check("fiber genus after stabilization", "fiber_genus >= 2 && fiber_genus == genus + stabilizations",
            {{"fiber_genus", r(static_cast<long long>(g))}, {"genus", r(static_cast<long long>(palf.genus()))}, {"stabilizations", r(static_cast<long long>(plan.stabilizations))}});
    s.check("handle count from the chain relator", "handles == letters * (2*fiber_genus*(4*fiber_genus + 2) - 1)",
            {{"handles", r(static_cast<long long>(plan.trivializing_handles.size()))},
             {"letters", r(static_cast<long long>(plan.monodromy.size()))},
             {"fiber_genus", r(static_cast<long long>(g))}});
    s.check("monodromy times handles acts trivially on H1", "composite_identity == 1",
            {{"composite_identity", r(plan.composite_identity)}});
    s.check("Euler characteristic of the filling", "euler_char == absorbed + 1 + handles + 2 - 2*fiber_genus",
            {{"euler_char", r(static_cast<long long>(plan.euler_char))},
             {"absorbed", r(static_cast<long long>(plan.absorbed_euler_char))},
             {"handles", r(static_cast<long long>(plan.trivializing_handles.size()))},
             {"fiber_genus", r(static_cast<long long>(g))}});
    s.check("absorbed cobordism has no 1-handles", "one_handles == 0 && absorbed_ok == 1",
            {{"one_handles", r(static_cast<long long>(untwisted.one_handles))}, {"absorbed_ok", r(plan.stein_absorbed)}});
    f_v = s.output("V is a concave filling of (∂W, ξ) with M absorbed after the binding cap",
                   {{"fiber_genus", g},
                    {"trivializing_handles", plan.trivializing_handles.size()},
                    {"relator_blocks", plan.relator_blocks},
                    {"euler_char", plan.euler_char}});
    s.commit();
  }

  std::string f_c;
  {
    auto s = b.step("concave_hits_contact",
                    "If c1(ξ) is torsion, the mixed map of a concave filling V sends the HF^- generator of S^3 in "
                    "degree −2 to ±c+(ξ); this persists when Stein handles are absorbed into V.");
    s.input(f_v).input(f_cork).input("assumption:symplectic-structure");
    s.check("c1(ξ) is torsion on a homology sphere", "h1_order == 1", {{"h1_order", r(static_cast<long long>(h1_order))}});
    s.check("absorbed cobordism recorded", "absorbed_ok == 1", {{"absorbed_ok", r(plan.stein_absorbed)}});
    f_c = s.output("F^mix_{V,s}(Θ−(−2)) = ±c+(ξ)", {{"element", "c+(ξ)"}});
    s.commit();
  }

  std::string f_x;
  {
    auto s = b.step("lefschetz_nonvanishing",
                    "For a relatively minimal Lefschetz fibration on a closed X with fiber genus > 1 and b2+ > 1, "
                    "the mixed map of the canonical Spin^c structure takes the HF^- generator in degree −2 to the "
                    "HF^+ generator in degree 0; in particular the canonical class is basic.");
    s.input(f_v).input(f_cork).input("assumption:b2plus").input("assumption:relative-minimality").input("assumption:section");
    s.check("fiber genus > 1", "fiber_genus > 1", {{"fiber_genus", r(static_cast<long long>(closed.fiber_genus))}});
    s.check("relatively minimal", "relatively_minimal == 1", {{"relatively_minimal", r(closed.relatively_minimal)}});
    s.check("Euler characteristic of X", "chi_X == chi_W + euler_char",
            {{"chi_X", r(static_cast<long long>(closed.chi_X))},
             {"chi_W", r(static_cast<long long>(closed.chi_W))},
             {"euler_char", r(static_cast<long long>(plan.euler_char))}});
    s.check("generators exist in HF(S^3)", "hf_minus_m2 == 1 && hf_plus_0 == 1",
            {{"hf_minus_m2", r(static_cast<long long>(hf::hf_s3(hf::Version::minus, -2).rank))},
             {"hf_plus_0", r(static_cast<long long>(hf::hf_s3(hf::Version::plus, 0).rank))}});
    std::vector<int> sigmas = in.sigma ? std::vector<int>{*in.sigma} : std::vector<int>{0, 1};
    for (int sigma : sigmas) {
      const int c1sq = hf::canonical_c1_squared(closed.chi_X, sigma);
      s.check(in.sigma ? "degree bookkeeping" : "degree bookkeeping (sigma unknown, linear in sigma)",
              "c1sq == 2*chi_X + 3*sigma && chi_punct == chi_X - 2 && "
              "theta_minus + (c1sq - 3*sigma - 2*chi_punct)/4 + mixed_extra == theta_plus",
              {{"c1sq", r(static_cast<long long>(c1sq))},
               {"sigma", r(static_cast<long long>(sigma))},
               {"chi_X", r(static_cast<long long>(closed.chi_X))},
               {"chi_punct", r(static_cast<long long>(closed.chi_X - 2))},
               {"theta_minus", r(-2LL)},
               {"theta_plus", r(0LL)},
               {"mixed_extra", r(1LL)}});
    }
    f_x = s.output("F^mix_{X,s_can}(Θ−(−2)) = Θ+(0) on X = W ∪ V; s_can is a basic class",
                   {{"chi_X", closed.chi_X}, {"fiber_genus", closed.fiber_genus}});
    s.commit();
  }

  const hf::MapRecord mix_v{"F^mix_V", "S3", "∂W", 1, false};
  const hf::MapRecord plus_w{"F+_W", "∂W", "S3", h1_order == 1 && hom.h_of_W[2].is_trivial() ? 1 : 2, false};
  std::string f_a;
  {
    auto s = b.step("composition_untwisted",
                    "Mixed maps compose with the cobordism maps of the pieces, summed over Spin^c structures "
                    "restricting to both; across a homology-sphere cut with H^2(W) = 0 the sum has one term.");
    s.input(f_x).input(f_c).input(f_cork);
    const auto terms = hf::compose(mix_v, plus_w);
    s.check("single gluing", "terms == 1 && h1_order == 1 && h2_W == 0",
            {{"terms", r(static_cast<long long>(terms.size()))},
             {"h1_order", r(static_cast<long long>(h1_order))},
             {"h2_W", r(static_cast<long long>(hom.h_of_W[2].free_rank))}});
    s.check("Θ+(0) is non-zero", "hf_plus_0 == 1", {{"hf_plus_0", r(static_cast<long long>(hf::hf_s3(hf::Version::plus, 0).rank))}});
    f_a = s.output("Θ+(0) = ±F+_{W,s}(c+(ξ)); hence F+_{W,s}(c+(ξ)) ≠ 0", {{"phi", "±1"}, {"phi_abs", 1}});
    s.commit();
  }

  std::string f_nb;
  {
    auto s = b.step("adjunction_violation",
                    "A closed surface of genus g ≥ 1 and non-negative square in X forces |<c1(s), Σ>| + Σ·Σ ≤ 2g − 2 "
                    "for every basic class s.");
    s.input(f_cork).input("axiom:inflation").input("assumption:knot-type").input("assumption:seifert-genus");
    const int genus = facts.seifert_genus;
    const int self_int = spec.framing;
    s.check("g ≥ 1", "genus >= 1", {{"genus", r(static_cast<long long>(genus))}}, abort_text("adjunction rule", "g ≥ 1"));
    s.check("self-intersection ≥ 0", "self_int >= 0", {{"self_int", r(static_cast<long long>(self_int))}},
            abort_text("adjunction rule", "self-intersection ≥ 0"));
    s.check("surface avoids the 1-handle", "handle_passes == 0",
            {{"handle_passes", r(static_cast<long long>(twisted.stein.handle_passes))}},
            abort_text("adjunction rule", "surface avoids the 1-handle"));
    s.check("self-intersection is the framing", "self_int == framing",
            {{"self_int", r(static_cast<long long>(self_int))}, {"framing", r(static_cast<long long>(spec.framing))}});
    s.check("violated for every pairing", "self_int > 2*genus - 2",
            {{"self_int", r(static_cast<long long>(self_int))}, {"genus", r(static_cast<long long>(genus))}},
            abort_text("adjunction rule", "violation for every pairing"));
    f_nb = s.output("the capped Seifert surface of genus " + std::to_string(genus) + " and square " +
                        std::to_string(self_int) + " in X' = W ∪_τ V violates adjunction for every Spin^c "
                        "structure; X' has no basic class",
                    {{"genus", genus}, {"self_int", self_int}, {"basic_classes", 0}});
    s.commit();
  }

  std::string f_b;
  {
    auto s = b.step("composition_twisted",
                    "Mixed maps compose with the cobordism maps of the pieces; a manifold without basic classes "
                    "has vanishing mixed maps.");
    s.input(f_nb).input(f_c).input(f_cork);
    const auto terms = hf::compose(mix_v, plus_w);
    s.check("single gluing", "terms == 1", {{"terms", r(static_cast<long long>(terms.size()))}});
    s.check("no basic class", "basic_classes == 0", {{"basic_classes", r(0LL)}});
    f_b = s.output("0 = ±F+_{W,s}(τ*c+(ξ))", {{"phi", "0"}, {"phi_abs", 0}});
    s.commit();
  }

  std::string f_verdict;
  {
    auto s = b.step("distinct", "Elements with different images under one homomorphism are different.");
    s.input(f_a).input(f_b);
    s.check("images differ", "phi_untwisted != phi_twisted", {{"phi_untwisted", r(1LL)}, {"phi_twisted", r(0LL)}});
    f_verdict = s.output("c+(ξ) ≠ τ*c+(ξ) in HF+(−∂W)", {{"verdict", "DISTINCT"}});
    s.commit();
  }

  {
    auto s = b.step("reduced_descent",
                    "τ* is a U-equivariant involution fixing the image of HF^∞ up to sign; an element x with "
                    "|F(x)| ≠ |F(τ*x)| is therefore outside that image, and so is τ*x.");
    s.input(f_verdict).input(f_a).input(f_b).input("assumption:u-equivariance").input("assumption:image-fixed-up-to-sign");
    s.check("images differ in absolute value", "abs(phi_untwisted) != abs(phi_twisted)",
            {{"phi_untwisted", r(1LL)}, {"phi_twisted", r(0LL)}});
    s.output("c+(ξ) and τ*c+(ξ) have non-zero, distinct images in HF+_red(−∂W)");
    s.commit();
  }

  Json cert;
  cert["format"] = kFormat;
  cert["inputs"] = {{"diagram", in.diagram},
                    {"palf", in.palf},
                    {"inflation", in.inflation},
                    {"budget", in.budget},
                    {"seed", in.seed},
                    {"sigma", in.sigma ? Json(*in.sigma) : Json("unknown")}};
  cert["steps"] = b.steps();
  cert["verdict"] = {{"fact", f_verdict}, {"statement", "c+(ξ) ≠ τ*c+(ξ)"}, {"value", "DISTINCT"}};
  cert["relative_invariant"] = {{"untwisted", "±1"}, {"twisted", "0"}};
  cert["consequences"] = Json::array({
      {{"id", "non-extension"},
       {"statement", "τ does not extend over W as a diffeomorphism"},
       {"from", Json::array({f_a, f_b})},
       {"checked", true}},
      {{"id", "fake-pair"},
       {"statement", "X = W ∪ V has a basic class and X' = W ∪_τ V has none, while X and X' are homeomorphic"},
       {"from", Json::array({f_x, f_nb})},
       {"checked", true},
       {"assumptions", Json::array({"assumption:freedman"})}},
      {{"id", "contact-structures"},
       {"statement", "ξ and τ*ξ are homotopic as plane fields and contactomorphic but not isotopic"},
       {"from", Json::array({f_verdict})},
       {"checked", false}},
  });
  Json assumptions = Json::array();
  for (const auto& a : plan.assumptions) assumptions.push_back(assumption(a.id, a.statement));
  assumptions.push_back(assumption("legendrian-presentation",
                                   "the stein front presents the framed component over the 1-handle of the dotted circle"));
  assumptions.push_back(assumption("knot-type", "the inflation knot is a " + spec.knot + " as declared"));
  assumptions.push_back(assumption("max-tb", "maximal tb of the " + spec.knot + " is " + std::to_string(facts.max_tb)));
  assumptions.push_back(
      assumption("seifert-genus", "Seifert genus of the " + spec.knot + " is " + std::to_string(facts.seifert_genus)));
  assumptions.push_back(assumption("palf-presents-W-with-M", "the supplied PALF presents W ∪ M"));
  assumptions.push_back(assumption("u-equivariance", "τ* commutes with the U action"));
  assumptions.push_back(assumption("image-fixed-up-to-sign", "τ* fixes the image of HF^∞(−∂W) up to sign"));
  assumptions.push_back(assumption("freedman", "X and X' are homeomorphic"));
  cert["assumptions"] = assumptions;
  return cert;
}

RelativeInvariant relative_invariant(const Json& cert) {
  if (!cert.contains("verdict") || cert["verdict"].value("value", "") != "DISTINCT")
    throw PreconditionError("certificate has no DISTINCT verdict");
  std::string untwisted, twisted;
  for (const auto& s : cert.at("steps")) {
    const auto rule = s.value("rule", "");
    if (rule != "composition_untwisted" && rule != "composition_twisted") continue;
    for (const auto& o : s.at("outputs")) (rule == "composition_untwisted" ? untwisted : twisted) = o.at("data").at("phi");
  }
  if (untwisted.empty() || twisted.empty()) throw PreconditionError("certificate lacks the composition steps");
  RelativeInvariant out{untwisted, twisted, {}};
  out.extension_fact = {{"statement", "τ does not extend over W as a diffeomorphism"},
                        {"reason", "Φ_{W,s}(ξ) = " + untwisted + " but Φ_{W,s}(τ*ξ) = " + twisted}};
  return out;
}

Json fake_pair_report(const Json& cert) {
  const auto phi = relative_invariant(cert);
  std::string basic, not_basic;
  for (const auto& s : cert.at("steps")) {
    const auto rule = s.value("rule", "");
    if (rule == "lefschetz_nonvanishing") basic = s.at("outputs").at(0).at("statement");
    if (rule == "adjunction_violation") not_basic = s.at("outputs").at(0).at("statement");
  }
  if (basic.empty() || not_basic.empty()) throw PreconditionError("certificate lacks the closed-manifold steps");
  std::string untwisted_calc, twisted_calc;
  for (const auto& s : cert.at("steps")) {
    if (s.value("rule", "") == "composition_untwisted") untwisted_calc = s.at("outputs").at(0).at("statement");
    if (s.value("rule", "") == "composition_twisted") twisted_calc = s.at("outputs").at(0).at("statement");
  }
  return {{"statement", "X and X' are homeomorphic but not diffeomorphic"},
          {"X", {{"basic", true}, {"reason", basic}}},
          {"X'", {{"basic", false}, {"reason", not_basic}}},
          {"computations", Json::array({untwisted_calc, twisted_calc})},
          {"relative_invariant", {{"untwisted", phi.untwisted}, {"twisted", phi.twisted}}},
          {"assumptions", Json::array({"assumption:freedman"})}};
}

ValidationReport validate(const Json& cert) {
  ValidationReport rep;
  auto problem = [&](const std::string& p) { rep.problems.push_back(p); };

  if (!cert.is_object() || cert.value("format", "") != kFormat) {
    problem("not a certificate document");
    return rep;
  }
  for (const char* key : {"inputs", "steps", "verdict", "assumptions"})
    if (!cert.contains(key)) problem(std::string("missing '") + key + "'");
  if (!rep.problems.empty()) return rep;

  std::set<std::string> known;
  for (const auto& a : cert["assumptions"])
    if (a.is_object() && a.contains("id") && a["id"].is_string()) known.insert("assumption:" + a["id"].get<std::string>());
  try {
    for (const auto& s : cert["steps"]) {
      const std::string id = s.at("id").get<std::string>();
      for (const auto& i : s.at("inputs")) {
        const auto name = i.get<std::string>();
        if (name.rfind("axiom:", 0) == 0) continue;
        if (!known.count(name)) problem(id + ": input '" + name + "' is neither an earlier fact nor an assumption");
      }
      for (const auto& c : s.at("side_conditions")) {
        expr::Bindings bindings;
        for (const auto& [name, value] : c.at("bindings").items()) bindings[name] = parse_rational(value.get<std::string>());
        const bool value = expr::holds(c.at("expr").get<std::string>(), bindings);
        if (!c.at("value").get<bool>() || !value)
          problem(id + ": side condition '" + c.at("label").get<std::string>() + "' does not hold");
      }
      for (const auto& o : s.at("outputs")) known.insert(o.at("id").get<std::string>());
    }
    if (!known.count(cert["verdict"].at("fact").get<std::string>())) problem("verdict cites an unknown fact");
  } catch (const std::exception& e) {
    problem(std::string("malformed step: ") + e.what());
    return rep;
  }

  try {
    const auto& in = cert["inputs"];
    Inputs inputs;
    inputs.diagram = in.at("diagram").get<std::string>();
    inputs.palf = in.at("palf").get<std::string>();
    inputs.inflation = in.at("inflation").get<std::string>();
    inputs.budget = in.at("budget").get<int>();
    inputs.seed = in.at("seed").get<std::uint64_t>();
    if (in.at("sigma").is_number_integer()) inputs.sigma = in.at("sigma").get<int>();
    if (certify_distinct(inputs).dump() != cert.dump()) problem("document differs from the regenerated certificate");
  } catch (const std::exception& e) {
    problem(std::string("regeneration failed: ") + e.what());
  }
  rep.ok = rep.problems.empty();
  return rep;
}

std::string render_human(const Json& cert) {
  std::ostringstream out;
  for (const auto& s : cert.at("steps")) {
    out << s.at("id").get<std::string>() << "  " << s.at("rule").get<std::string>() << '\n';
    out << "    rule: " << s.at("quote").get<std::string>() << '\n';
    std::string inputs;
    for (const auto& i : s.at("inputs")) inputs += (inputs.empty() ? "" : ", ") + i.get<std::string>();
    out << "    from: " << inputs << '\n';
    for (const auto& c : s.at("side_conditions")) {
      out << "    check " << c.at("label").get<std::string>() << ": " << c.at("expr").get<std::string>() << "  [";
      bool first = true;
      for (const auto& [name, value] : c.at("bindings").items()) {
        out << (first ? "" : ", ") << name << '=' << value.get<std::string>();
        first = false;
      }
      out << "] " << (c.at("value").get<bool>() ? "ok" : "FAILED") << '\n';
    }
    for (const auto& o : s.at("outputs"))
      out << "    => " << o.at("id").get<std::string>() << ": " << o.at("statement").get<std::string>() << '\n';
  }
  out << "verdict: " << cert.at("verdict").at("value").get<std::string>() << " ("
      << cert.at("verdict").at("statement").get<std::string>() << ")\n";
  if (cert.contains("relative_invariant"))
    out << "relative invariant: untwisted " << cert["relative_invariant"]["untwisted"].get<std::string>() << ", twisted "
        << cert["relative_invariant"]["twisted"].get<std::string>() << '\n';
  out << "assumptions:\n";
  for (const auto& a : cert.at("assumptions"))
    out << "  - " << a.at("id").get<std::string>() << ": " << a.at("statement").get<std::string>() << '\n';
  return out.str();
}

}  // namespace cork::certificate
