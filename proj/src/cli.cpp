#include "cork/cli.hpp"

#include "cork/certificate.hpp"
#include "cork/error.hpp"
#include "cork/fillings.hpp"
#include "cork/front.hpp"
#include "cork/kirby.hpp"
#include "cork/mcg.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace cork::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw PreconditionError("cannot write '" + path + "'");
}

struct Options {
  std::string format = "human";
  int budget = 8;
  std::uint64_t seed = 0;
  std::optional<int> genus;
  std::optional<int> sigma;
  std::string component;
  std::string output;
  std::string validate;
  std::vector<std::string> paths;
  int chain_genus = 0;
};

bool doc(const Options& o) { return o.format == "doc"; }

std::string sign_text(int s) { return s > 0 ? "+" : "-"; }

int cmd_tb(const Options& o, std::ostream& out) {
  const auto d = front::parse_front(read_file(o.paths.at(0)));
  std::string c = o.component;
  if (c.empty()) {
    if (d.components().size() != 1) throw PreconditionError("front has several components; pass --component");
    c = d.components()[0];
  }
  if (!d.has_component(c)) throw PreconditionError("no component '" + c + "'");
  Json crossings = Json::array(), cusps = Json::array();
  for (const auto& x : d.crossings())
    if (x.over == c && x.under == c) crossings.push_back({{"at", front::to_string(x.at)}, {"sign", x.sign}});
  for (const auto& k : d.cusps())
    if (k.component == c) cusps.push_back({{"at", front::to_string(k.at)}, {"side", k.left ? "left" : "right"}});
  if (doc(o)) {
    out << Json{{"component", c},        {"tb", d.tb(c)},         {"writhe", d.writhe(c)},
                {"cusps", d.cusp_count(c)}, {"crossings", crossings}, {"cusp_points", cusps}}
               .dump(2)
        << '\n';
    return ok;
  }
  out << d.tb(c) << '\n';
  out << "  writhe " << d.writhe(c) << ", cusps " << d.cusp_count(c) << ", tb = writhe - cusps/2\n";
  for (const auto& x : crossings)
    out << "  crossing " << x["at"].get<std::string>() << ' ' << sign_text(x["sign"].get<int>()) << '\n';
  for (const auto& k : cusps) out << "  cusp " << k["at"].get<std::string>() << ' ' << k["side"].get<std::string>() << '\n';
  return ok;
}

int cmd_homology(const Options& o, std::ostream& out) {
  const auto d = kirby::parse_diagram(read_file(o.paths.at(0)));
  const auto r = kirby::homology(d);
  if (doc(o)) {
    out << kirby::to_json(r).dump(2) << '\n';
    return ok;
  }
  out << "linking matrix:\n" << format_matrix(r.linking_matrix) << '\n';
  for (std::size_t i = 0; i < r.h_of_W.size(); ++i) out << "H" << i << "(W) = " << r.h_of_W[i].to_string() << '\n';
  for (std::size_t i = 0; i < r.h_of_boundary.size(); ++i)
    out << "H" << i << "(boundary) = " << r.h_of_boundary[i].to_string() << '\n';
  out << "contractible: " << (r.is_contractible ? "yes" : "no") << '\n';
  out << "boundary is a homology sphere: " << (r.is_homology_sphere ? "yes" : "no") << '\n';
  return ok;
}

int cmd_admissible(const Options& o, std::ostream& out) {
  const auto d = kirby::parse_diagram(read_file(o.paths.at(0)));
  const auto r = kirby::check_admissible(d, o.budget, o.seed);
  const int code = r.inconclusive() ? inconclusive : r.admissible() ? ok : negative;
  if (doc(o)) {
    out << kirby::to_json(r).dump(2) << '\n';
    return code;
  }
  for (const auto& c : r.cond1) {
    out << "unknotted " << c.component << ": " << (c.verified ? "verified" : "inconclusive");
    if (c.verified) {
      out << " in " << c.moves.size() << " moves";
      for (const auto& m : c.moves) out << ' ' << m;
    } else {
      out << " (budget " << r.budget << ", " << c.states_explored << " states)";
    }
    out << '\n';
  }
  out << "involution: " << (r.cond2 ? "verified" : "absent") << " - " << r.cond2_detail << '\n';
  out << "linking number " << r.linking << ": " << (r.cond3 ? "holds" : "fails") << '\n';
  out << "stein tb: " << (r.cond4prime ? "certified" : "not certified") << " - " << r.cond4_detail << '\n';
  out << "verdict: " << (r.inconclusive() ? "inconclusive" : r.admissible() ? "admissible" : "not admissible") << '\n';
  return code;
}

int cmd_twist(const Options& o, std::ostream& out) {
  const auto d = kirby::parse_diagram(read_file(o.paths.at(0)));
  const auto t = kirby::cork_twist(d);
  if (doc(o)) {
    Json dec = Json::object();
    for (const auto& c : t.front.components()) {
      const auto& x = t.decorations.at(c);
      dec[c] = x.dotted ? Json("dot") : Json(x.framing);
    }
    out << Json{{"decorations", dec}, {"diagram", kirby::write_diagram(t)}}.dump(2) << '\n';
    return ok;
  }
  out << kirby::write_diagram(t);
  return ok;
}

int cmd_fill(const Options& o, std::ostream& out) {
  auto palf = fillings::parse_palf(read_file(o.paths.at(0)));
  if (o.genus) {
    if (*o.genus < palf.genus()) throw PreconditionError("--genus is below the page genus " + std::to_string(palf.genus()));
    while (palf.genus() < *o.genus) palf = fillings::stabilize_palf(palf);
  }
  std::optional<kirby::CobordismRecord> m;
  if (o.paths.size() == 3) {
    const auto d = kirby::parse_diagram(read_file(o.paths.at(1)));
    const auto spec = kirby::parse_inflation(read_file(o.paths.at(2)));
    m = kirby::inflate(d, spec.untwisted, spec.component, spec.framing, spec.knot);
  } else if (o.paths.size() != 1) {
    throw PreconditionError("fill takes a PALF, optionally followed by a diagram and an inflation spec");
  }
  const auto plan = fillings::extend_with_cobordism(m, palf);
  if (doc(o)) {
    out << fillings::to_json(plan).dump(2) << '\n';
    return ok;
  }
  out << "page genus " << palf.genus() << ", " << palf.word.size() << " vanishing cycles\n";
  out << "stabilizations: " << plan.stabilizations << '\n';
  out << "fiber genus: " << plan.fiber_genus << '\n';
  out << "binding cap: 1 two-handle, page framing 0\n";
  out << "trivializing handles: " << plan.trivializing_handles.size() << " (" << plan.relator_blocks
      << " relator blocks, framing -1)\n";
  out << "closing piece: F x D2, euler char " << plan.closing_euler_char << '\n';
  if (plan.stein_absorbed) out << "absorbed Stein handles: " << plan.absorbed_two_handles << '\n';
  out << "euler char of the filling: " << plan.euler_char << '\n';
  out << "composite acts trivially on H1: " << (plan.composite_identity ? "yes" : "no") << '\n';
  out << "assumptions:\n";
  for (const auto& a : plan.assumptions) out << "  - " << a.id << ": " << a.statement << '\n';
  return plan.composite_identity ? ok : negative;
}

int cmd_verify_chain(const Options& o, std::ostream& out) {
  if (o.chain_genus < 1) throw PreconditionError("genus must be at least 1");
  const int g = o.chain_genus;
  const bool holds = mcg::verify_chain_relation(g);
  const auto defect = identity_defect(mcg::h1_action(mcg::chain_word(g, mcg::chain_exponent(g))));
  if (doc(o)) {
    out << Json{{"genus", g}, {"exponent", mcg::chain_exponent(g)}, {"identity", holds}, {"defect", defect}}.dump(2)
        << '\n';
  } else {
    out << "(t_beta1 ... t_beta" << 2 * g << ")^" << mcg::chain_exponent(g) << " acts on H1 as "
        << (holds ? "the identity" : "a non-identity matrix") << '\n';
  }
  return holds ? ok : negative;
}

int cmd_certify(const Options& o, std::ostream& out, std::ostream& err) {
  if (!o.validate.empty()) {
    Json cert;
    try {
      cert = Json::parse(read_file(o.validate));
    } catch (const Json::parse_error& e) {
      throw ParseError(std::string("certificate is not JSON: ") + e.what());
    }
    const auto rep = certificate::validate(cert);
    if (doc(o)) {
      out << Json{{"valid", rep.ok}, {"problems", rep.problems}}.dump(2) << '\n';
    } else {
      out << (rep.ok ? "certificate valid" : "certificate INVALID") << '\n';
      for (const auto& p : rep.problems) out << "  " << p << '\n';
    }
    return rep.ok ? ok : negative;
  }
  if (o.paths.size() != 3) throw PreconditionError("certify takes a diagram, a PALF and an inflation spec");
  certificate::Inputs in;
  in.diagram = read_file(o.paths[0]);
  in.palf = read_file(o.paths[1]);
  in.inflation = read_file(o.paths[2]);
  in.budget = o.budget;
  in.seed = o.seed;
  in.sigma = o.sigma;
  Json cert;
  try {
    cert = certificate::certify_distinct(in);
  } catch (const certificate::Aborted& e) {
    err << "deduction aborted at " << e.step() << ": " << e.what() << '\n';
    out << "aborted: " << e.what() << '\n';
    return negative;
  }
  const auto text = cert.dump(2) + '\n';
  if (!o.output.empty()) write_file(o.output, text);
  if (doc(o)) {
    out << text;
    return ok;
  }
  out << certificate::render_human(cert);
  const auto phi = certificate::relative_invariant(cert);
  out << "non-extension: " << phi.extension_fact["statement"].get<std::string>() << '\n';
  out << "fake pair: " << certificate::fake_pair_report(cert)["statement"].get<std::string>() << '\n';
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cork toolkit: Legendrian fronts, Kirby diagrams, filling plans and Floer certificates", "corktool"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "human or doc")->check(CLI::IsMember({"human", "doc"}));
  };

  auto* tb = app.add_subcommand("tb", "Thurston-Bennequin number of a front");
  tb->add_option("front", o.paths, "front document")->required()->expected(1);
  tb->add_option("--component", o.component, "component id");
  common(tb);

  auto* homology = app.add_subcommand("homology", "homology of a handlebody and its boundary");
  homology->add_option("diagram", o.paths, "diagram document")->required()->expected(1);
  common(homology);

  auto* admissible = app.add_subcommand("admissible", "check the cork conditions");
  admissible->add_option("diagram", o.paths, "diagram document")->required()->expected(1);
  admissible->add_option("--budget", o.budget, "Reidemeister move budget")->check(CLI::NonNegativeNumber);
  admissible->add_option("--seed", o.seed, "search ordering seed");
  common(admissible);

  auto* twist = app.add_subcommand("twist", "exchange the dot and the 0-framing");
  twist->add_option("diagram", o.paths, "diagram document")->required()->expected(1);
  common(twist);

  auto* fill = app.add_subcommand("fill", "plan a concave filling from a PALF");
  fill->add_option("palf", o.paths, "PALF document [diagram inflation]")->required()->expected(1, 3);
  fill->add_option("--genus", o.genus, "stabilize up to this page genus first");
  common(fill);

  auto* mcg_cmd = app.add_subcommand("mcg", "mapping class group checks");
  mcg_cmd->require_subcommand(1);
  auto* chain = mcg_cmd->add_subcommand("verify-chain", "chain relation on H1");
  chain->add_option("g", o.chain_genus, "surface genus")->required();
  common(chain);

  auto* certify = app.add_subcommand("certify", "certify that the cork twist moves the contact invariant");
  certify->add_option("inputs", o.paths, "diagram palf inflation")->expected(0, 3);
  certify->add_option("-o,--output", o.output, "write the certificate here");
  certify->add_option("--validate", o.validate, "re-check a stored certificate");
  certify->add_option("--sigma", o.sigma, "signature of the closed manifold");
  certify->add_option("--budget", o.budget, "Reidemeister move budget")->check(CLI::NonNegativeNumber);
  certify->add_option("--seed", o.seed, "search ordering seed");
  common(certify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : input_error;
  }

  try {
    if (*tb) return cmd_tb(o, out);
    if (*homology) return cmd_homology(o, out);
    if (*admissible) return cmd_admissible(o, out);
    if (*twist) return cmd_twist(o, out);
    if (*fill) return cmd_fill(o, out);
    if (*chain) return cmd_verify_chain(o, out);
    if (*certify) return cmd_certify(o, out, err);
  } catch (const certificate::Aborted& e) {
    err << "aborted: " << e.what() << '\n';
    return negative;
  } catch (const RuleNotApplicable& e) {
    err << e.what() << '\n';
    return negative;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  }
  return input_error;
}

}  // namespace cork::cli
