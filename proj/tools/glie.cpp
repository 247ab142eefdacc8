// Batch entry point: glie {algebra, verify, orbit, lattice} ...
// JSON report on stdout, one-line summary on stderr.
// Exit status: 0 all checks pass, 1 some check failed, 2 usage error.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "glie/delpezzo.hpp"
#include "glie/orbit.hpp"
#include "glie/suites.hpp"

using namespace glie;
using json = nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string case_id;
  std::uint64_t seed = 1;
  std::size_t trials = 10;
  std::size_t samples = 10;
  bool json = false;
  std::string out;
  std::string convention = "standard";
  std::string surface = "dp1";
  std::string cone = "g'p'";
  int min_intersection = 1;
  int max_rank = 8;
};

struct Outcome {
  std::string case_id;
  std::vector<CheckReport> checks;
  json data;
  std::optional<std::string> raw;  // written verbatim instead of the JSON report
};

const std::map<std::string, std::string>& anchors() {
  static const std::map<std::string, std::string> a{
      {"structure", "dimensions of g and of the graded pieces"},
      {"classification", "gradings of length five and adjoint-fundamental pairs"},
      {"module_structure", "V_1 = g_{-1} v as a g'-module, [v, w] is the grading element"},
      {"module_grading", "V_n = g_{2-n} and the projections pi_n"},
      {"exp_expansion", "exp(x) v = v + x + p(x) + q(x) + r(x)"},
      {"derivative_identities", "derivatives of r and q through p, q and the symplectic form"},
      {"quartic_survey", "nonzero quartic coefficients, q^mu not divisible by x^mu"},
      {"orbit_points", "(G'/P')_a = p^{-1}(0), isotropic tangent spaces fixed by exp"},
      {"orbit_sample", "sampled points lie on the cone"},
      {"campbell_hausdorff", "exp(b) exp(c) = exp(b + c + [b, c]/2) on g_{<=-1}"},
      {"limit_bl", "limit of g_t exp(phi + s(phi)) v along phi = x + a t"},
      {"fat_implication", "fat supports are stable with trivial stabiliser"},
      {"dp1_lines", "l_beta = -K + beta and (l_beta . l_gamma) = 1 - (beta, gamma)"},
      {"dp2_lines", "(l_mu . l_nu) = 1/2 - (mu, nu), chi0 and conic classes"},
      {"blowdown_dictionary", "weight coordinates of V against curves on X and X'"},
      {"type_map", "character lattice of T', its exact sequences and the type map"},
      {"tangent_line_degree", "strict transform of a tangent line to the branch curve"},
      {"weyl_transitivity", "W(E8) acts on the graph of lines"},
  };
  return a;
}

SignConvention parse_convention(const std::string& s) {
  if (s == "standard") return SignConvention::Standard;
  if (s == "alternate") return SignConvention::Alternate;
  throw UsageError("unknown sign convention '" + s + "' (standard|alternate)");
}

CaseId parse_case(const std::string& s) {
  if (s.empty()) throw UsageError("--case is required");
  try {
    return CaseId::parse(s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

RootSystem parse_type(const std::string& s) {
  if (s.empty()) throw UsageError("--case is required");
  const std::string head = s.substr(0, s.find(':'));
  try {
    if (head.size() < 2) throw std::invalid_argument("type must look like E8");
    return RootSystem::build(parse_type_letter(head[0]), std::stoi(head.substr(1)));
  } catch (const std::logic_error& e) {
    throw UsageError(std::string("bad type '") + head + "': " + e.what());
  }
}

QuarticData load_case(const Options& o) {
  const CaseId c = parse_case(o.case_id);
  RootSystem rs = [&] {
    try {
      return RootSystem::build(c.type, c.rank);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  if (!is_adjoint_fundamental(rs, c.node))
    throw UsageError(c.to_string() + " is not an adjoint-fundamental pair; see `algebra classify`");
  return QuarticData(GradedModule(GradedAlgebra::build(rs, parse_convention(o.convention)).graded_by(c.node)));
}

json check_entry(const CheckReport& r) {
  json detail = r.to_json();
  detail.erase("check");
  detail.erase("pass");
  const auto it = anchors().find(r.check);
  return {{"name", r.check}, {"anchor", it == anchors().end() ? "" : it->second}, {"pass", r.pass}, {"detail", detail}};
}

// ----------------------------------------------------------------- commands

Outcome algebra_build(const Options& o) {
  const RootSystem rs = parse_type(o.case_id);
  GradedAlgebra g = GradedAlgebra::build(rs, parse_convention(o.convention));
  Outcome out;
  out.case_id = rs.name();
  if (o.case_id.find(':') != std::string::npos) {
    const CaseId c = parse_case(o.case_id);
    g = g.graded_by(c.node);
    out.case_id = c.to_string();
  }
  out.checks.push_back(structure_report(g));
  out.data = {{"dim", g.dim()}, {"roots", rs.roots().size()}, {"convention", o.convention}};
  return out;
}

Outcome algebra_classify(const Options& o) {
  Outcome out;
  out.case_id = "all";
  out.checks.push_back(classification_report(o.max_rank));
  return out;
}

Outcome algebra_roots(const Options& o) {
  const RootSystem rs = parse_type(o.case_id);
  Outcome out;
  out.case_id = rs.name();
  out.data = rs.to_json();
  return out;
}

Outcome verify_identities(const Options& o) {
  const QuarticData qd = load_case(o);
  return {qd.module().case_id().to_string(), identity_suite(qd, o.trials, o.seed), {}, {}};
}

Outcome verify_quartic(const Options& o) {
  const QuarticData qd = load_case(o);
  return {qd.module().case_id().to_string(), {quartic_coefficient_survey(qd)}, {}, {}};
}

Outcome verify_ch(const Options& o) {
  const QuarticData qd = load_case(o);
  return {qd.module().case_id().to_string(), {ch_suite(qd.algebra(), o.samples, o.seed)}, {}, {}};
}

Outcome verify_limit(const Options& o) {
  const QuarticData qd = load_case(o);
  return {qd.module().case_id().to_string(), {limit_suite(qd, o.samples, o.seed)}, {}, {}};
}

Outcome verify_fat(const Options& o) {
  const QuarticData qd = load_case(o);
  return {qd.module().case_id().to_string(), {fat_suite(qd.algebra(), o.samples, o.seed)}, {}, {}};
}

Outcome orbit_sample(const Options& o) {
  const QuarticData qd = load_case(o);
  const Cone cone = [&] {
    try {
      return parse_cone(o.cone);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  Outcome out;
  out.case_id = qd.module().case_id().to_string();
  CheckReport rep{"orbit_sample", out.case_id};
  json points = json::array();
  for (std::size_t s = 0; s < o.samples; ++s) {
    const auto pt = sample_orbit_point(qd, cone, o.seed + s);
    const bool on = cone == Cone::Levi ? membership_quadrics(qd, pt.vector) : in_minimal_orbit_cone(qd.algebra(), pt.vector);
    if (!pt.certified || !on) rep.fail({{"sample", s}});
    json p = pt.provenance(qd.algebra());
    p["vector"] = element_json(qd.algebra(), pt.vector);
    points.push_back(p);
  }
  rep.details["samples"] = o.samples;
  rep.details["cone"] = cone_name(cone);
  out.checks.push_back(rep);
  out.data = {{"points", points}};
  return out;
}

Outcome orbit_check(const Options& o) {
  const QuarticData qd = load_case(o);
  return {qd.module().case_id().to_string(), {orbit_suite(qd, o.samples, o.seed)}, {}, {}};
}

void require_surface(const Options& o) {
  if (o.surface != "dp1" && o.surface != "dp2") throw UsageError("--surface must be dp1 or dp2");
}

Outcome lattice_lines(const Options& o) {
  require_surface(o);
  const Dp1Lattice lat;
  const CharacterLattice tl;
  Outcome out;
  out.case_id = o.surface;
  json lines = json::array();
  if (o.surface == "dp1") {
    for (const auto& l : dp1_lines(lat)) lines.push_back({{"root", root_label(l.root)}, {"class", lat.to_json(l.cls)}});
    out.checks.push_back(check_dp1_lines(lat));
  } else {
    for (const auto& l : dp2_lines(lat, tl)) lines.push_back({{"root", root_label(l.root)}, {"class", tl.to_json(l.cls)}});
    out.checks.push_back(check_dp2_lines(lat, tl));
  }
  out.data = {{"count", lines.size()}, {"lines", lines}};
  return out;
}

Outcome lattice_dictionary(const Options&) {
  const Dp1Lattice lat;
  const CharacterLattice tl;
  Outcome out;
  out.case_id = "dp1/dp2";
  out.checks.push_back(check_blowdown_dictionary(lat, tl));
  out.data = dictionary_json(lat, tl, blowdown_dictionary(lat, tl));
  return out;
}

Outcome lattice_graph(const Options& o) {
  require_surface(o);
  const Dp1Lattice lat;
  const CharacterLattice tl;
  std::vector<std::string> labels;
  std::vector<std::vector<int>> inter;
  if (o.surface == "dp1") {
    const auto lines = dp1_lines(lat);
    for (const auto& a : lines) {
      labels.push_back(root_label(a.root));
      inter.emplace_back();
      for (const auto& b : lines) inter.back().push_back(lat.pairing(a.cls, b.cls));
    }
  } else {
    const auto lines = dp2_lines(lat, tl);
    for (const auto& a : lines) {
      labels.push_back(root_label(a.root));
      inter.emplace_back();
      for (const auto& b : lines) inter.back().push_back(static_cast<int>(tl.pairing(a.cls, b.cls).get_num().get_si()));
    }
  }
  Outcome out;
  out.case_id = o.surface;
  out.raw = intersection_graph_dot(o.surface, labels, inter, o.min_intersection);
  return out;
}

Outcome lattice_check(const Options& o) {
  const Dp1Lattice lat;
  const CharacterLattice tl;
  return {"dp1/dp2", lattice_suite(lat, tl, o.seed), {}, {}};
}

int run(const std::string& command, const std::function<Outcome(const Options&)>& fn, const Options& o) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out = fn(o);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::sort(out.checks.begin(), out.checks.end(),
            [](const CheckReport& a, const CheckReport& b) { return a.check < b.check; });
  bool pass = true;
  std::size_t passed = 0;
  json checks = json::array();
  for (const auto& c : out.checks) {
    pass = pass && c.pass;
    passed += c.pass ? 1 : 0;
    checks.push_back(check_entry(c));
  }
  std::string text;
  if (out.raw) {
    text = *out.raw;
  } else {
    json report{{"command", command}, {"case", out.case_id}, {"seed", o.seed}, {"checks", checks}};
    if (!out.data.is_null()) report["data"] = out.data;
    text = report.dump(2) + "\n";
  }
  if (!o.out.empty()) {
    std::ofstream f(o.out);
    if (!f) throw UsageError("cannot write " + o.out);
    f << text;
  }
  if (o.out.empty() || o.json) std::cout << text;

  std::cerr << command << " " << out.case_id << ": " << passed << "/" << out.checks.size() << " checks passed";
  for (const auto& c : out.checks)
    if (!c.pass) std::cerr << ", FAIL " << c.check;
  std::cerr << " (wall " << std::fixed << std::setprecision(2) << secs << " s)\n";
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for graded Lie algebras, orbit cones and del Pezzo lattices"};
  app.require_subcommand(1);
  Options o;
  bool json_flag = false;

  std::string selected;
  std::function<Outcome(const Options&)> action;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                  std::function<Outcome(const Options&)> fn) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->callback([&, fn, name, parent] {
      selected = parent->get_name() + " " + name;
      action = fn;
    });
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_flag("--json", json_flag, "write the JSON report to stdout (also with --out)");
    sub->add_option("--out", o.out, "write the report to this file");
    return sub;
  };
  auto with_case = [&](CLI::App* sub) {
    sub->add_option("--case", o.case_id, "TYPE:node, e.g. E8:a8")->required();
    sub->add_option("--convention", o.convention, "structure constant signs: standard|alternate");
    return sub;
  };

  CLI::App* algebra = app.add_subcommand("algebra", "build and classify graded algebras");
  algebra->require_subcommand(1);
  with_case(leaf(algebra, "build", "build an algebra (TYPE or TYPE:node)", algebra_build));
  leaf(algebra, "classify", "list gradings of length five and adjoint-fundamental pairs", algebra_classify)
      ->add_option("--max-rank", o.max_rank, "largest rank for the classical series");
  with_case(leaf(algebra, "roots", "list the roots of a type", algebra_roots));

  CLI::App* verify = app.add_subcommand("verify", "identity checks for an adjoint-fundamental pair");
  verify->require_subcommand(1);
  with_case(leaf(verify, "identities", "module structure, expansion and derivative identities", verify_identities))
      ->add_option("--trials", o.trials, "random points per identity");
  with_case(leaf(verify, "quartic", "survey of the quartic and cubic coefficients", verify_quartic));
  with_case(leaf(verify, "ch", "Campbell-Hausdorff degeneration on random pairs", verify_ch))
      ->add_option("--samples", o.samples, "number of pairs");
  with_case(leaf(verify, "limit-bl", "limit along x + a t as a truncated series", verify_limit))
      ->add_option("--samples", o.samples, "number of (x, a) samples");
  with_case(leaf(verify, "fat", "fat supports versus stability and stabilisers", verify_fat))
      ->add_option("--samples", o.samples, "number of supports");

  CLI::App* orbit = app.add_subcommand("orbit", "points of the highest weight orbit cones");
  orbit->require_subcommand(1);
  CLI::App* sample = with_case(leaf(orbit, "sample", "sample cone points with their words", orbit_sample));
  sample->add_option("--samples", o.samples, "number of points");
  sample->add_option("--cone", o.cone, "gp (full cone) or g'p' (Levi cone in g_{-1})");
  with_case(leaf(orbit, "check", "p = 0, tangent spaces and annihilators on sampled points", orbit_check))
      ->add_option("--samples", o.samples, "number of points");

  CLI::App* lattice = app.add_subcommand("lattice", "Picard lattices of the degree 1 and 2 del Pezzo surfaces");
  lattice->require_subcommand(1);
  leaf(lattice, "lines", "exceptional classes", lattice_lines)->add_option("--surface", o.surface, "dp1|dp2");
  leaf(lattice, "dictionary", "weight coordinates against curve classes", lattice_dictionary);
  CLI::App* graph = leaf(lattice, "graph", "GraphViz intersection graph of the lines", lattice_graph);
  graph->add_option("--surface", o.surface, "dp1|dp2");
  graph->add_option("--min", o.min_intersection, "smallest intersection number drawn as an edge");
  leaf(lattice, "check", "all lattice checks", lattice_check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  o.json = json_flag;
  try {
    return run(selected, action, o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }
}
