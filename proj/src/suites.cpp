#include "glie/suites.hpp"

#include <set>

#include "glie/orbit.hpp"
#include "glie/series.hpp"

namespace glie {

namespace {

void absorb(CheckReport& into, const CheckReport& from, const std::string& stage) {
  for (const auto& f : from.failures) into.fail({{"stage", stage}, {"detail", f}});
}

}  // namespace

CheckReport structure_report(const GradedAlgebra& g) {
  const RootSystem& rs = g.root_system();
  CheckReport rep{"structure", g.marked_node() ? CaseId{rs.type(), rs.rank(), *g.marked_node()}.to_string() : rs.name()};
  rep.details["roots"] = rs.roots().size();
  rep.details["dim"] = g.dim();
  if (g.dim() != rs.roots().size() + static_cast<std::size_t>(rs.rank())) rep.fail({{"stage", "dim = roots + rank"}});
  if (!g.marked_node()) return rep;
  nlohmann::json dims = nlohmann::json::array();
  for (const auto& [n, d] : g.grade_dimensions()) dims.push_back({{"grade", n}, {"dim", d}});
  rep.details["grades"] = dims;
  if (is_adjoint_fundamental(rs, *g.marked_node())) {
    const GradedModule m(g);
    const CheckReport inner = check_module_structure(m);
    rep.details["dim_centre"] = inner.details.value("dim_centre", 0);
    rep.details["dim_g_prime"] = inner.details.value("dim_g_prime", 0);
    absorb(rep, inner, "module structure");
  }
  return rep;
}

CheckReport classification_report(int max_rank) {
  CheckReport rep{"classification", "rank<=" + std::to_string(max_rank)};
  nlohmann::json five = nlohmann::json::array(), adj = nlohmann::json::array();
  for (const CaseId& c : classify_grading_length_5(max_rank)) five.push_back(c.to_string());
  for (const CaseId& c : classify_adjoint_fundamental(max_rank)) {
    adj.push_back(c.to_string());
    const RootSystem rs = RootSystem::build(c.type, c.rank);
    const int coeff = rs.highest_root().coords[c.node];
    if (coeff != 2) rep.fail({{"stage", "coefficient 2 in the highest root"}, {"case", c.to_string()}, {"got", coeff}});
  }
  rep.details["length_5"] = five;
  rep.details["adjoint_fundamental"] = adj;
  return rep;
}

std::vector<CheckReport> identity_suite(const QuarticData& qd, std::size_t trials, std::uint64_t seed) {
  std::vector<CheckReport> out;
  out.push_back(check_module_structure(qd.module()));
  out.push_back(check_module_grading(qd.module(), trials, seed));
  out.push_back(verify_expansion(qd, trials, seed + 1));
  out.push_back(verify_derivative_identities(qd, trials, seed + 2));
  return out;
}

CheckReport orbit_suite(const QuarticData& qd, std::size_t samples, std::uint64_t seed) {
  const GradedAlgebra& g = qd.algebra();
  CheckReport rep{"orbit_points", qd.module().case_id().to_string()};
  RandomRationals rng(seed);
  std::set<std::size_t> dims;
  std::size_t isotropic = 0, fixed = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    const auto pt = sample_orbit_point(qd, Cone::Levi, seed + s);
    const AlgebraElement& x = pt.vector;
    if (!pt.certified) rep.fail({{"stage", "certified"}, {"sample", s}});
    if (!membership_quadrics(qd, x)) {
      rep.fail({{"stage", "p(x) = 0"}, {"sample", s}, {"certificate", membership_certificate(qd, x)}});
      continue;
    }
    const auto tan = tangent_space(qd, x);
    dims.insert(span_dimension(g, tan));
    AlgebraElement a;
    for (const auto& t : tan) {
      if (qd.symplectic(x, t) != 0) rep.fail({{"stage", "<x, a> = 0"}, {"sample", s}});
      else ++isotropic;
      a += rng.rational() * t;
    }
    if (exp_tangent_fixes(qd, x, a)) ++fixed;
    else rep.fail({{"stage", "exp(a) [x, v] = [x, v]"}, {"sample", s}});
    if (s == 0) {
      const CheckReport fib = fiber_decomposition_check(qd, x, 3, seed);
      rep.details["annihilator_v"] = fib.details.value("annihilator_v", -1);
      rep.details["annihilator_v_omega_minus_alpha"] = fib.details.value("annihilator_v_omega_minus_alpha", -1);
      absorb(rep, fib, "fibres and annihilators");
    }
  }
  if (dims.size() > 1) rep.fail({{"stage", "tangent dimension constant"}, {"dims", dims}});
  rep.details["samples"] = samples;
  rep.details["seed"] = seed;
  rep.details["tangent_dims"] = dims;
  rep.details["isotropic_tangents"] = isotropic;
  rep.details["exp_fixed"] = fixed;
  return rep;
}

CheckReport ch_suite(const GradedAlgebra& g, std::size_t pairs, std::uint64_t seed) {
  const RootSystem& rs = g.root_system();
  CheckReport rep{"campbell_hausdorff", CaseId{rs.type(), rs.rank(), g.marked_node().value_or(0)}.to_string()};
  std::vector<std::size_t> lower = g.basis_of_grade(-1);
  for (std::size_t i : g.basis_of_grade(-2)) lower.push_back(i);
  RandomRationals rng(seed);
  for (std::size_t k = 0; k < pairs; ++k) {
    const auto b = random_combination(lower, rng);
    const auto c = random_combination(lower, rng);
    absorb(rep, ch_check(g, b, c), "pair " + std::to_string(k));
  }
  rep.details["pairs"] = pairs;
  rep.details["operator_size"] = g.dim();
  rep.details["seed"] = seed;
  return rep;
}

CheckReport limit_suite(const QuarticData& qd, std::size_t samples, std::uint64_t seed) {
  const GradedAlgebra& g = qd.algebra();
  CheckReport rep{"limit_bl", qd.module().case_id().to_string()};
  RandomRationals rng(seed);
  std::size_t reproduced = 0, obstructed = 0;
  for (std::size_t k = 0; k < samples; ++k) {
    const auto x = sample_orbit_point(qd, Cone::Levi, seed + k).vector;
    AlgebraElement a;
    do a = qd.element(qd.random_point(rng));
    while (qd.symplectic(a, x) == 0);
    const auto s = witness_form(qd, x, a);
    const auto res = limit_bl(qd, x, a, s);
    if (res.no_negative_powers && res.equals_exp_a_xv && res.matches_polarization) ++reproduced;
    else rep.fail({{"stage", "witness"}, {"sample", k}, {"result", res.to_json(g)}});

    // violate 4 s(x, a) = <a, x> only, then also s(x) = 0
    QuadraticMap doubled = s;
    for (auto& row : doubled.matrix)
      for (auto& c : row) c *= 2;
    QuadraticMap noisy = s;
    const std::size_t i = static_cast<std::size_t>(rng.integer(0, static_cast<long>(qd.size()) - 1));
    const std::size_t j = static_cast<std::size_t>(rng.integer(0, static_cast<long>(qd.size()) - 1));
    const Rational eps = rng.nonzero();
    noisy.matrix[i][j] += eps;
    if (i != j) noisy.matrix[j][i] += eps;
    for (const QuadraticMap* bad : {&doubled, &noisy}) {
      const auto xc = qd.coordinates(x), ac = qd.coordinates(a);
      const bool violates = (*bad)(xc, xc) != 0 || 4 * (*bad)(xc, ac) != qd.symplectic(a, x);
      if (!violates) continue;
      if (limit_bl(qd, x, a, *bad).no_negative_powers) rep.fail({{"stage", "obstruction"}, {"sample", k}});
      else ++obstructed;
    }
  }
  rep.details["samples"] = samples;
  rep.details["seed"] = seed;
  rep.details["reproduced"] = reproduced;
  rep.details["obstructed"] = obstructed;
  return rep;
}

CheckReport fat_suite(const GradedAlgebra& g, std::size_t supports, std::uint64_t seed) {
  RandomRationals rng(seed);
  std::vector<WeightSupport> all;
  for (std::size_t k = 0; k < supports / 2; ++k) all.push_back(random_fat_support(g, rng));
  while (all.size() < supports) {
    std::set<Root> s;
    for (const auto& r : g.root_system().roots())
      if (rng.integer(0, 5) == 0) s.insert(r);
    all.push_back(weight_support(g, s));
  }
  CheckReport rep = check_fat_implication(g, all);
  rep.details["seed"] = seed;
  return rep;
}

std::vector<CheckReport> lattice_suite(const Dp1Lattice& lat, const CharacterLattice& tl, std::uint64_t seed) {
  std::vector<CheckReport> out;
  out.push_back(check_dp1_lines(lat));
  out.push_back(check_dp2_lines(lat, tl));
  out.push_back(check_blowdown_dictionary(lat, tl));
  out.push_back(type_map_check(lat, tl));
  out.push_back(tangent_line_degree_check(lat, tl));
  out.push_back(weyl_transitivity_check(lat, 10, seed));
  return out;
}

}  // namespace glie
