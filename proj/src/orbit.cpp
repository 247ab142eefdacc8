#include "glie/orbit.hpp"

#include <stdexcept>

#include "glie/linalg.hpp"

namespace glie {

namespace {

std::vector<std::size_t> root_indices(const GradedAlgebra& g, bool positive, std::optional<int> grade) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.num_roots(); ++i)
    if (g.root_of(i).is_positive() == positive && (!grade || g.grade(i) == *grade)) out.push_back(i);
  return out;
}

// dim of { y in g_{-2} : [y, vec] = 0 }
std::size_t annihilator_dimension(const GradedAlgebra& g, const AlgebraElement& vec) {
  const auto cols = g.basis_of_grade(-2);
  RationalMatrix m(g.dim(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& [i, val] : g.bracket(AlgebraElement::basis(cols[c]), vec)) m(i, c) = val;
  return kernel(m).size();
}

}  // namespace

const char* cone_name(Cone c) { return c == Cone::Full ? "gp" : "g'p'"; }

Cone parse_cone(const std::string& s) {
  if (s == "gp" || s == "G/P") return Cone::Full;
  if (s == "g'p'" || s == "gpp" || s == "G'/P'") return Cone::Levi;
  throw std::invalid_argument("unknown cone '" + s + "' (expected gp or g'p')");
}

nlohmann::json OrbitPoint::provenance(const GradedAlgebra& g) const {
  nlohmann::json t = nlohmann::json::array();
  for (const auto& c : torus) t.push_back(to_string(c));
  nlohmann::json w = nlohmann::json::array();
  for (const auto& u : word) w.push_back(element_json(g, u));
  return {{"cone", cone_name(cone)}, {"torus", t}, {"word", w}};
}

OrbitPoint orbit_point_from_word(const QuarticData& qd, Cone cone, const std::vector<Rational>& torus,
                                 const std::vector<AlgebraElement>& word) {
  const GradedModule& m = qd.module();
  const GradedAlgebra& g = m.algebra();
  OrbitPoint pt;
  pt.cone = cone;
  pt.torus = torus;
  pt.word = word;
  AlgebraElement y = cone == Cone::Full ? m.v() : AlgebraElement::basis(g.index_of(-g.root_system().simple_root(m.node())));
  if (!torus.empty()) y = m.torus_act(y, torus);
  for (auto it = word.rbegin(); it != word.rend(); ++it) y = g.exp_apply(*it, y);
  pt.vector = std::move(y);
  pt.certified = cone == Cone::Full ? in_minimal_orbit_cone(g, pt.vector) : membership_quadrics(qd, pt.vector);
  return pt;
}

OrbitPoint sample_orbit_point(const QuarticData& qd, Cone cone, std::uint64_t seed) {
  const GradedAlgebra& g = qd.algebra();
  RandomRationals rng(seed, 3);
  std::vector<Rational> torus(static_cast<std::size_t>(g.root_system().rank()));
  for (auto& t : torus) t = rng.nonzero();
  const std::optional<int> grade = cone == Cone::Levi ? std::optional<int>(0) : std::nullopt;
  const auto lower = root_indices(g, false, grade), upper = root_indices(g, true, grade);
  auto letter = [&](const std::vector<std::size_t>& roots) {
    AlgebraElement u;
    if (cone == Cone::Levi) {
      for (std::size_t i : roots) u.add(i, Rational(rng.integer(-2, 2)));
    } else {
      // sparse letters keep the coefficients of the full cone manageable
      for (int k = 0; k < 8; ++k)
        u.add(roots[static_cast<std::size_t>(rng.integer(0, static_cast<long>(roots.size()) - 1))],
              Rational(rng.integer(1, 2) * (rng.coin() ? 1 : -1)));
    }
    return u;
  };
  std::vector<AlgebraElement> word{letter(lower), letter(upper), letter(lower)};
  return orbit_point_from_word(qd, cone, torus, word);
}

bool membership_quadrics(const QuarticData& qd, const AlgebraElement& x) { return qd.p_direct(x).is_zero(); }

nlohmann::json membership_certificate(const QuarticData& qd, const AlgebraElement& x) {
  const AlgebraElement p = qd.p_direct(x);
  if (p.is_zero()) return nullptr;
  const auto& [i, c] = *p.begin();
  return {{qd.algebra().basis_label(i), to_string(c)}};
}

bool in_minimal_orbit_cone(const GradedAlgebra& g, const AlgebraElement& y) {
  if (y.is_zero()) return true;
  const auto& [pivot, yp] = *y.begin();
  for (std::size_t j = 0; j < g.dim(); ++j) {
    const AlgebraElement t = g.bracket(y, g.bracket(y, AlgebraElement::basis(j)));
    if (t.is_zero()) continue;
    if (t != (t.coefficient(pivot) / yp) * y) return false;
  }
  return true;
}

std::vector<AlgebraElement> tangent_space(const QuarticData& qd, const AlgebraElement& x) {
  if (x.is_zero() || !membership_quadrics(qd, x)) throw std::invalid_argument("tangent space needs a nonzero cone point");
  std::vector<AlgebraElement> out{x};
  for (const auto& e : qd.module().semisimple_basis()) out.push_back(qd.algebra().bracket(e, x));
  return out;
}

std::size_t span_dimension(const GradedAlgebra&, const std::vector<AlgebraElement>& vectors) {
  std::map<std::size_t, std::size_t> column;
  for (const auto& v : vectors)
    for (const auto& [i, c] : v) column.try_emplace(i, column.size());
  RationalMatrix m(vectors.size(), column.size());
  for (std::size_t r = 0; r < vectors.size(); ++r)
    for (const auto& [i, c] : vectors[r]) m(r, column.at(i)) = c;
  return rank(m);
}

bool exp_tangent_fixes(const QuarticData& qd, const AlgebraElement& x, const AlgebraElement& a) {
  const GradedAlgebra& g = qd.algebra();
  const AlgebraElement xv = g.bracket(x, qd.module().v());
  return g.exp_apply(a, xv) == xv;
}

AlgebraElement d_act(const GradedAlgebra& g, const AlgebraElement& x, const Rational& t) {
  return (1 / t) * g.grade_scale(x, t);
}

CheckReport fiber_decomposition_check(const QuarticData& qd, const AlgebraElement& x, std::size_t samples,
                                      std::uint64_t seed) {
  const GradedModule& m = qd.module();
  const GradedAlgebra& g = m.algebra();
  const RootSystem& rs = g.root_system();
  if (x.is_zero() || !g.is_homogeneous(x, -1)) throw std::invalid_argument("fibre check needs nonzero x in g_{-1}");
  CheckReport rep("fiber_decomposition", m.case_id().to_string());
  const bool on_cone = membership_quadrics(qd, x);
  rep.details["on_cone"] = on_cone;

  const AlgebraElement xv = g.bracket(x, m.v());
  const AlgebraElement ex = g.exp_apply(x, m.v());
  const std::size_t zi = g.cartan_index(m.node());
  RandomRationals rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const Rational t = rng.nonzero(), c = rng.rational();
    const AlgebraElement xi = d_act(g, g.exp_apply(c * m.w(), ex), t);
    if (m.project(1, xi) != xv) rep.fail({{"stage", "pi_1 of the big-cell point"}, {"sample", s}});
    const Rational t_rec = m.project(0, xi).coefficient(m.v_index());
    const Rational kappa = m.project_2minus(xi).coefficient(zi) / m.z().coefficient(zi);
    const Rational c_rec = -kappa * t_rec;
    if (t_rec != t || c_rec != c || d_act(g, g.exp_apply(c_rec * m.w(), ex), t_rec) != xi)
      rep.fail({{"stage", "reconstruct (t, c)"}, {"sample", s}, {"t", to_string(t)}, {"c", to_string(c)}});
    if (m.project_2plus(xi) != (1 / t) * m.project_2plus(ex)) rep.fail({{"stage", "pi_2^+ scales by 1/t"}, {"sample", s}});
  }
  rep.details["big_cell_samples"] = samples;

  if (on_cone) {
    auto lower = g.basis_of_grade(-1);
    for (std::size_t i : g.basis_of_grade(-2)) lower.push_back(i);
    std::size_t checked = 0;
    for (std::size_t s = 0; s < std::min<std::size_t>(samples, 3); ++s) {
      AlgebraElement u;
      for (int k = 0; k < 4; ++k) u.add(lower[static_cast<std::size_t>(rng.integer(0, static_cast<long>(lower.size()) - 1))], rng.nonzero());
      const AlgebraElement xi = g.exp_apply(u, xv);
      if (!m.project(0, xi).is_zero() || m.project(1, xi) != xv || !in_minimal_orbit_cone(g, xi))
        rep.fail({{"stage", "cone branch containment"}, {"sample", s}});
      ++checked;
    }
    rep.details["cone_branch_samples"] = checked;
  } else if (in_minimal_orbit_cone(g, xv)) {
    rep.fail({{"stage", "[x, v] off the cone yet in (G/P)_a"}});
  }

  const Root theta = rs.highest_root(), alpha = rs.simple_root(m.node());
  const std::size_t ann_v = annihilator_dimension(g, m.v());
  const std::size_t ann_va = annihilator_dimension(g, AlgebraElement::basis(g.index_of(theta - alpha)));
  rep.details["annihilator_v"] = ann_v;
  rep.details["annihilator_v_omega_minus_alpha"] = ann_va;
  if (ann_v != 0 || ann_va != 0) rep.fail({{"stage", "free action of g_{-2}"}});
  return rep;
}

WeightSupport weight_support(const GradedAlgebra& g, const AlgebraElement& y) {
  WeightSupport ws;
  for (const auto& [i, c] : y) {
    if (g.is_cartan(i)) continue;
    ws.roots.insert(g.root_of(i));
    ws.by_grade[g.grade(i)].insert(g.root_of(i));
  }
  return ws;
}

WeightSupport weight_support(const GradedAlgebra& g, const std::set<Root>& roots) {
  AlgebraElement y;
  for (const auto& r : roots) y.add(g.index_of(r), 1);
  return weight_support(g, y);
}

StabilityCertificate stability_certificate(const RootSystem& rs, const WeightSupport& ws) {
  StabilityCertificate out;
  if (ws.roots.empty()) return out;
  const auto n = static_cast<std::size_t>(rs.rank());
  RationalMatrix a(n, ws.roots.size());
  RationalVector b(n);
  std::size_t col = 0;
  for (const auto& r : ws.roots) {
    for (std::size_t i = 0; i < n; ++i) {
      a(i, col) = r.coords[i];
      b[i] -= r.coords[i];
    }
    ++col;
  }
  out.spans = rank(a) == n;
  out.lp = nonnegative_feasibility(a, b);
  out.stable = out.spans && out.lp.feasible;
  return out;
}

bool hilbert_mumford_stable(const RootSystem& rs, const WeightSupport& ws) { return stability_certificate(rs, ws).stable; }

bool trivial_stabilizer(const RootSystem& rs, const WeightSupport& ws) {
  if (ws.roots.size() < 2) return false;
  const Root& base = *ws.roots.begin();
  IntegerMatrix rows;
  for (const auto& r : ws.roots) {
    if (r == base) continue;
    std::vector<Integer> d;
    for (std::size_t i = 0; i < r.coords.size(); ++i) d.emplace_back(r.coords[i] - base.coords[i]);
    rows.push_back(std::move(d));
  }
  return generates_full_lattice(rows, static_cast<std::size_t>(rs.rank()));
}

bool fat_conditions(const GradedAlgebra& g, const WeightSupport& ws) {
  const RootSystem& rs = g.root_system();
  auto in = [&](const Root& r) { return ws.roots.count(r) > 0; };
  std::vector<Root> levi;
  for (std::size_t i = 0; i < g.num_roots(); ++i)
    if (g.grade(i) == 0) levi.push_back(g.root_of(i));
  for (std::size_t a = 0; a < levi.size(); ++a)
    for (std::size_t b = a + 1; b < levi.size(); ++b)
      if (rs.inner(levi[a], levi[b]) == 1 && !in(levi[a]) && !in(levi[b])) return false;
  auto nonempty = [&](int n) {
    auto it = ws.by_grade.find(n);
    return it != ws.by_grade.end() && !it->second.empty();
  };
  return nonempty(1) && nonempty(-1);
}

CheckReport check_fat_implication(const GradedAlgebra& g, const std::vector<WeightSupport>& supports) {
  const RootSystem& rs = g.root_system();
  CheckReport rep("fat_implication", rs.name());
  std::size_t fat = 0, stable = 0, trivial = 0;
  for (std::size_t k = 0; k < supports.size(); ++k) {
    const auto& ws = supports[k];
    const auto cert = stability_certificate(rs, ws);
    const bool triv = trivial_stabilizer(rs, ws);
    const bool f = fat_conditions(g, ws);
    fat += f;
    stable += cert.stable;
    trivial += triv;
    if (f && !(cert.stable && triv)) rep.fail({{"support", k}, {"stable", cert.stable}, {"trivial_stabilizer", triv}});
  }
  rep.details["supports"] = supports.size();
  rep.details["fat"] = fat;
  rep.details["stable"] = stable;
  rep.details["trivial_stabilizer"] = trivial;
  return rep;
}

WeightSupport random_fat_support(const GradedAlgebra& g, RandomRationals& rng) {
  const RootSystem& rs = g.root_system();
  std::vector<Root> levi, g1, gm1, rest;
  for (std::size_t i = 0; i < g.num_roots(); ++i) {
    const int n = g.grade(i);
    (n == 0 ? levi : n == 1 ? g1 : n == -1 ? gm1 : rest).push_back(g.root_of(i));
  }
  for (std::size_t k = levi.size(); k > 1; --k)
    std::swap(levi[k - 1], levi[static_cast<std::size_t>(rng.integer(0, static_cast<long>(k) - 1))]);
  std::set<Root> support;
  std::vector<Root> dropped;
  for (const auto& r : levi) {
    const bool clash = std::any_of(dropped.begin(), dropped.end(), [&](const Root& d) { return rs.inner(r, d) == 1; });
    if (!clash && rng.coin()) {
      dropped.push_back(r);
    } else {
      support.insert(r);
    }
  }
  for (const auto* part : {&g1, &gm1, &rest})
    for (const auto& r : *part)
      if (rng.integer(0, 3) == 0) support.insert(r);
  support.insert(g1[static_cast<std::size_t>(rng.integer(0, static_cast<long>(g1.size()) - 1))]);
  support.insert(gm1[static_cast<std::size_t>(rng.integer(0, static_cast<long>(gm1.size()) - 1))]);
  return weight_support(g, support);
}

}  // namespace glie
