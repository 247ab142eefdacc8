#include "glie/adjointmod.hpp"

#include <map>
#include <stdexcept>

#include "glie/linalg.hpp"

namespace glie {

GradedModule::GradedModule(GradedAlgebra g) : g_(std::move(g)) {
  if (!g_.marked_node()) throw std::invalid_argument("graded module needs a graded algebra");
  node_ = *g_.marked_node();
  const RootSystem& rs = g_.root_system();
  if (!is_adjoint_fundamental(rs, node_))
    throw std::invalid_argument(rs.name() + " node " + std::to_string(node_ + 1) +
                                ": highest root is not the fundamental weight of the node");
  const Root theta = rs.highest_root();
  v_index_ = g_.index_of(theta);
  w_index_ = g_.index_of(-theta);
  z_ = g_.bracket(v(), w());
  if (z_ != g_.grading_element()) throw std::logic_error("[v, w] is not the grading element");
  lambda_ = g_.basis_of_grade(-1);
  for (int i = 0; i < rs.rank(); ++i)
    if (i != node_) levi_nodes_.push_back(i);
}

CaseId GradedModule::case_id() const {
  const RootSystem& rs = g_.root_system();
  return CaseId{rs.type(), rs.rank(), node_};
}

AlgebraElement GradedModule::project(int n, const AlgebraElement& x) const { return g_.component(x, 2 - n); }

AlgebraElement GradedModule::project_2minus(const AlgebraElement& x) const {
  const std::size_t k = g_.cartan_index(node_);
  // g' contains the coroots of the other nodes, so only the marked coroot
  // coefficient sees the centre
  return (x.coefficient(k) / z_.coefficient(k)) * z_;
}

AlgebraElement GradedModule::project_2plus(const AlgebraElement& x) const {
  return project(2, x) - project_2minus(x);
}

std::vector<AlgebraElement> GradedModule::semisimple_basis() const {
  std::vector<AlgebraElement> out;
  for (std::size_t i : g_.basis_of_grade(0))
    if (!g_.is_cartan(i)) out.push_back(AlgebraElement::basis(i));
  for (int i : levi_nodes_) out.push_back(AlgebraElement::basis(g_.cartan_index(i)));
  return out;
}

std::vector<int> GradedModule::levi_weight(std::size_t i) const {
  const RootSystem& rs = g_.root_system();
  std::vector<int> out;
  for (int k : levi_nodes_) out.push_back(g_.is_cartan(i) ? 0 : rs.coroot_pairing(g_.root_of(i), rs.simple_root(k)));
  return out;
}

AlgebraElement GradedModule::torus_act(const AlgebraElement& x, const std::vector<Rational>& t) const {
  AlgebraElement out;
  for (const auto& [i, c] : x) {
    Rational f = c;
    if (!g_.is_cartan(i)) {
      const auto& b = g_.root_of(i).coords;
      for (std::size_t k = 0; k < b.size(); ++k) {
        const int e = b[k];
        for (int s = 0; s < std::abs(e); ++s) f = e > 0 ? Rational(f * t[k]) : Rational(f / t[k]);
      }
    }
    out.add(i, f);
  }
  return out;
}

AlgebraElement random_combination(const std::vector<std::size_t>& basis, RandomRationals& rng) {
  AlgebraElement x;
  for (std::size_t i : basis) x.add(i, rng.rational());
  return x;
}

CheckReport check_module_structure(const GradedModule& m) {
  const GradedAlgebra& g = m.algebra();
  const RootSystem& rs = g.root_system();
  CheckReport rep{"module_structure", m.case_id().to_string()};
  for (int n = 0; n <= 4; ++n) rep.details["dim_V" + std::to_string(n)] = g.basis_of_grade(2 - n).size();

  // x -> [x, v] is injective into V_1, inverted by y -> [y, w], and equivariant
  const auto g_prime = m.semisimple_basis();
  std::vector<RationalVector> images;
  for (std::size_t i : m.lambda()) {
    const AlgebraElement x = AlgebraElement::basis(i);
    const AlgebraElement y = g.bracket(x, m.v());
    if (!g.is_homogeneous(y, 1) || y.is_zero()) rep.fail({{"stage", "image in V_1"}, {"x", g.basis_label(i)}});
    if (g.bracket(y, m.w()) != x) rep.fail({{"stage", "[[x,v],w] = x"}, {"x", g.basis_label(i)}});
    RationalVector col(g.dim());
    for (const auto& [k, c] : y) col[k] = c;
    images.push_back(std::move(col));
    for (const auto& a : g_prime) {
      if (g.bracket(g.bracket(a, x), m.v()) != g.bracket(a, y))
        rep.fail({{"stage", "equivariance"}, {"x", g.basis_label(i)}, {"a", element_json(g, a)}});
    }
  }
  if (rank(images) != m.lambda().size()) rep.fail({{"stage", "injectivity"}});

  // X_{-alpha} is a highest weight vector of g_{-1}, with image of weight omega - alpha
  const Root alpha = rs.simple_root(m.node());
  const AlgebraElement lw = AlgebraElement::basis(g.index_of(-alpha));
  const AlgebraElement lw_image = g.bracket(lw, m.v());
  for (int i : m.semisimple_nodes()) {
    const AlgebraElement raise = AlgebraElement::basis(g.index_of(rs.simple_root(i)));
    if (!g.bracket(raise, lw).is_zero() || !g.bracket(raise, lw_image).is_zero())
      rep.fail({{"stage", "highest weight"}, {"raising", i + 1}});
  }
  {
    const Weight got = rs.to_weight(rs.highest_root() - alpha);
    Weight expected = rs.fundamental_weight(m.node());
    const Weight a = rs.to_weight(alpha);
    for (std::size_t k = 0; k < expected.coords.size(); ++k) expected.coords[k] -= a.coords[k];
    if (got != expected) rep.fail({{"stage", "weight omega - alpha"}});
  }

  // centre of g_0: kernel of ad of the generators of g_0
  const auto g0 = g.basis_of_grade(0);
  std::vector<AlgebraElement> gens;
  for (int i : m.semisimple_nodes()) {
    gens.push_back(AlgebraElement::basis(g.index_of(rs.simple_root(i))));
    gens.push_back(AlgebraElement::basis(g.index_of(-rs.simple_root(i))));
  }
  for (int i = 0; i < rs.rank(); ++i) gens.push_back(AlgebraElement::basis(g.cartan_index(i)));
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> row_of;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> entries;
  std::vector<RationalVector> derived;
  std::map<std::size_t, std::size_t> pos;
  for (std::size_t s = 0; s < g0.size(); ++s) pos[g0[s]] = s;
  for (std::size_t col = 0; col < g0.size(); ++col) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const AlgebraElement b = g.bracket(gens[k], AlgebraElement::basis(g0[col]));
      RationalVector d(g0.size());
      for (const auto& [i, c] : b) {
        auto [it, fresh] = row_of.try_emplace({k, i}, entries.size());
        if (fresh) entries.emplace_back();
        entries[it->second].emplace_back(col, c);
        d[pos.at(i)] = c;
      }
      if (!b.is_zero()) derived.push_back(std::move(d));
    }
  }
  RationalMatrix adm(entries.size(), g0.size());
  for (std::size_t r = 0; r < entries.size(); ++r)
    for (const auto& [c, val] : entries[r]) adm(r, c) = val;
  const auto centre = kernel(adm);
  rep.details["dim_centre"] = centre.size();
  if (centre.size() != 1) {
    rep.fail({{"stage", "centre dimension"}, {"dim", centre.size()}});
  } else {
    AlgebraElement c;
    for (std::size_t s = 0; s < g0.size(); ++s) c.add(g0[s], centre[0][s]);
    const std::size_t k = g.cartan_index(m.node());
    if (c.coefficient(k) == 0 || (m.z().coefficient(k) / c.coefficient(k)) * c != m.z())
      rep.fail({{"stage", "centre spanned by z"}});
  }
  const std::size_t dim_gp = rank(derived);
  rep.details["dim_g_prime"] = dim_gp;
  if (dim_gp != g0.size() - 1 || g_prime.size() != dim_gp) rep.fail({{"stage", "dim g' = dim g_0 - 1"}});
  for (std::size_t i = 0; i < g.dim(); ++i)
    if (g.bracket(m.z(), AlgebraElement::basis(i)) != Rational(g.grade(i)) * AlgebraElement::basis(i))
      rep.fail({{"stage", "grading element"}, {"basis", g.basis_label(i)}});

  // V_2^- and g_{-2} are both lines
  if (g.basis_of_grade(-2).size() != 1 || m.project_2minus(m.z()) != m.z() || !m.project_2plus(m.z()).is_zero())
    rep.fail({{"stage", "V_2 split"}});
  return rep;
}

CheckReport check_module_grading(const GradedModule& m, std::size_t samples, std::uint64_t seed) {
  const GradedAlgebra& g = m.algebra();
  CheckReport rep{"module_grading", m.case_id().to_string()};
  auto check_pair = [&](std::size_t i, std::size_t j) {
    const AlgebraElement y = g.bracket(AlgebraElement::basis(i), AlgebraElement::basis(j));
    const int target = m.degree(j) - g.grade(i);
    for (const auto& [k, c] : y)
      if (m.degree(k) != target) {
        rep.fail({{"g_i", g.basis_label(i)}, {"V_j", g.basis_label(j)}});
        return;
      }
  };
  if (samples == 0) {
    for (std::size_t i = 0; i < g.dim(); ++i)
      for (std::size_t j = 0; j < g.dim(); ++j) check_pair(i, j);
    rep.details["pairs"] = g.dim() * g.dim();
  } else {
    RandomRationals rng(seed);
    const long top = static_cast<long>(g.dim()) - 1;
    for (std::size_t s = 0; s < samples; ++s)
      check_pair(static_cast<std::size_t>(rng.integer(0, top)), static_cast<std::size_t>(rng.integer(0, top)));
    rep.details["pairs"] = samples;
  }
  return rep;
}

CheckReport check_lower_borel_projection(const GradedModule& m, std::size_t basis_index, std::size_t samples,
                                         std::uint64_t seed) {
  const GradedAlgebra& g = m.algebra();
  const RootSystem& rs = g.root_system();
  if (basis_index >= g.dim() || m.degree(basis_index) < 2)
    throw std::invalid_argument("lower Borel check needs a basis vector of module degree >= 2");
  CheckReport rep{"lower_borel_projection", m.case_id().to_string()};
  rep.details["vector"] = g.basis_label(basis_index);
  rep.details["samples"] = samples;
  RandomRationals rng(seed);
  const auto npos = static_cast<long>(rs.num_positive());
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<Rational> t(static_cast<std::size_t>(rs.rank()));
    for (auto& ti : t) ti = rng.nonzero();
    AlgebraElement y = m.torus_act(AlgebraElement::basis(basis_index), t);
    for (int factor = 0; factor < 2; ++factor) {
      AlgebraElement n;
      for (int k = 0; k < 6; ++k) n.add(g.index_of(-rs.roots()[static_cast<std::size_t>(rng.integer(0, npos - 1))]), rng.nonzero());
      y = g.exp_apply(n, y);
    }
    if (!m.project(1, y).is_zero() || !m.project(0, y).is_zero()) rep.fail({{"sample", s}});
  }
  return rep;
}

}  // namespace glie
