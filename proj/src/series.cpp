#include "glie/series.hpp"

#include "glie/linalg.hpp"

namespace glie {

namespace {

bool in_negative_part(const GradedAlgebra& g, const AlgebraElement& x) {
  return std::all_of(x.begin(), x.end(), [&](const auto& kv) { return g.grade(kv.first) <= -1; });
}

}  // namespace

LieSeries bracket(const GradedAlgebra& g, const LieSeries& a, const LieSeries& b) {
  return multiply(a, b, [&](const AlgebraElement& x, const AlgebraElement& y) { return g.bracket(x, y); });
}

LieSeries exp_apply(const GradedAlgebra& g, const LieSeries& s, const LieSeries& y) {
  LieSeries term = y, total = y;
  for (std::size_t k = 1; k <= g.dim() + 1; ++k) {
    term = bracket(g, s, term).scaled(Rational(1, static_cast<long>(k)));
    if (term.is_zero()) return total;
    total += term;
  }
  throw std::invalid_argument("exp_apply: series is not ad-nilpotent");
}

LieSeries conjugate_by_d(const GradedAlgebra& g, const LieSeries& s) {
  // the lowest grade is -2, so unknown coefficients move down by at most 2
  LieSeries out(s.order() == INT_MAX ? INT_MAX : s.order() - 2);
  for (const auto& [k, c] : s.terms())
    for (const auto& [i, v] : c) out.add(k + g.grade(i), AlgebraElement::basis(i, v));
  return out;
}

CheckReport ch_check(const GradedAlgebra& g, const AlgebraElement& b, const AlgebraElement& c) {
  if (!in_negative_part(g, b) || !in_negative_part(g, c)) throw std::invalid_argument("ch_check needs b, c in g_{<=-1}");
  if (!g.marked_node()) throw std::invalid_argument("ch_check needs a graded algebra");
  const RootSystem& rs = g.root_system();
  CheckReport rep("campbell_hausdorff", CaseId{rs.type(), rs.rank(), *g.marked_node()}.to_string());
  std::vector<std::size_t> lower;
  for (std::size_t i = 0; i < g.dim(); ++i)
    if (g.grade(i) <= -1) lower.push_back(i);
  for (std::size_t i : g.basis_of_grade(-2))
    for (std::size_t j : lower)
      if (!g.bracket_basis(i, j).empty()) {
        rep.fail({{"stage", "[g_-2, g_<=-1] = 0"}, {"a", g.basis_label(i)}, {"b", g.basis_label(j)}});
        return rep;
      }
  const AlgebraElement bch = b + c + Rational(1, 2) * g.bracket(b, c);
  for (std::size_t j = 0; j < g.dim(); ++j) {
    const AlgebraElement e = AlgebraElement::basis(j);
    if (g.exp_apply(b, g.exp_apply(c, e)) != g.exp_apply(bch, e)) rep.fail({{"stage", "operator identity"}, {"column", g.basis_label(j)}});
  }
  rep.details["columns"] = g.dim();
  return rep;
}

Rational QuadraticMap::operator()(const std::vector<Rational>& u, const std::vector<Rational>& v) const {
  Rational s;
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < matrix.size(); ++j)
      if (v[j] != 0 && matrix[i][j] != 0) s += u[i] * matrix[i][j] * v[j];
  }
  return s;
}

QuadraticMap witness_form(const QuarticData& qd, const AlgebraElement& x, const AlgebraElement& a) {
  const std::size_t n = qd.size();
  QuadraticMap s(n);
  const Rational k = qd.symplectic(a, x) / 4;
  if (k == 0) return s;
  const auto xc = qd.coordinates(x), ac = qd.coordinates(a);
  const RationalMatrix m = RationalMatrix::from_rows({xc, ac}, n);
  const auto l = solve(m, {Rational(1), Rational(0)});
  const auto r = solve(m, {Rational(0), Rational(1)});
  if (!l || !r) throw std::logic_error("x and a are dependent although <a, x> != 0");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s.matrix[i][j] = k * ((*l)[i] * (*r)[j] + (*r)[i] * (*l)[j]);
  return s;
}

nlohmann::json LimitResult::to_json(const GradedAlgebra& g) const {
  nlohmann::json neg = nlohmann::json::object();
  for (const auto& [k, c] : series.terms())
    if (k < 0) neg[std::to_string(k)] = element_json(g, c);
  return {{"negative_powers", neg},
          {"limit", element_json(g, limit)},
          {"no_negative_powers", no_negative_powers},
          {"equals_exp_a_xv", equals_exp_a_xv},
          {"matches_polarization", matches_polarization}};
}

LimitResult limit_bl(const QuarticData& qd, const AlgebraElement& x, const AlgebraElement& a, const QuadraticMap& s,
                     const AlgebraElement& b, int order) {
  const GradedModule& m = qd.module();
  const GradedAlgebra& g = m.algebra();
  const std::vector<std::vector<Rational>> pieces{qd.coordinates(x), qd.coordinates(a), qd.coordinates(b)};
  const std::vector<AlgebraElement> elems{x, a, b};

  LieSeries phi(order);
  for (int k = 0; k < 3; ++k) phi.add(k, elems[static_cast<std::size_t>(k)]);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) phi.add(i + j, s(pieces[static_cast<std::size_t>(i)], pieces[static_cast<std::size_t>(j)]) * m.w());

  // g_t exp(Phi) v = exp(Ad_{g_t} Phi) (t v)
  LimitResult out;
  out.series = exp_apply(g, conjugate_by_d(g, phi), LieSeries::monomial(m.v(), 1));
  if (out.series.order() <= 0) throw std::invalid_argument("limit_bl: truncation order too small");
  for (const auto& [k, c] : out.series.terms())
    if (k < 0) out.no_negative_powers = false;
  out.limit = out.series.coefficient(0);
  const AlgebraElement xv = g.bracket(x, m.v());
  out.equals_exp_a_xv = out.limit == g.exp_apply(a, xv);
  out.matches_polarization = m.project(0, out.limit).is_zero() && m.project(1, out.limit) == xv &&
                             m.project_2plus(out.limit) == Rational(2) * polarized_form(m, {x, a});
  return out;
}

}  // namespace glie
