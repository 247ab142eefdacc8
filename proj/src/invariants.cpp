#include "glie/invariants.hpp"

#include <numeric>
#include <stdexcept>

#include "glie/linalg.hpp"

namespace glie {

namespace {

Rational factorial(int d) {
  Rational f = 1;
  for (int k = 2; k <= d; ++k) f *= k;
  return f;
}

Rational monomial_value(const Monomial& mono, const std::vector<Rational>& x) {
  Rational v = 1;
  for (int i : mono) {
    v *= x[static_cast<std::size_t>(i)];
    if (v == 0) break;
  }
  return v;
}

// product of x over the slots of mono other than skip1, skip2
Rational partial_product(const Monomial& mono, const std::vector<Rational>& x, std::size_t skip1,
                         std::size_t skip2 = static_cast<std::size_t>(-1)) {
  Rational v = 1;
  for (std::size_t s = 0; s < mono.size(); ++s)
    if (s != skip1 && s != skip2) v *= x[static_cast<std::size_t>(mono[s])];
  return v;
}

nlohmann::json point_json(const std::vector<Rational>& x) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& c : x) j.push_back(to_string(c));
  return j;
}

}  // namespace

Rational evaluate(const PolyTable<Rational>& poly, const std::vector<Rational>& x) {
  Rational s;
  for (const auto& [mono, c] : poly) s += c * monomial_value(mono, x);
  return s;
}

AlgebraElement evaluate(const PolyTable<AlgebraElement>& poly, const std::vector<Rational>& x) {
  AlgebraElement s;
  for (const auto& [mono, c] : poly) {
    const Rational m = monomial_value(mono, x);
    if (m != 0) s += m * c;
  }
  return s;
}

QuarticData::QuarticData(GradedModule m) : m_(std::move(m)) {
  const GradedAlgebra& g = m_.algebra();
  const RootSystem& rs = g.root_system();
  const auto& lam = m_.lambda();
  const int n = static_cast<int>(lam.size());
  const Root theta = rs.highest_root();
  for (int k = 0; k < n; ++k) position_[lam[static_cast<std::size_t>(k)]] = k;
  auto position_of_root = [&](const Root& r) -> std::optional<int> {
    auto idx = rs.index_of(r);
    if (!idx) return std::nullopt;
    auto it = position_.find(*idx);
    if (it == position_.end()) return std::nullopt;
    return it->second;
  };

  for (int k = 0; k < n; ++k) {
    const Root& b = g.root_of(lam[static_cast<std::size_t>(k)]);
    const auto pk = position_of_root(-theta - b);
    if (!pk) throw std::logic_error("g_{-1} is not closed under mu -> -mu");
    partner_.push_back(*pk);
    weights_.push_back(m_.levi_weight(lam[static_cast<std::size_t>(k)]));
  }
  for (int k = 0; k < n; ++k)
    c_.push_back(symplectic(AlgebraElement::basis(lam[static_cast<std::size_t>(k)]),
                            AlgebraElement::basis(lam[static_cast<std::size_t>(partner_[static_cast<std::size_t>(k)])])));

  // coefficient of a monomial: (1/d!) sum over its distinct orderings
  auto coefficient = [&](Monomial mono) {
    AlgebraElement total;
    do {
      AlgebraElement y = m_.v();
      for (auto it = mono.rbegin(); it != mono.rend() && !y.is_zero(); ++it)
        y = g.bracket(AlgebraElement::basis(lam[static_cast<std::size_t>(*it)]), y);
      total += y;
    } while (std::next_permutation(mono.begin(), mono.end()));
    return (1 / factorial(static_cast<int>(mono.size()))) * total;
  };
  auto root_at = [&](int k) -> const Root& { return g.root_of(lam[static_cast<std::size_t>(k)]); };

  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const Root s = theta + root_at(i) + root_at(j);
      if (!s.is_zero() && !rs.is_root(s)) continue;
      AlgebraElement c = coefficient({i, j});
      if (!c.is_zero()) p_.emplace(Monomial{i, j}, std::move(c));
    }
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const Root s2 = theta + root_at(i) + root_at(j);
      for (int k = j; k < n; ++k) {
        const Root s3 = s2 + root_at(k);
        if (position_of_root(s3)) {
          AlgebraElement c = coefficient({i, j, k});
          if (!c.is_zero()) q_.emplace(Monomial{i, j, k}, std::move(c));
        }
        const auto l = position_of_root(-theta - s3);
        if (l && *l >= k) {
          const Rational c = coefficient({i, j, k, *l}).coefficient(m_.w_index());
          if (c != 0) r_.emplace(Monomial{i, j, k, *l}, c);
        }
      }
    }
}

AlgebraElement QuarticData::element(const std::vector<Rational>& x) const {
  AlgebraElement e;
  for (std::size_t k = 0; k < x.size(); ++k) e.add(m_.lambda()[k], x[k]);
  return e;
}

std::vector<Rational> QuarticData::coordinates(const AlgebraElement& x) const {
  std::vector<Rational> out(size());
  for (const auto& [i, c] : x) {
    auto it = position_.find(i);
    if (it == position_.end()) throw std::invalid_argument("element is not in g_{-1}");
    out[static_cast<std::size_t>(it->second)] = c;
  }
  return out;
}

std::vector<Rational> QuarticData::random_point(RandomRationals& rng) const {
  std::vector<Rational> x(size());
  for (auto& c : x) c = rng.rational();
  return x;
}

Rational QuarticData::symplectic(const AlgebraElement& a, const AlgebraElement& b) const {
  return algebra().bracket(a, b).coefficient(m_.w_index());
}

AlgebraElement QuarticData::p_direct(const AlgebraElement& x) const {
  const GradedAlgebra& g = algebra();
  return Rational(1, 2) * g.bracket(x, g.bracket(x, m_.v()));
}

AlgebraElement QuarticData::q_direct(const AlgebraElement& x) const {
  const GradedAlgebra& g = algebra();
  return Rational(1, 6) * g.bracket(x, g.bracket(x, g.bracket(x, m_.v())));
}

Rational QuarticData::r_direct(const AlgebraElement& x) const {
  const GradedAlgebra& g = algebra();
  const AlgebraElement y = g.bracket(x, g.bracket(x, g.bracket(x, g.bracket(x, m_.v()))));
  return y.coefficient(m_.w_index()) / 24;
}

PolyTable<Rational> QuarticData::q_component(int mu) const {
  const std::size_t idx = basis_index(mu);
  PolyTable<Rational> out;
  for (const auto& [mono, c] : q_) {
    const Rational v = c.coefficient(idx);
    if (v != 0) out.emplace(mono, v);
  }
  return out;
}

std::vector<Rational> QuarticData::r_gradient(const std::vector<Rational>& x) const {
  std::vector<Rational> grad(size());
  for (const auto& [mono, c] : r_)
    for (std::size_t a = 0; a < mono.size(); ++a)
      grad[static_cast<std::size_t>(mono[a])] += c * partial_product(mono, x, a);
  return grad;
}

std::vector<std::vector<Rational>> QuarticData::r_hessian(const std::vector<Rational>& x) const {
  std::vector<std::vector<Rational>> h(size(), std::vector<Rational>(size()));
  for (const auto& [mono, c] : r_)
    for (std::size_t a = 0; a < mono.size(); ++a)
      for (std::size_t b = 0; b < mono.size(); ++b)
        if (a != b)
          h[static_cast<std::size_t>(mono[a])][static_cast<std::size_t>(mono[b])] += c * partial_product(mono, x, a, b);
  return h;
}

std::vector<AlgebraElement> QuarticData::q_gradient(const std::vector<Rational>& x) const {
  std::vector<AlgebraElement> grad(size());
  for (const auto& [mono, c] : q_)
    for (std::size_t a = 0; a < mono.size(); ++a) {
      const Rational f = partial_product(mono, x, a);
      if (f != 0) grad[static_cast<std::size_t>(mono[a])] += f * c;
    }
  return grad;
}

AlgebraElement polarized_form(const GradedModule& m, const std::vector<AlgebraElement>& args) {
  const GradedAlgebra& g = m.algebra();
  std::vector<std::size_t> perm(args.size());
  std::iota(perm.begin(), perm.end(), 0);
  AlgebraElement total;
  do {
    AlgebraElement y = m.v();
    for (auto it = perm.rbegin(); it != perm.rend() && !y.is_zero(); ++it) y = g.bracket(args[*it], y);
    total += y;
  } while (std::next_permutation(perm.begin(), perm.end()));
  const Rational f = factorial(static_cast<int>(args.size()));
  return (1 / (f * f)) * total;
}

Rational polarized_r(const QuarticData& qd, const std::vector<AlgebraElement>& args) {
  if (args.size() != 4) throw std::invalid_argument("r is a quartic form");
  return polarized_form(qd.module(), args).coefficient(qd.module().w_index());
}

CheckReport verify_expansion(const QuarticData& qd, std::size_t trials, std::uint64_t seed) {
  const GradedModule& m = qd.module();
  const GradedAlgebra& g = m.algebra();
  CheckReport rep{"exp_expansion", m.case_id().to_string()};
  rep.details["trials"] = trials;
  RandomRationals rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const auto x = qd.random_point(rng);
    const AlgebraElement X = qd.element(x);
    const AlgebraElement p = evaluate(qd.p_table(), x);
    const AlgebraElement q = evaluate(qd.q_table(), x);
    const Rational r = evaluate(qd.r_table(), x);
    auto fail = [&](const char* what) { rep.fail({{"identity", what}, {"trial", t}, {"x", point_json(x)}}); };

    const AlgebraElement e = g.exp_apply(X, m.v());
    if (e != m.v() + g.bracket(X, m.v()) + p + q + r * m.w()) fail("exp(x)v = v + [x,v] + p + q + r w");
    if (m.project(2, e) != p || m.project(3, e) != q || m.project(4, e) != r * m.w()) fail("graded components");
    if (p != qd.p_direct(X) || q != qd.q_direct(X) || r != qd.r_direct(X)) fail("tables agree with ad powers");
    if (!m.project_2minus(p).is_zero() || g.bracket(X, g.bracket(X, m.v())) != Rational(2) * p) fail("ad_x^2 v = 2p in g'");
    if (polarized_form(m, {X, X}) != p || polarized_form(m, {X, X, X}) != q || polarized_r(qd, {X, X, X, X}) != r)
      fail("polarization restricts to the form");
  }
  return rep;
}

CheckReport verify_derivative_identities(const QuarticData& qd, std::size_t trials, std::uint64_t seed) {
  const GradedModule& m = qd.module();
  const GradedAlgebra& g = m.algebra();
  const int n = static_cast<int>(qd.size());
  CheckReport rep{"derivative_identities", m.case_id().to_string()};
  rep.details["trials"] = trials;
  std::map<std::string, std::size_t> checked;
  RandomRationals rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const auto x = qd.random_point(rng);
    const AlgebraElement X = qd.element(x);
    const AlgebraElement p = qd.p_direct(X);
    const AlgebraElement q = qd.q_direct(X);
    auto fail = [&](const char* what, nlohmann::json where) {
      rep.fail({{"identity", what}, {"trial", t}, {"at", std::move(where)}, {"x", point_json(x)}});
    };
    auto basis = [&](int mu) { return AlgebraElement::basis(qd.basis_index(mu)); };

    const auto grad = qd.r_gradient(x);
    for (int mu = 0; mu < n; ++mu) {
      const Rational q_minus = q.coefficient(qd.basis_index(qd.partner(mu)));
      if (grad[static_cast<std::size_t>(mu)] != qd.c(mu) * q_minus || grad[static_cast<std::size_t>(mu)] != qd.symplectic(basis(mu), q))
        fail("dr/dx^mu = c_mu q^-mu = <X_mu, q>", mu);
      ++checked["r_gradient"];
    }

    const auto qgrad = qd.q_gradient(x);
    std::vector<AlgebraElement> xb_p(static_cast<std::size_t>(n));
    for (int b = 0; b < n; ++b) {
      xb_p[static_cast<std::size_t>(b)] = g.bracket(basis(b), p);
      const AlgebraElement rhs = xb_p[static_cast<std::size_t>(b)] + (qd.symplectic(basis(b), X) / 2) * X;
      if (qgrad[static_cast<std::size_t>(b)] != rhs) fail("dq/dx^b = [X_b, p] + <X_b, x> x / 2", b);
      ++checked["q_gradient"];
    }

    const auto hess = qd.r_hessian(x);
    std::vector<Rational> pair_x(static_cast<std::size_t>(n));
    for (int mu = 0; mu < n; ++mu) pair_x[static_cast<std::size_t>(mu)] = qd.symplectic(basis(mu), X);
    for (int mu = 0; mu < n; ++mu)
      for (int b = 0; b < n; ++b) {
        const AlgebraElement rhs = g.bracket(basis(mu), xb_p[static_cast<std::size_t>(b)]) +
                                   (pair_x[static_cast<std::size_t>(mu)] * pair_x[static_cast<std::size_t>(b)] / 2) * m.w();
        if (hess[static_cast<std::size_t>(mu)][static_cast<std::size_t>(b)] * m.w() != rhs)
          fail("d^2 r w = [X_mu, [X_b, p]] + <X_mu, x><X_b, x> w / 2", nlohmann::json::array({mu, b}));
        ++checked["r_hessian"];
      }

    const AlgebraElement a = qd.element(qd.random_point(rng));
    const Rational ax = qd.symplectic(a, X);
    if (polarized_form(m, {X, X, a}) != Rational(1, 3) * g.bracket(a, p) + (ax / 6) * X)
      fail("q(x,x,a) = [a, p]/3 + <a,x> x/6", nullptr);
    ++checked["q_polarized"];
    if (polarized_r(qd, {X, X, X, a}) != qd.symplectic(a, q) / 4) fail("r(x,x,x,a) = <a, q>/4", nullptr);
    ++checked["r_polarized"];
  }
  rep.details["checked"] = checked;
  return rep;
}

std::size_t count_zero_sum_quadruples(const QuarticData& qd) {
  const int n = static_cast<int>(qd.size());
  std::map<std::vector<int>, int> where;
  for (int k = 0; k < n; ++k) where[qd.weight(k)] = k;
  std::size_t count = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = j; k < n; ++k) {
        std::vector<int> need(qd.weight(i).size());
        for (std::size_t s = 0; s < need.size(); ++s) need[s] = -(qd.weight(i)[s] + qd.weight(j)[s] + qd.weight(k)[s]);
        auto it = where.find(need);
        if (it != where.end() && it->second >= k) ++count;
      }
  return count;
}

CheckReport quartic_coefficient_survey(const QuarticData& qd) {
  const GradedModule& m = qd.module();
  const int n = static_cast<int>(qd.size());
  CheckReport rep{"quartic_survey", m.case_id().to_string()};
  std::map<std::vector<int>, int> where;
  for (int k = 0; k < n; ++k) {
    if (!where.emplace(qd.weight(k), k).second) rep.fail({{"stage", "weight multiplicity one"}, {"mu", k}});
  }
  auto weight_sum = [&](const Monomial& mono) {
    std::vector<int> s(qd.weight(0).size());
    for (int i : mono)
      for (std::size_t t = 0; t < s.size(); ++t) s[t] += qd.weight(i)[t];
    return s;
  };

  std::size_t quadruples = 0, vanishing = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = j; k < n; ++k) {
        auto need = weight_sum({i, j, k});
        for (int& c : need) c = -c;
        auto it = where.find(need);
        if (it == where.end() || it->second < k) continue;
        ++quadruples;
        auto r = qd.r_table().find({i, j, k, it->second});
        if (r == qd.r_table().end() || r->second == 0) {
          ++vanishing;
          rep.fail({{"stage", "nonzero r coefficient"}, {"monomial", {i, j, k, it->second}}});
        }
      }
  const std::vector<int> zero(qd.weight(0).size(), 0);
  for (const auto& [mono, c] : qd.r_table())
    if (weight_sum(mono) != zero) rep.fail({{"stage", "r monomial weight"}, {"monomial", mono}});
  for (const auto& [mono, c] : qd.p_table())
    for (const auto& [i, v] : c)
      if (m.levi_weight(i) != weight_sum(mono)) rep.fail({{"stage", "p homogeneity"}, {"monomial", mono}});
  for (const auto& [mono, c] : qd.q_table())
    for (const auto& [i, v] : c)
      if (m.levi_weight(i) != weight_sum(mono)) rep.fail({{"stage", "q homogeneity"}, {"monomial", mono}});

  for (int mu = 0; mu < n; ++mu) {
    const auto comp = qd.q_component(mu);
    const bool free_term = std::any_of(comp.begin(), comp.end(), [&](const auto& kv) {
      return std::find(kv.first.begin(), kv.first.end(), mu) == kv.first.end();
    });
    if (!free_term) rep.fail({{"stage", "q^mu not divisible by x^mu"}, {"mu", mu}});
    if (qd.c(mu) == 0 || qd.c(qd.partner(mu)) != -qd.c(mu)) rep.fail({{"stage", "c_{-mu} = -c_mu != 0"}, {"mu", mu}});
  }
  rep.details["weights"] = n;
  rep.details["zero_sum_quadruples"] = quadruples;
  rep.details["r_monomials"] = qd.r_table().size();
  rep.details["vanishing"] = vanishing;
  return rep;
}

EigenDecomposition subalgebra_decomposition(const QuarticData& qd, const AlgebraElement& h) {
  const GradedAlgebra& g = qd.algebra();
  for (const auto& [i, c] : h)
    if (!g.is_cartan(i)) throw std::invalid_argument("h must lie in the Cartan subalgebra");
  EigenDecomposition out;
  for (std::size_t mu = 0; mu < qd.size(); ++mu) {
    const std::size_t idx = qd.basis_index(static_cast<int>(mu));
    const Rational ev = g.bracket(h, AlgebraElement::basis(idx)).coefficient(idx);
    if (ev.get_den() != 1) out.integral = false;
    ++out.dims[ev];
  }
  return out;
}

AlgebraElement levi_coweight(const QuarticData& qd, std::optional<int> deleted) {
  const GradedModule& m = qd.module();
  const GradedAlgebra& g = m.algebra();
  const auto& cm = g.root_system().cartan_matrix();
  const auto& levi = m.semisimple_nodes();
  if (!deleted) {
    for (int j : levi)
      if (cm[static_cast<std::size_t>(m.node())][static_cast<std::size_t>(j)] != 0) {
        deleted = j;
        break;
      }
  }
  if (!deleted || std::find(levi.begin(), levi.end(), *deleted) == levi.end())
    throw std::invalid_argument("deleted node must be a node of g'");
  // <alpha_j, h> = sum_i c_i C[j][i] = delta_{j, deleted} over the nodes of g'
  const std::size_t k = levi.size();
  RationalMatrix a(k, k);
  RationalVector rhs(k);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) a(r, c) = cm[static_cast<std::size_t>(levi[r])][static_cast<std::size_t>(levi[c])];
    rhs[r] = levi[r] == *deleted ? 1 : 0;
  }
  const auto sol = solve(a, rhs);
  if (!sol) throw std::logic_error("singular Cartan matrix of g'");
  AlgebraElement h;
  for (std::size_t c = 0; c < k; ++c) h.add(g.cartan_index(levi[c]), (*sol)[c]);
  Integer scale = 1;
  for (const auto& [ev, d] : subalgebra_decomposition(qd, h).dims) {
    Integer den = ev.get_den();
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
  }
  return Rational(scale) * h;
}

Rational SForm::value(const std::vector<Rational>& u, const std::vector<Rational>& v) const {
  Rational s;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto [a, b] = pairs[k];
    s += coeffs[k] * (u[static_cast<std::size_t>(a)] * v[static_cast<std::size_t>(b)] +
                      u[static_cast<std::size_t>(b)] * v[static_cast<std::size_t>(a)]);
  }
  return s / 2;
}

std::optional<SForm> solve_s_form(const QuarticData& qd, const std::vector<Rational>& y0,
                                  const std::vector<std::vector<Rational>>& span) {
  if (std::all_of(y0.begin(), y0.end(), [](const Rational& c) { return c == 0; }))
    throw std::invalid_argument("y0 must be nonzero");
  SForm s;
  for (int mu = 0; mu < static_cast<int>(qd.size()); ++mu)
    if (mu < qd.partner(mu)) s.pairs.emplace_back(mu, qd.partner(mu));
  const std::size_t k = s.pairs.size();
  RationalMatrix a(span.size() + 1, k);
  RationalVector rhs(span.size() + 1);
  for (std::size_t c = 0; c < k; ++c) {
    const auto [i, j] = s.pairs[c];
    a(0, c) = y0[static_cast<std::size_t>(i)] * y0[static_cast<std::size_t>(j)];
  }
  const AlgebraElement y = qd.element(y0);
  for (std::size_t r = 0; r < span.size(); ++r) {
    const auto& v = span[r];
    for (std::size_t c = 0; c < k; ++c) {
      const auto [i, j] = s.pairs[c];
      const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
      a(r + 1, c) = 2 * (y0[ui] * v[uj] + y0[uj] * v[ui]);
    }
    rhs[r + 1] = -qd.symplectic(y, qd.element(v));
  }
  const auto sol = solve(a, rhs);
  if (!sol) return std::nullopt;
  s.coeffs = *sol;
  return s;
}

}  // namespace glie
