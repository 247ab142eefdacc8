#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "glie/adjointmod.hpp"

namespace glie {

/// Sorted list of variable positions (indices into QuarticData::lambda()).
using Monomial = std::vector<int>;
template <class C>
using PolyTable = std::map<Monomial, C>;

/// d/dx^var of a polynomial table.
template <class C>
PolyTable<C> differentiate(const PolyTable<C>& poly, int var) {
  PolyTable<C> out;
  for (const auto& [mono, c] : poly) {
    const auto first = std::find(mono.begin(), mono.end(), var);
    if (first == mono.end()) continue;
    const auto mult = std::count(mono.begin(), mono.end(), var);
    Monomial rest(mono.begin(), first);
    rest.insert(rest.end(), first + 1, mono.end());
    auto [it, fresh] = out.try_emplace(std::move(rest), c * Rational(static_cast<long>(mult)));
    if (!fresh) it->second += c * Rational(static_cast<long>(mult));
  }
  return out;
}

Rational evaluate(const PolyTable<Rational>& poly, const std::vector<Rational>& x);
AlgebraElement evaluate(const PolyTable<AlgebraElement>& poly, const std::vector<Rational>& x);

/// The invariant tensors of an adjoint-fundamental pair:
///   p(x) = ad_x^2(v)/2,  q(x) = ad_x^3(v)/6,  r(x) w = ad_x^4(v)/24
/// for x in g_{-1}, stored as monomial tables in the coordinates x^mu of
/// x = sum x^mu X_mu, with X_mu the Chevalley root vectors of g_{-1}.
class QuarticData {
 public:
  explicit QuarticData(GradedModule m);

  const GradedModule& module() const { return m_; }
  const GradedAlgebra& algebra() const { return m_.algebra(); }
  std::size_t size() const { return m_.lambda().size(); }
  std::size_t basis_index(int mu) const { return m_.lambda()[static_cast<std::size_t>(mu)]; }
  /// Position of the weight -mu.
  int partner(int mu) const { return partner_[static_cast<std::size_t>(mu)]; }
  /// c_mu = <X_mu, X_{-mu}>.
  const Rational& c(int mu) const { return c_[static_cast<std::size_t>(mu)]; }
  const std::vector<int>& weight(int mu) const { return weights_[static_cast<std::size_t>(mu)]; }

  AlgebraElement element(const std::vector<Rational>& x) const;
  std::vector<Rational> coordinates(const AlgebraElement& x) const;
  std::vector<Rational> random_point(RandomRationals& rng) const;

  /// <a, b> w = [a, b] for a, b in g_{-1}.
  Rational symplectic(const AlgebraElement& a, const AlgebraElement& b) const;

  AlgebraElement p_direct(const AlgebraElement& x) const;
  AlgebraElement q_direct(const AlgebraElement& x) const;
  Rational r_direct(const AlgebraElement& x) const;

  const PolyTable<AlgebraElement>& p_table() const { return p_; }
  const PolyTable<AlgebraElement>& q_table() const { return q_; }
  const PolyTable<Rational>& r_table() const { return r_; }
  /// The cubic coefficient q^mu(x) of q(x) = sum q^mu(x) X_mu.
  PolyTable<Rational> q_component(int mu) const;

  /// dr/dx^mu at x for all mu, from the r table.
  std::vector<Rational> r_gradient(const std::vector<Rational>& x) const;
  /// d^2 r / dx^mu dx^beta at x, from the r table.
  std::vector<std::vector<Rational>> r_hessian(const std::vector<Rational>& x) const;
  /// dq/dx^beta at x for all beta, from the q table.
  std::vector<AlgebraElement> q_gradient(const std::vector<Rational>& x) const;

 private:
  GradedModule m_;
  std::vector<int> partner_;
  std::vector<Rational> c_;
  std::vector<std::vector<int>> weights_;
  std::map<std::size_t, int> position_;
  PolyTable<AlgebraElement> p_, q_;
  PolyTable<Rational> r_;
};

/// Symmetric multilinear form of degree args.size() attached to ad^d(v)/d!,
/// normalized so that the diagonal gives back the form:
///   F(a_1..a_d) = (1/d!)^2 sum over permutations of ad_{a_pi(1)}...ad_{a_pi(d)}(v).
AlgebraElement polarized_form(const GradedModule& m, const std::vector<AlgebraElement>& args);
/// Degree-4 case as a scalar: F(a,b,c,d) = r(a,b,c,d) w.
Rational polarized_r(const QuarticData& qd, const std::vector<AlgebraElement>& args);

/// exp(x)v = v + [x,v] + p(x) + q(x) + r(x)w with the table forms, p(x) in g',
/// table and direct evaluations agree, and the polarization recovers each form
/// on the diagonal.
CheckReport verify_expansion(const QuarticData& qd, std::size_t trials, std::uint64_t seed);

/// At random points:
///   dr/dx^mu = c_mu q^{-mu}(x) = <X_mu, q(x)>
///   dq/dx^b = [X_b, p(x)] + <X_b, x> x / 2
///   d^2 r/dx^mu dx^b w = [X_mu, [X_b, p(x)]] + <X_mu, x><X_b, x> w / 2
///   q(x,x,a) = [a, p(x)]/3 + <a, x> x / 6
///   r(x,x,x,a) = <a, q(x)>/4
CheckReport verify_derivative_identities(const QuarticData& qd, std::size_t trials, std::uint64_t seed);

/// Every zero-sum quadruple of weights has a nonzero r coefficient, every r
/// monomial has zero weight, each q^mu has a monomial free of x^mu, and
/// c_{-mu} = -c_mu != 0.
CheckReport quartic_coefficient_survey(const QuarticData& qd);

/// Number of zero-sum multisets of four weights, counted from the weights alone.
std::size_t count_zero_sum_quadruples(const QuarticData& qd);

struct EigenDecomposition {
  std::map<Rational, std::size_t> dims;
  bool integral = true;
};

/// Eigenspace dimensions of ad(h) on g_{-1} for h in the Cartan subalgebra.
EigenDecomposition subalgebra_decomposition(const QuarticData& qd, const AlgebraElement& h);

/// The element of the Cartan of g' that kills every simple root of g' except
/// `deleted`, scaled to the smallest multiple with integral eigenvalues on
/// g_{-1}. By default `deleted` is the lowest-numbered neighbour of the marked
/// node.
AlgebraElement levi_coweight(const QuarticData& qd, std::optional<int> deleted = std::nullopt);

/// Quadratic form s(x) = sum_k S_k x^{mu_k} x^{-mu_k} over the pairs
/// {mu_k, -mu_k} with mu_k < -mu_k in position order; s(u, v) is its
/// polarization.
struct SForm {
  std::vector<std::pair<int, int>> pairs;
  std::vector<Rational> coeffs;

  Rational value(const std::vector<Rational>& u, const std::vector<Rational>& v) const;
};

/// Quadratic form s with s(y0) = 0 and <y0, a> + 4 s(y0, a) = 0 for all a in
/// the span of `span`, or nullopt when that linear system is inconsistent.
/// Free coefficients are set to zero.
std::optional<SForm> solve_s_form(const QuarticData& qd, const std::vector<Rational>& y0,
                                  const std::vector<std::vector<Rational>>& span);

}  // namespace glie
