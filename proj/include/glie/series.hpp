#pragma once

#include <algorithm>
#include <climits>
#include <map>
#include <optional>
#include <stdexcept>

#include "glie/invariants.hpp"

namespace glie {

/// Laurent series sum c_k t^k known exactly for k < order; coefficients at or
/// above the order are unknown and never stored.
template <class C>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order = INT_MAX) : order_(order) {}

  static TruncatedSeries monomial(const C& c, int exponent, int order = INT_MAX) {
    TruncatedSeries s(order);
    s.add(exponent, c);
    return s;
  }

  int order() const { return order_; }
  /// Lowest exponent with a nonzero coefficient, or nullopt for zero.
  std::optional<int> valuation() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.begin()->first;
  }
  C coefficient(int k) const {
    if (k >= order_) throw std::out_of_range("coefficient beyond the truncation order");
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? C{} : it->second;
  }
  const std::map<int, C>& terms() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  void add(int k, const C& c) {
    if (k >= order_) return;
    auto [it, fresh] = coeffs_.try_emplace(k, c);
    if (!fresh) it->second += c;
    if (it->second == C{}) coeffs_.erase(it);
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    order_ = std::min(order_, o.order_);
    for (auto it = coeffs_.lower_bound(order_); it != coeffs_.end();) it = coeffs_.erase(it);
    for (const auto& [k, c] : o.coeffs_) add(k, c);
    return *this;
  }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }

  TruncatedSeries scaled(const Rational& f) const {
    TruncatedSeries s(order_);
    if (f != 0)
      for (const auto& [k, c] : coeffs_) s.add(k, c * f);
    return s;
  }

  /// Multiplies by t^k.
  TruncatedSeries shifted(int k) const {
    TruncatedSeries s(order_ == INT_MAX ? INT_MAX : order_ + k);
    for (const auto& [e, c] : coeffs_) s.add(e + k, c);
    return s;
  }

  bool operator==(const TruncatedSeries&) const = default;

 private:
  int order_;
  std::map<int, C> coeffs_;
};

/// Cauchy product with coefficient product op; the result is exact below
/// min(a.order + val(b), b.order + val(a)).
template <class C, class Op>
TruncatedSeries<C> multiply(const TruncatedSeries<C>& a, const TruncatedSeries<C>& b, Op op) {
  auto bound = [](int order, std::optional<int> val) {
    if (order == INT_MAX || !val) return INT_MAX;
    return order + *val;
  };
  TruncatedSeries<C> out(std::min(bound(a.order(), b.valuation()), bound(b.order(), a.valuation())));
  for (const auto& [i, x] : a.terms())
    for (const auto& [j, y] : b.terms()) out.add(i + j, op(x, y));
  return out;
}

using LieSeries = TruncatedSeries<AlgebraElement>;

LieSeries bracket(const GradedAlgebra& g, const LieSeries& a, const LieSeries& b);
/// exp(ad s) applied to y; throws if ad s is not nilpotent within dim steps.
LieSeries exp_apply(const GradedAlgebra& g, const LieSeries& s, const LieSeries& y);
/// Ad_{g_t}: the grade-n part of each coefficient is multiplied by t^n.
LieSeries conjugate_by_d(const GradedAlgebra& g, const LieSeries& s);

/// exp(b) exp(c) = exp(b + c + [b, c]/2) as operators on g, for b, c in
/// g_{<=-1}. First checks [g_{-2}, g_{<=-1}] = 0 on basis pairs.
CheckReport ch_check(const GradedAlgebra& g, const AlgebraElement& b, const AlgebraElement& c);

/// Symmetric bilinear map s: g_{-1} x g_{-1} -> g_{-2} = k w, as a matrix in
/// the coordinates of QuarticData.
struct QuadraticMap {
  std::vector<std::vector<Rational>> matrix;

  explicit QuadraticMap(std::size_t n = 0) : matrix(n, std::vector<Rational>(n)) {}
  Rational operator()(const std::vector<Rational>& u, const std::vector<Rational>& v) const;
};

/// Witness for s(x) = 0 and 4 s(x, a) = <a, x>: the symmetrized product of
/// two functionals dual to x and a, scaled by <a, x>/4.
QuadraticMap witness_form(const QuarticData& qd, const AlgebraElement& x, const AlgebraElement& a);

struct LimitResult {
  LieSeries series;
  AlgebraElement limit;       // t^0 coefficient
  bool no_negative_powers = true;
  bool equals_exp_a_xv = false;
  bool matches_polarization = false;  // limit = [x,v] + 2 p(x,a) mod V_2^- + V_{>2}
  nlohmann::json to_json(const GradedAlgebra& g) const;
};

/// With phi(t) = x + a t + b t^2, expands g_t exp(phi + s(phi)) v as a series
/// in t, and compares its t^0 coefficient with exp(a)[x, v]. Here p(x, a) is
/// the diagonal-normalized polarization, so the V_2^+ part of the limit is
/// 2 p(x, a).
LimitResult limit_bl(const QuarticData& qd, const AlgebraElement& x, const AlgebraElement& a, const QuadraticMap& s,
                     const AlgebraElement& b = {}, int order = 6);

}  // namespace glie
