#include "glie/lp.hpp"

#include <stdexcept>

namespace glie {

FeasibilityResult nonnegative_feasibility(const RationalMatrix& a, const RationalVector& b) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (b.size() != m) throw std::invalid_argument("nonnegative_feasibility: dimension mismatch");

  // tableau columns: n structural, m artificial, then rhs
  const std::size_t width = n + m + 1;
  RationalMatrix t(m, width);
  std::vector<int> flip(m, 1);
  for (std::size_t i = 0; i < m; ++i) {
    if (sgn(b[i]) < 0) flip[i] = -1;
    for (std::size_t j = 0; j < n; ++j) t(i, j) = flip[i] * a(i, j);
    t(i, n + i) = 1;
    t(i, n + m) = flip[i] * b[i];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  // reduced costs for minimizing the sum of artificials
  RationalVector cost(width);
  for (std::size_t j = 0; j < width; ++j) {
    if (j >= n && j < n + m) continue;
    for (std::size_t i = 0; i < m; ++i) cost[j] -= t(i, j);
  }

  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < n + m; ++j)
      if (sgn(cost[j]) < 0) {
        enter = j;
        break;
      }
    if (enter == width) break;

    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(t(i, enter)) <= 0) continue;
      Rational ratio = t(i, n + m) / t(i, enter);
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) throw std::logic_error("phase-one simplex is unbounded");

    const Rational inv = 1 / t(leave, enter);
    for (std::size_t j = 0; j < width; ++j) t(leave, j) *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || sgn(t(i, enter)) == 0) continue;
      const Rational f = t(i, enter);
      for (std::size_t j = 0; j < width; ++j)
        if (sgn(t(leave, j)) != 0) t(i, j) -= f * t(leave, j);
    }
    if (sgn(cost[enter]) != 0) {
      const Rational f = cost[enter];
      for (std::size_t j = 0; j < width; ++j)
        if (sgn(t(leave, j)) != 0) cost[j] -= f * t(leave, j);
    }
    basis[leave] = enter;
  }

  FeasibilityResult result;
  // -cost[rhs] is the phase-one objective value
  if (sgn(cost[n + m]) == 0) {
    result.feasible = true;
    result.point.assign(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
      if (basis[i] < n) result.point[basis[i]] = t(i, n + m);
    return result;
  }
  // duals of the flipped system are y_k = 1 - cost[n+k]; -y separates
  result.farkas.resize(m);
  for (std::size_t k = 0; k < m; ++k) result.farkas[k] = flip[k] * (cost[n + k] - 1);
  return result;
}

bool certificate_holds(const RationalMatrix& a, const RationalVector& b, const FeasibilityResult& r) {
  if (r.feasible) {
    if (r.point.size() != a.cols()) return false;
    for (const auto& x : r.point)
      if (sgn(x) < 0) return false;
    return a.apply(r.point) == b;
  }
  if (r.farkas.size() != a.rows()) return false;
  Rational yb;
  for (std::size_t i = 0; i < a.rows(); ++i) yb += r.farkas[i] * b[i];
  if (sgn(yb) >= 0) return false;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    Rational s;
    for (std::size_t i = 0; i < a.rows(); ++i) s += r.farkas[i] * a(i, j);
    if (sgn(s) < 0) return false;
  }
  return true;
}

}  // namespace glie
