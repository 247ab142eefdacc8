#include "doctest.h"

#include "glie/linalg.hpp"
#include "glie/lp.hpp"

using namespace glie;

namespace {

RationalMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<RationalVector> rs;
  for (auto r : rows) {
    RationalVector v;
    for (long x : r) v.emplace_back(x);
    rs.push_back(v);
  }
  return RationalMatrix::from_rows(rs, rs.front().size());
}

}  // namespace

TEST_CASE("rank, kernel and solve on a small system") {
  const auto m = mat({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(m) == 2);
  const auto ker = kernel(m);
  REQUIRE(ker.size() == 1);
  CHECK(m.apply(ker[0]) == RationalVector(3));
  auto x = solve(m, {Rational(6), Rational(12), Rational(2)});
  REQUIRE(x);
  CHECK(m.apply(*x) == RationalVector{6, 12, 2});
  CHECK_FALSE(solve(m, {Rational(1), Rational(1), Rational(1)}));
}

TEST_CASE("determinant matches cofactor expansion") {
  CHECK(determinant(mat({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}})) == 4);
  CHECK(determinant(mat({{0, 1}, {1, 0}})) == -1);
  CHECK(determinant(mat({{1, 2}, {2, 4}})) == 0);
}

TEST_CASE("random matrices satisfy rank-nullity and kernel annihilation") {
  RandomRationals rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = static_cast<std::size_t>(rng.integer(1, 5));
    const std::size_t c = static_cast<std::size_t>(rng.integer(1, 6));
    RationalMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.coin() ? rng.rational() : Rational(0);
    const auto ker = kernel(m);
    CHECK(rank(m) + ker.size() == c);
    for (const auto& v : ker) CHECK(m.apply(v) == RationalVector(r));
  }
}

TEST_CASE("smith invariants") {
  IntegerMatrix m = {{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  // classical example with invariant factors 2, 6, 12
  CHECK(smith_invariants(m) == std::vector<Integer>{2, 6, 12});
  CHECK(generates_full_lattice({{1, 0}, {1, 1}}, 2));
  CHECK_FALSE(generates_full_lattice({{2, 0}, {0, 1}}, 2));
  CHECK_FALSE(generates_full_lattice({{1, 1}}, 2));
}

TEST_CASE("exact feasibility returns a verified point or a Farkas vector") {
  // x1 - x2 = 1, x >= 0: feasible
  auto a = mat({{1, -1}});
  auto r = nonnegative_feasibility(a, {Rational(1)});
  CHECK(r.feasible);
  CHECK(certificate_holds(a, {Rational(1)}, r));
  // x1 + x2 = -1, x >= 0: infeasible
  auto b = mat({{1, 1}});
  auto s = nonnegative_feasibility(b, {Rational(-1)});
  CHECK_FALSE(s.feasible);
  CHECK(certificate_holds(b, {Rational(-1)}, s));

  RandomRationals rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t m = static_cast<std::size_t>(rng.integer(1, 4));
    const std::size_t n = static_cast<std::size_t>(rng.integer(1, 6));
    RationalMatrix am(m, n);
    RationalVector bv(m);
    for (std::size_t i = 0; i < m; ++i) {
      bv[i] = rng.integer(-3, 3);
      for (std::size_t j = 0; j < n; ++j) am(i, j) = rng.integer(-3, 3);
    }
    auto res = nonnegative_feasibility(am, bv);
    CHECK(certificate_holds(am, bv, res));
  }
}
