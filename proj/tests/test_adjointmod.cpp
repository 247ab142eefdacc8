#include "doctest.h"

#include "glie/adjointmod.hpp"

using namespace glie;

namespace {

GradedModule make(CartanType t, int n, int node) {
  return GradedModule(GradedAlgebra::build(RootSystem::build(t, n)).graded_by(node));
}

}  // namespace

TEST_CASE("module structure for E8 and G2") {
  const auto e8 = make(CartanType::E, 8, 7);
  const auto rep = check_module_structure(e8);
  CHECK(rep.pass);
  CHECK(rep.details["dim_V1"] == 56);
  CHECK(rep.details["dim_V2"] == 134);
  CHECK(rep.details["dim_g_prime"] == 133);

  const auto g2 = make(CartanType::G, 2, 1);
  const auto r2 = check_module_structure(g2);
  CHECK(r2.pass);
  // oracle: roots with alpha_2 coefficient -1
  std::size_t count = 0;
  for (const auto& b : g2.algebra().root_system().roots()) count += b.coords[1] == -1;
  CHECK(r2.details["dim_V1"] == count);
  CHECK(count == 4);
}

TEST_CASE("module structure for the remaining adjoint-fundamental pairs") {
  for (const auto& c : classify_adjoint_fundamental(6)) {
    CAPTURE(c.to_string());
    CHECK(check_module_structure(make(c.type, c.rank, c.node)).pass);
  }
}

TEST_CASE("non adjoint-fundamental gradings are rejected") {
  CHECK_THROWS_AS(make(CartanType::A, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(make(CartanType::C, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(make(CartanType::E, 8, 0), std::invalid_argument);
  CHECK_THROWS_AS(GradedModule(GradedAlgebra::build(RootSystem::build(CartanType::G, 2))), std::invalid_argument);
}

TEST_CASE("v, w, z normalization") {
  const auto m = make(CartanType::F, 4, 0);
  const auto& g = m.algebra();
  CHECK(g.bracket(m.v(), m.w()) == m.z());
  CHECK(g.bracket(m.w(), m.v()) == -m.z());
  for (std::size_t i : g.basis_of_grade(1)) {
    const auto y = AlgebraElement::basis(i);
    CHECK(g.bracket(g.bracket(y, m.w()), m.v()) == y);
  }
  for (std::size_t i : g.basis_of_grade(-1)) {
    const auto x = AlgebraElement::basis(i);
    CHECK(g.bracket(g.bracket(x, m.v()), m.w()) == x);
    CHECK(g.bracket(m.z(), x) == -x);
  }
}

TEST_CASE("projections reassemble exp(x)v") {
  const auto m = make(CartanType::G, 2, 1);
  const auto& g = m.algebra();
  CHECK(m.project(0, m.v()) == m.v());
  CHECK(m.project(1, m.v()).is_zero());
  RandomRationals rng(5);
  for (int t = 0; t < 20; ++t) {
    const auto x = random_combination(m.lambda(), rng);
    // oracle: plain power series sum ad_x^k v / k!
    AlgebraElement term = m.v(), direct = m.v();
    for (int k = 1; k <= 6; ++k) {
      term = Rational(1, k) * g.bracket(x, term);
      direct += term;
    }
    const auto e = g.exp_apply(x, m.v());
    CHECK(e == direct);
    AlgebraElement sum;
    for (int n = 0; n <= 4; ++n) sum += m.project(n, e);
    CHECK(sum == e);
    CHECK(m.project(2, e) == m.project_2plus(e) + m.project_2minus(e));
    CHECK(m.project(1, e) == g.bracket(x, m.v()));
  }
}

TEST_CASE("grading compatibility") {
  for (auto c : {CaseId{CartanType::G, 2, 1}, CaseId{CartanType::B, 3, 1}, CaseId{CartanType::F, 4, 0}}) {
    CAPTURE(c.to_string());
    CHECK(check_module_grading(make(c.type, c.rank, c.node)).pass);
  }
  CHECK(check_module_grading(make(CartanType::E, 7, 0), 20000, 3).pass);
  CHECK(check_module_grading(make(CartanType::E, 8, 7), 20000, 4).pass);
}

TEST_CASE("weight of X_{-alpha} v") {
  const auto m = make(CartanType::E, 8, 7);
  const auto& rs = m.algebra().root_system();
  const Root alpha = rs.simple_root(7);
  const auto y = m.algebra().bracket(AlgebraElement::basis(m.algebra().index_of(-alpha)), m.v());
  REQUIRE(y.support_size() == 1);
  const Weight got = rs.to_weight(m.algebra().root_of(y.begin()->first));
  Weight expected = rs.fundamental_weight(7);
  for (std::size_t k = 0; k < 8; ++k) expected.coords[k] -= rs.to_weight(alpha).coords[k];
  CHECK(got == expected);
}

TEST_CASE("lower Borel elements never reach V_1") {
  const auto e8 = make(CartanType::E, 8, 7);
  CHECK(check_lower_borel_projection(e8, e8.w_index(), 50, 11).pass);
  CHECK_THROWS_AS(check_lower_borel_projection(e8, e8.v_index(), 1, 1), std::invalid_argument);

  // control: the highest vector does reach V_1
  RandomRationals rng(2);
  const auto x = random_combination(e8.lambda(), rng);
  const auto e = e8.algebra().exp_apply(x, e8.v());
  CHECK_FALSE(e8.project(1, e).is_zero());
  CHECK(e8.project(1, e) == e8.algebra().bracket(x, e8.v()));

  const auto g2 = make(CartanType::G, 2, 1);
  for (std::size_t i = 0; i < g2.algebra().num_roots(); ++i)
    if (g2.degree(i) >= 2) CHECK(check_lower_borel_projection(g2, i, 30, i).pass);
}

TEST_CASE("torus action is an automorphism") {
  const auto m = make(CartanType::G, 2, 1);
  const auto& g = m.algebra();
  const std::vector<Rational> t{Rational(2, 3), Rational(-5)};
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j) {
      const auto a = AlgebraElement::basis(i), b = AlgebraElement::basis(j);
      CHECK(m.torus_act(g.bracket(a, b), t) == g.bracket(m.torus_act(a, t), m.torus_act(b, t)));
    }
}
