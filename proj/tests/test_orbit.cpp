#include "doctest.h"

#include "glie/linalg.hpp"
#include "glie/orbit.hpp"

using namespace glie;

namespace {

const QuarticData& e8() {
  static const QuarticData qd(GradedModule(GradedAlgebra::build(RootSystem::build(CartanType::E, 8)).graded_by(7)));
  return qd;
}

const QuarticData& g2() {
  static const QuarticData qd(GradedModule(GradedAlgebra::build(RootSystem::build(CartanType::G, 2)).graded_by(1)));
  return qd;
}

AlgebraElement lowest(const QuarticData& qd) {
  const auto& g = qd.algebra();
  return AlgebraElement::basis(g.index_of(-g.root_system().simple_root(qd.module().node())));
}

}  // namespace

TEST_CASE("identity word gives the highest weight vectors") {
  const auto p = orbit_point_from_word(e8(), Cone::Full, {}, {});
  CHECK(p.vector == e8().module().v());
  CHECK(p.certified);
  const auto q = orbit_point_from_word(e8(), Cone::Levi, {}, {});
  CHECK(q.vector == lowest(e8()));
  CHECK(q.certified);
  CHECK(q.provenance(e8().algebra())["cone"] == "g'p'");
}

TEST_CASE("sampled Levi-cone points satisfy p(x) = 0 and have 28-dimensional tangent spaces") {
  const auto& qd = e8();
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto pt = sample_orbit_point(qd, Cone::Levi, seed);
    CHECK(pt.certified);
    CHECK(membership_quadrics(qd, pt.vector));
    // scaling stays on the cone
    CHECK(membership_quadrics(qd, Rational(-7, 3) * pt.vector));
    if (seed < 10) {
      const auto tan = tangent_space(qd, pt.vector);
      CHECK(span_dimension(qd.algebra(), tan) == 28);
      for (const auto& a : tan) {
        CHECK(qd.symplectic(pt.vector, a) == 0);
        CHECK(polarized_form(qd.module(), {pt.vector, a}).is_zero());
      }
    }
  }
}

TEST_CASE("generic points are off the cone") {
  const auto& qd = e8();
  CHECK(membership_quadrics(qd, AlgebraElement{}));
  CHECK(membership_quadrics(qd, lowest(qd)));
  CHECK(membership_certificate(qd, lowest(qd)).is_null());
  RandomRationals rng(3);
  const auto x = qd.element(qd.random_point(rng));
  CHECK_FALSE(membership_quadrics(qd, x));
  const auto cert = membership_certificate(qd, x);
  REQUIRE(cert.is_object());
  CHECK(cert.size() == 1);
  CHECK_THROWS_AS(tangent_space(qd, x), std::invalid_argument);
  CHECK_THROWS_AS(tangent_space(qd, AlgebraElement{}), std::invalid_argument);

  // p(y, a) != 0 for a transverse direction at a cone point
  const auto y = sample_orbit_point(qd, Cone::Levi, 1).vector;
  CHECK_FALSE(polarized_form(qd.module(), {y, x}).is_zero());
}

TEST_CASE("G2 Levi cone is the cone over the twisted cubic") {
  const auto& qd = g2();
  std::vector<AlgebraElement> pts;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto pt = sample_orbit_point(qd, Cone::Levi, seed);
    CHECK(pt.certified);
    CHECK(span_dimension(qd.algebra(), tangent_space(qd, pt.vector)) == 2);
    pts.push_back(pt.vector);
  }
  // the cone spans all of g_{-1}
  CHECK(span_dimension(qd.algebra(), pts) == 4);
}

TEST_CASE("full-cone samples") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) CHECK(sample_orbit_point(g2(), Cone::Full, seed).certified);
  CHECK(sample_orbit_point(e8(), Cone::Full, 1).certified);
  const auto& g = g2().algebra();
  CHECK_FALSE(in_minimal_orbit_cone(g, AlgebraElement::basis(g.cartan_index(0))));
  CHECK(parse_cone("gp") == Cone::Full);
  CHECK(parse_cone("g'p'") == Cone::Levi);
  CHECK_THROWS_AS(parse_cone("x"), std::invalid_argument);
}

TEST_CASE("exponentials of tangent vectors fix [x, v]") {
  const auto& qd = e8();
  RandomRationals rng(12);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto x = sample_orbit_point(qd, Cone::Levi, seed).vector;
    CHECK(exp_tangent_fixes(qd, x, x));
    const auto tan = tangent_space(qd, x);
    AlgebraElement a;
    for (const auto& t : tan) a += rng.rational() * t;
    CHECK(exp_tangent_fixes(qd, x, a));
    CHECK_FALSE(exp_tangent_fixes(qd, x, qd.element(qd.random_point(rng))));
  }
}

TEST_CASE("fibres of pi_1") {
  RandomRationals rng(21);
  const auto off = e8().element(e8().random_point(rng));
  const auto rep = fiber_decomposition_check(e8(), off, 10, 4);
  CHECK(rep.pass);
  CHECK(rep.details["on_cone"] == false);
  CHECK(rep.details["annihilator_v"] == 0);
  const auto on = sample_orbit_point(g2(), Cone::Levi, 2).vector;
  const auto r2 = fiber_decomposition_check(g2(), on, 10, 5);
  CHECK(r2.pass);
  CHECK(r2.details["on_cone"] == true);
  CHECK(r2.details["annihilator_v_omega_minus_alpha"] == 0);
  const auto r3 = fiber_decomposition_check(e8(), lowest(e8()), 3, 6);
  CHECK(r3.pass);
  CHECK_THROWS_AS(fiber_decomposition_check(e8(), AlgebraElement{}, 1, 1), std::invalid_argument);
}

TEST_CASE("D action") {
  const auto& g = g2().algebra();
  const Rational t(3, 2);
  const auto& m = g2().module();
  CHECK(d_act(g, m.v(), t) == t * m.v());
  CHECK(d_act(g, m.w(), t) == (1 / (t * t * t)) * m.w());
  CHECK(d_act(g, lowest(g2()), t) == (1 / (t * t)) * lowest(g2()));
}

TEST_CASE("Hilbert-Mumford and stabilizer tests") {
  const auto& g = e8().algebra();
  const auto& rs = g.root_system();
  const std::set<Root> all(rs.roots().begin(), rs.roots().end());
  const auto full = weight_support(g, all);
  const auto cert = stability_certificate(rs, full);
  CHECK(cert.stable);
  CHECK(trivial_stabilizer(rs, full));
  CHECK(fat_conditions(g, full));

  const auto single = weight_support(g, std::set<Root>{rs.simple_root(0)});
  const auto c1 = stability_certificate(rs, single);
  CHECK_FALSE(c1.stable);
  CHECK_FALSE(trivial_stabilizer(rs, single));

  // +-alpha_i for all i: stable, and the differences 2 alpha_i, alpha_i - alpha_j
  // only reach an index-2 sublattice... except they give alpha_i + alpha_j too
  std::set<Root> pm;
  for (int i = 0; i < 8; ++i) {
    pm.insert(rs.simple_root(i));
    pm.insert(-rs.simple_root(i));
  }
  const auto ws = weight_support(g, pm);
  CHECK(hilbert_mumford_stable(rs, ws));
  // every difference has even coordinate sum
  CHECK_FALSE(trivial_stabilizer(rs, ws));

  // half-space support: all positive roots
  std::set<Root> pos(rs.roots().begin(), rs.roots().begin() + static_cast<long>(rs.num_positive()));
  const auto hp = weight_support(g, pos);
  const auto c2 = stability_certificate(rs, hp);
  CHECK_FALSE(c2.stable);
  CHECK_FALSE(c2.lp.feasible);
  CHECK_FALSE(c2.lp.farkas.empty());
}

TEST_CASE("fat implies stable with trivial stabilizer on random supports") {
  const auto& g = e8().algebra();
  RandomRationals rng(99);
  std::vector<WeightSupport> supports;
  for (int k = 0; k < 500; ++k) supports.push_back(random_fat_support(g, rng));
  for (int k = 0; k < 500; ++k) {
    std::set<Root> s;
    for (const auto& r : g.root_system().roots())
      if (rng.integer(0, 5) == 0) s.insert(r);
    supports.push_back(weight_support(g, s));
  }
  const auto rep = check_fat_implication(g, supports);
  CHECK(rep.pass);
  CHECK(rep.details["fat"] >= 500);
  MESSAGE(rep.to_json().dump());
}
