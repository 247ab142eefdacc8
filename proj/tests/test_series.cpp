#include "doctest.h"

#include "glie/orbit.hpp"
#include "glie/series.hpp"

using namespace glie;

namespace {

using RSeries = TruncatedSeries<Rational>;

const QuarticData& e8() {
  static const QuarticData qd(GradedModule(GradedAlgebra::build(RootSystem::build(CartanType::E, 8)).graded_by(7)));
  return qd;
}

const QuarticData& g2() {
  static const QuarticData qd(GradedModule(GradedAlgebra::build(RootSystem::build(CartanType::G, 2)).graded_by(1)));
  return qd;
}

RSeries random_series(RandomRationals& rng, int order) {
  RSeries s(order);
  for (int k = -2; k < order; ++k) s.add(k, rng.rational());
  return s;
}

RSeries times(const RSeries& a, const RSeries& b) {
  return multiply(a, b, [](const Rational& x, const Rational& y) { return Rational(x * y); });
}

}  // namespace

TEST_CASE("truncation bookkeeping") {
  RSeries a(3), b(2);
  a.add(0, 1);
  a.add(1, 1);
  a.add(5, 1);  // dropped
  b.add(-1, 1);
  CHECK(a.terms().size() == 2);
  const auto p = times(a, b);
  CHECK(p.order() == 2);  // min(3 + (-1), 2 + 0)
  CHECK(p.coefficient(-1) == 1);
  CHECK(p.coefficient(0) == 1);
  CHECK(p.coefficient(1) == 0);
  CHECK_THROWS_AS(p.coefficient(2), std::out_of_range);
  CHECK((a + b).order() == 2);
  CHECK(a.shifted(2).order() == 5);
  CHECK(a.scaled(0).is_zero());
  CHECK(RSeries(4).valuation() == std::nullopt);
}

TEST_CASE("series arithmetic is associative and distributive up to the order") {
  RandomRationals rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_series(rng, 4), b = random_series(rng, 3), c = random_series(rng, 5);
    const auto l = times(times(a, b), c), r = times(a, times(b, c));
    const int order = std::min(l.order(), r.order());
    for (int k = -6; k < order; ++k) CHECK(l.coefficient(k) == r.coefficient(k));
    const auto d1 = times(a, b + c), d2 = times(a, b) + times(a, c);
    for (int k = -6; k < std::min(d1.order(), d2.order()); ++k) CHECK(d1.coefficient(k) == d2.coefficient(k));
  }
}

TEST_CASE("conjugation by g_t scales grade i by t^i") {
  const auto& g = g2().algebra();
  for (std::size_t i = 0; i < g.dim(); ++i) {
    const auto e = AlgebraElement::basis(i);
    CHECK(conjugate_by_d(g, LieSeries::monomial(e, 0)) == LieSeries::monomial(e, g.grade(i)));
  }
  // matches g_t ad(h) g_t^{-1} evaluated at a number
  RandomRationals rng(2);
  AlgebraElement h;
  for (std::size_t i = 0; i < g.dim(); ++i) h.add(i, rng.rational());
  const Rational t(-4, 3);
  AlgebraElement ht;
  const auto conj = conjugate_by_d(g, LieSeries::monomial(h, 0));
  for (const auto& [k, c] : conj.terms()) {
    Rational f = 1;
    for (int s = 0; s < std::abs(k); ++s) f = k > 0 ? Rational(f * t) : Rational(f / t);
    ht += f * c;
  }
  for (std::size_t j = 0; j < g.dim(); ++j) {
    const auto y = AlgebraElement::basis(j);
    CHECK(d_act(g, g.bracket(h, d_act(g, y, 1 / t)), t) == g.bracket(ht, y));
  }
}

TEST_CASE("Campbell-Hausdorff degeneration") {
  const auto& g8 = e8().algebra();
  RandomRationals rng(8);
  auto lower = g8.basis_of_grade(-1);
  for (std::size_t i : g8.basis_of_grade(-2)) lower.push_back(i);
  const auto b = random_combination(lower, rng), c = random_combination(lower, rng);
  CHECK(ch_check(g8, b, -b).pass);
  const auto rep = ch_check(g8, b, c);
  CHECK(rep.pass);
  CHECK(rep.details["columns"] == 248);
  CHECK(g8.exp_nilpotent(b).compose(g8.exp_nilpotent(-b)) == LinearOperator::identity(248));

  // exhaustive over basis pairs of G2's g_{<=-1}, against operator products
  const auto& g = g2().algebra();
  auto low2 = g.basis_of_grade(-1);
  for (std::size_t i : g.basis_of_grade(-2)) low2.push_back(i);
  for (std::size_t i : low2)
    for (std::size_t j : low2) {
      const auto bi = AlgebraElement::basis(i, Rational(2, 3)), cj = AlgebraElement::basis(j, Rational(-5, 2));
      CHECK(ch_check(g, bi, cj).pass);
      CHECK(g.exp_nilpotent(bi).compose(g.exp_nilpotent(cj)) ==
            g.exp_nilpotent(bi + cj + Rational(1, 2) * g.bracket(bi, cj)));
    }

  // a longer grading breaks the hypothesis
  const auto wide = GradedAlgebra::build(RootSystem::build(CartanType::E, 8)).graded_by(3);
  const auto x = AlgebraElement::basis(wide.basis_of_grade(-1).front());
  const auto bad = ch_check(wide, x, x);
  CHECK_FALSE(bad.pass);
  CHECK(bad.failures.front()["stage"] == "[g_-2, g_<=-1] = 0");
  CHECK_THROWS_AS(ch_check(g8, e8().module().v(), b), std::invalid_argument);
}

TEST_CASE("witness form") {
  const auto& qd = e8();
  RandomRationals rng(4);
  const auto x = sample_orbit_point(qd, Cone::Levi, 4).vector;
  const auto a = qd.element(qd.random_point(rng));
  const auto s = witness_form(qd, x, a);
  const auto xc = qd.coordinates(x), ac = qd.coordinates(a);
  CHECK(s(xc, xc) == 0);
  CHECK(4 * s(xc, ac) == qd.symplectic(a, x));
  CHECK(s(ac, xc) == s(xc, ac));
}

TEST_CASE("limit along phi(t) = x + a t") {
  const auto& qd = e8();
  const auto& g = qd.algebra();
  RandomRationals rng(13);
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const auto x = sample_orbit_point(qd, Cone::Levi, seed).vector;
    const auto xv = g.bracket(x, qd.module().v());

    const auto zero = limit_bl(qd, x, AlgebraElement{}, QuadraticMap(56));
    CHECK(zero.no_negative_powers);
    CHECK(zero.limit == xv);

    const auto a = qd.element(qd.random_point(rng));
    const auto s = witness_form(qd, x, a);
    const auto res = limit_bl(qd, x, a, s);
    CHECK(res.no_negative_powers);
    CHECK(res.equals_exp_a_xv);
    CHECK(res.matches_polarization);

    // a t^2 term in phi puts 2 s(x, b) w into the exponent at t^0, and
    // splitting off exp(x/t) leaves another [b, x]/2; this only moves the
    // limit inside V_2^- + V_{>2}
    const auto b = qd.element(qd.random_point(rng));
    const auto res2 = limit_bl(qd, x, a, s, b);
    CHECK(res2.no_negative_powers);
    CHECK(res2.matches_polarization);
    const Rational c = 2 * s(qd.coordinates(x), qd.coordinates(b)) - qd.symplectic(b, x) / 2;
    CHECK(res2.limit == g.exp_apply(c * qd.module().w(), res.limit));

    // doubling s breaks 4 s(x, a) = <a, x>
    QuadraticMap bad = s;
    for (auto& row : bad.matrix)
      for (auto& c : row) c *= 2;
    const auto res3 = limit_bl(qd, x, a, bad);
    CHECK_FALSE(res3.no_negative_powers);
    CHECK_FALSE(res3.series.coefficient(-1).is_zero());
  }
}
