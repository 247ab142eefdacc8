#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "glie/invariants.hpp"
#include "glie/lp.hpp"

namespace glie {

/// Full: the cone (G/P)_a = closure of G v inside g.
/// Levi: the cone (G'/P')_a = closure of G' X_{-alpha} inside g_{-1}.
enum class Cone { Full, Levi };

const char* cone_name(Cone c);  // "gp" or "g'p'"
Cone parse_cone(const std::string& s);

/// A cone point together with the word that produced it: the starting vector
/// is scaled by the torus element, then the exponentials are applied right to
/// left.
struct OrbitPoint {
  Cone cone = Cone::Levi;
  AlgebraElement vector;
  std::vector<Rational> torus;
  std::vector<AlgebraElement> word;
  bool certified = false;

  nlohmann::json provenance(const GradedAlgebra& g) const;
};

OrbitPoint orbit_point_from_word(const QuarticData& qd, Cone cone, const std::vector<Rational>& torus,
                                 const std::vector<AlgebraElement>& word);

/// Random word of three exponentials of nilpotent elements (alternating lower,
/// upper, lower triangular; in g' for the Levi cone, in g for the full cone)
/// and a random torus element with small rational parameters.
OrbitPoint sample_orbit_point(const QuarticData& qd, Cone cone, std::uint64_t seed);

/// x in g_{-1} lies on (G'/P')_a iff p(x) = 0.
bool membership_quadrics(const QuarticData& qd, const AlgebraElement& x);
/// A nonzero component of p(x) when x is off the cone, as {basis label: value}.
nlohmann::json membership_certificate(const QuarticData& qd, const AlgebraElement& x);

/// y lies on the minimal orbit cone iff [y, [y, g]] is contained in k y.
bool in_minimal_orbit_cone(const GradedAlgebra& g, const AlgebraElement& y);

/// Spanning set {x} and [e, x] for e in a basis of g'; x must be a nonzero cone point.
std::vector<AlgebraElement> tangent_space(const QuarticData& qd, const AlgebraElement& x);
std::size_t span_dimension(const GradedAlgebra& g, const std::vector<AlgebraElement>& vectors);

/// exp(a) fixes [x, v].
bool exp_tangent_fixes(const QuarticData& qd, const AlgebraElement& x, const AlgebraElement& a);

/// Fibres of pi_1 over x: points g_t exp(c w) exp(x) v are rebuilt from their
/// projections (t from pi_0, c from pi_2^-), and when x is on the cone the
/// second family exp(u)[x, v], u in g_{<=-1}, is checked to stay on (G/P)_a.
/// Also checks that g_{-2} stabilises neither v nor e_{theta-alpha}.
CheckReport fiber_decomposition_check(const QuarticData& qd, const AlgebraElement& x, std::size_t samples,
                                      std::uint64_t seed);

/// D acts on g_n by t^{n-1}.
AlgebraElement d_act(const GradedAlgebra& g, const AlgebraElement& x, const Rational& t);

/// Roots with nonzero coordinate, also split by grade.
struct WeightSupport {
  std::set<Root> roots;
  std::map<int, std::set<Root>> by_grade;
};

WeightSupport weight_support(const GradedAlgebra& g, const AlgebraElement& y);
WeightSupport weight_support(const GradedAlgebra& g, const std::set<Root>& roots);

struct StabilityCertificate {
  bool stable = false;
  bool spans = false;
  /// LP { mu >= 0 : sum (1 + mu_s) s = 0 }: a point gives strictly positive
  /// weights, a Farkas vector is a functional that is >= 0 on the support.
  FeasibilityResult lp;
};

/// 0 is an interior point of the convex hull of the support.
StabilityCertificate stability_certificate(const RootSystem& rs, const WeightSupport& ws);
bool hilbert_mumford_stable(const RootSystem& rs, const WeightSupport& ws);
/// The differences of support elements generate the root lattice.
bool trivial_stabilizer(const RootSystem& rs, const WeightSupport& ws);
/// (i) for grade-0 roots mu, nu with (mu, nu) = 1 one of them is in the
/// support; (ii) the support meets grades 1 and -1.
bool fat_conditions(const GradedAlgebra& g, const WeightSupport& ws);

/// fat => (stable and trivial stabilizer), on the given supports.
CheckReport check_fat_implication(const GradedAlgebra& g, const std::vector<WeightSupport>& supports);

/// Random support satisfying the fat conditions: drops a random set of
/// grade-0 roots with no pair at inner product 1 and keeps a random subset of
/// the other grades meeting grades 1 and -1.
WeightSupport random_fat_support(const GradedAlgebra& g, RandomRationals& rng);

}  // namespace glie
