#pragma once

#include <cstdint>
#include <vector>

#include "glie/delpezzo.hpp"
#include "glie/invariants.hpp"
#include "glie/report.hpp"

namespace glie {

// Batch checks shared by the command line tool and the acceptance runner.
// Each one draws its randomness from the seed alone.

/// Dimensions of the graded pieces, g' and the centre of g_0.
CheckReport structure_report(const GradedAlgebra& g);

/// Both classifier lists, plus the coefficient of the node in the highest root.
CheckReport classification_report(int max_rank = 8);

/// Module structure, grading, the expansion of exp(x)v and the derivative identities.
std::vector<CheckReport> identity_suite(const QuarticData& qd, std::size_t trials, std::uint64_t seed);

/// Sampled points of the Levi cone: p = 0, constant tangent dimension,
/// isotropic tangents fixed by exp, and the lower-part annihilators.
CheckReport orbit_suite(const QuarticData& qd, std::size_t samples, std::uint64_t seed);

/// Operator identity exp(b) exp(c) = exp(b + c + [b, c]/2) on random pairs in g_{<=-1}.
CheckReport ch_suite(const GradedAlgebra& g, std::size_t pairs, std::uint64_t seed);

/// The limit along x + a t for cone points x and random a, with the witness
/// form and with a form violating 4 s(x, a) = <a, x>.
CheckReport limit_suite(const QuarticData& qd, std::size_t samples, std::uint64_t seed);

/// Half random fat supports, half random subsets of the roots.
CheckReport fat_suite(const GradedAlgebra& g, std::size_t supports, std::uint64_t seed);

std::vector<CheckReport> lattice_suite(const Dp1Lattice& lat, const CharacterLattice& tl, std::uint64_t seed);

}  // namespace glie
