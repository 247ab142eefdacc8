#pragma once

#include <cstdint>
#include <vector>

#include "glie/chevalley.hpp"
#include "glie/report.hpp"

namespace glie {

/// The adjoint representation of an adjoint-fundamental pair viewed as a
/// graded module: V_n = g_{2-n}, with highest vector v = e_theta in V_0 and
/// lowest vector w = e_{-theta} in V_4. V_2 = g_0 splits into the semisimple
/// part g' (V_2^+) and the centre line k z (V_2^-), where z = [v, w].
class GradedModule {
 public:
  /// Throws std::invalid_argument unless the algebra is graded by a node whose
  /// fundamental weight is the highest root.
  explicit GradedModule(GradedAlgebra g);

  const GradedAlgebra& algebra() const { return g_; }
  CaseId case_id() const;
  int node() const { return node_; }

  AlgebraElement v() const { return AlgebraElement::basis(v_index_); }
  AlgebraElement w() const { return AlgebraElement::basis(w_index_); }
  std::size_t v_index() const { return v_index_; }
  std::size_t w_index() const { return w_index_; }
  /// Spans the centre of g_0; equals [v, w] and acts on g_n by n.
  const AlgebraElement& z() const { return z_; }

  /// Module degree of a basis vector: 2 - (algebra grade).
  int degree(std::size_t i) const { return 2 - g_.grade(i); }
  AlgebraElement project(int n, const AlgebraElement& x) const;
  AlgebraElement project_2plus(const AlgebraElement& x) const;
  AlgebraElement project_2minus(const AlgebraElement& x) const;

  /// Basis of g_{-1} (the weight vectors X_mu) in algebra order.
  const std::vector<std::size_t>& lambda() const { return lambda_; }
  /// Simple-root indices of g'.
  const std::vector<int>& semisimple_nodes() const { return levi_nodes_; }
  /// Basis of g' = [g_0, g_0]: grade-0 root vectors and the coroots of g'.
  std::vector<AlgebraElement> semisimple_basis() const;
  /// Weight of e_b restricted to the Cartan of g': (<b, alpha_i^vee>) over g' nodes.
  std::vector<int> levi_weight(std::size_t i) const;

  /// Torus element with e_b -> prod_i t_i^{b_i} e_b (Cartan fixed).
  AlgebraElement torus_act(const AlgebraElement& x, const std::vector<Rational>& t) const;

 private:
  GradedAlgebra g_;
  int node_;
  std::size_t v_index_, w_index_;
  AlgebraElement z_;
  std::vector<std::size_t> lambda_;
  std::vector<int> levi_nodes_;
};

/// Structure of V as a g'-module: x -> [x, v] is an equivariant injection
/// g_{-1} -> V_1 = g_1, the image of X_{-alpha} is killed by the raising
/// operators of g', the centre of g_0 is one-dimensional and spanned by z,
/// and V_2^- has the dimension of g_{-2}.
CheckReport check_module_structure(const GradedModule& m);

/// g_i V_j lies in V_{j-i}. Exhaustive when samples == 0, otherwise that many
/// random basis pairs.
CheckReport check_module_grading(const GradedModule& m, std::size_t samples = 0, std::uint64_t seed = 1);

/// For a root vector v_mu of module degree at least 2, pi_1(u t v_mu) = 0 for
/// random u in exp(n^-) and random torus elements t.
CheckReport check_lower_borel_projection(const GradedModule& m, std::size_t basis_index, std::size_t samples,
                                         std::uint64_t seed);

/// Random element of the span of the given basis vectors.
AlgebraElement random_combination(const std::vector<std::size_t>& basis, RandomRationals& rng);

}  // namespace glie
