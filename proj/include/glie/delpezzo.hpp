#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "glie/linalg.hpp"
#include "glie/report.hpp"
#include "glie/rootsys.hpp"

namespace glie {

// Picard lattices of the del Pezzo surfaces X (degree 1) and X' (degree 2)
// attached to the E8 grading by alpha_8. Everything here is lattice
// arithmetic; no curves are constructed.

/// k K_X + q on the degree 1 surface, q in Q(E8) in simple-root coordinates.
/// The form is K^2 = 1, K orthogonal to Q(E8), and minus the root form on Q(E8).
struct Dp1Class {
  int k = 0;
  Root q;
  bool operator==(const Dp1Class&) const = default;
};

/// A character (lambda, n) of T' = H' . G_m: lambda in P(E7) in
/// fundamental-weight coordinates and n the weight of the scalar torus,
/// which acts on g_j by t^(j+2). Characters satisfy lambda = n mod Q(E7).
struct Dp2Class {
  std::vector<int> lambda;
  int n = 0;
  bool operator==(const Dp2Class&) const = default;
  auto operator<=>(const Dp2Class&) const = default;
};

class Dp1Lattice {
 public:
  Dp1Lattice();

  const RootSystem& e8() const { return e8_; }

  int pairing(const Dp1Class& a, const Dp1Class& b) const;
  /// (c . -K_X)
  int degree(const Dp1Class& c) const { return pairing(c, anticanonical()); }
  Dp1Class canonical() const { return {1, zero()}; }
  Dp1Class anticanonical() const { return {-1, zero()}; }
  Dp1Class line(const Root& beta) const { return {-1, beta}; }
  /// The curve contracted by X -> X'. Its label is -theta, see blowdown_dictionary().
  Dp1Class exceptional() const { return line(-e8_.highest_root()); }

  Dp1Class add(const Dp1Class& a, const Dp1Class& b) const;
  Dp1Class scaled(const Dp1Class& a, int s) const;

  nlohmann::json to_json(const Dp1Class& c) const;

 private:
  Root zero() const { return Root{std::vector<int>(8, 0)}; }
  RootSystem e8_;
};

/// The character lattice of T', with basis alpha_1..alpha_7 (in degree 0)
/// followed by (omega_7, 1), and the pairing n n'/2 - (lambda, lambda').
class CharacterLattice {
 public:
  CharacterLattice();

  const RootSystem& e7() const { return e7_; }

  const std::vector<Dp2Class>& basis() const { return basis_; }
  Dp2Class chi0() const { return {std::vector<int>(7, 0), 2}; }
  bool contains(const Dp2Class& c) const;
  /// Coordinates in basis(); throws std::invalid_argument outside the lattice.
  std::vector<Integer> coordinates(const Dp2Class& c) const;

  Rational pairing(const Dp2Class& a, const Dp2Class& b) const;
  int degree(const Dp2Class& c) const { return c.n; }

  Dp2Class add(const Dp2Class& a, const Dp2Class& b) const;
  Dp2Class scaled(const Dp2Class& a, int s) const;
  /// Weight of the root vector e_beta of E8 under T'.
  Dp2Class weight_of(const RootSystem& e8, const Root& beta) const;

  // The two exact sequences as integer matrices in the standard bases:
  //   0 -> Q(E7) -> T' -> Z -> 0  and  0 -> Z chi0 -> T' -> P(E7) -> 0.
  IntegerMatrix root_inclusion() const;      // 8 x 7
  IntegerMatrix scalar_degree() const;       // 1 x 8
  IntegerMatrix chi0_inclusion() const;      // 8 x 1
  IntegerMatrix weight_restriction() const;  // 7 x 8

  IntegerMatrix gram() const;

  nlohmann::json to_json(const Dp2Class& c) const;

 private:
  RootSystem e7_;
  std::vector<Dp2Class> basis_;
};

struct Dp1Line {
  Root root;
  Dp1Class cls;
};

struct Dp2Line {
  Root root;  // the root of g_{-1} whose weight is cls
  Dp2Class cls;
};

struct ConicClass {
  Root root;  // root of g' with weight cls
  Dp2Class cls;
  /// Pairs of line indices (into dp2_lines()) with cls = l_i + l_j, (l_i . l_j) = 1.
  std::vector<std::pair<std::size_t, std::size_t>> splittings;
};

std::vector<Dp1Line> dp1_lines(const Dp1Lattice& lat);
std::vector<Dp2Line> dp2_lines(const Dp1Lattice& lat, const CharacterLattice& tl);
std::vector<ConicClass> dp2_conics(const Dp1Lattice& lat, const CharacterLattice& tl);
inline Dp2Class dp2_anticanonical(const CharacterLattice& tl) { return tl.chi0(); }

/// sigma^*: Pic X' -> Pic X, landing in the orthogonal complement of the
/// exceptional curve.
Dp1Class pullback(const Dp1Lattice& lat, const CharacterLattice& tl, const Dp2Class& c);

/// One weight coordinate of the adjoint module V = g, V_d = g_{2-d}.
/// The coordinate on e_beta is labelled by mu = -beta (the weight of the
/// coordinate function); its zero set is sigma^{-1} of a curve of degree d on
/// X' with class `dp2`, passing through the blown-up point with multiplicity
/// `multiplicity`, and the strict transform is the line l_mu on X.
struct DictionaryEntry {
  Root coordinate;
  int degree = 0;
  Root label;
  Dp1Class dp1;
  Dp2Class dp2;
  int multiplicity = 0;
  std::string kind;
};

std::vector<DictionaryEntry> blowdown_dictionary(const Dp1Lattice& lat, const CharacterLattice& tl);

nlohmann::json dictionary_json(const Dp1Lattice& lat, const CharacterLattice& tl,
                               const std::vector<DictionaryEntry>& dict);

/// Histogram of (l_beta . l_gamma) over all ordered pairs, diagonal included.
std::map<int, std::size_t> dp1_intersection_histogram(const Dp1Lattice& lat);

CheckReport check_dp1_lines(const Dp1Lattice& lat);
CheckReport check_dp2_lines(const Dp1Lattice& lat, const CharacterLattice& tl);
CheckReport check_blowdown_dictionary(const Dp1Lattice& lat, const CharacterLattice& tl);
CheckReport type_map_check(const Dp1Lattice& lat, const CharacterLattice& tl);

/// The strict transform C of the preimage of a non-bitangent tangent line
/// through the blown-up point: [C] + 2E = sigma^*(-K_X'). Reports (C . -K_X).
CheckReport tangent_line_degree_check(const Dp1Lattice& lat, const CharacterLattice& tl);

/// Weyl group action on Q(E8) by a word of simple reflections (0-based).
Root weyl_apply(const RootSystem& rs, const std::vector<int>& word, const Root& r);
/// A word w with w(beta) = theta, found by raising along simple reflections.
std::vector<int> word_to_highest(const RootSystem& rs, const Root& beta);

/// Random Weyl words preserve the dP1 intersection matrix, and words
/// carrying a random line to another one are graph automorphisms.
CheckReport weyl_transitivity_check(const Dp1Lattice& lat, std::size_t samples, std::uint64_t seed);

/// GraphViz rendering; an edge joins i < j when the intersection is at least min_intersection.
std::string intersection_graph_dot(const std::string& name, const std::vector<std::string>& labels,
                                   const std::vector<std::vector<int>>& intersections, int min_intersection);

std::string root_label(const Root& r);

}  // namespace glie
