#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "glie/rational.hpp"
#include "json.hpp"

namespace glie {

enum class CartanType { A, B, C, D, E, F, G };

char type_letter(CartanType t);
CartanType parse_type_letter(char c);

/// A root in the simple-root basis (integer coordinates).
struct Root {
  std::vector<int> coords;

  int height() const;
  bool is_positive() const;
  Root operator-() const;
  Root operator+(const Root& o) const;
  Root operator-(const Root& o) const;
  Root scaled(int k) const;
  bool is_zero() const;

  auto operator<=>(const Root&) const = default;
};

/// A weight in the fundamental-weight basis (rational coordinates).
struct Weight {
  std::vector<Rational> coords;
  bool operator==(const Weight&) const = default;
};

/// Root system of a split simple Lie algebra with Bourbaki node numbering.
///
/// Bourbaki numbering (1-based in the docs, 0-based in the API):
///   A_n: chain 1-2-...-n
///   B_n: chain 1-...-n, alpha_n short
///   C_n: chain 1-...-n, alpha_n long, all others short
///   D_n: chain 1-...-(n-2), with n-1 and n both attached to n-2
///   E_n: chain 1-3-4-...-n, with 2 attached to 4
///   F_4: chain 1-2=>3-4, alpha_1, alpha_2 long
///   G_2: alpha_1 short, alpha_2 long
///
/// The invariant form is normalized so long roots have (b, b) = 2.
/// roots() lists the positive roots by height, ties broken by descending
/// lexicographic coordinates (so alpha_1 precedes alpha_2),
/// followed by their negatives in the same order.
class RootSystem {
 public:
  static RootSystem build(CartanType type, int rank);

  CartanType type() const { return type_; }
  int rank() const { return rank_; }
  std::string name() const;

  const std::vector<Root>& roots() const { return roots_; }
  std::size_t num_positive() const { return num_positive_; }
  Root simple_root(int i) const;
  Root highest_root() const;

  std::optional<std::size_t> index_of(const Root& r) const;
  bool is_root(const Root& r) const { return index_of(r).has_value(); }

  /// (alpha_i, alpha_j) for simple roots.
  const std::vector<std::vector<Rational>>& gram() const { return gram_; }
  /// <alpha_i, alpha_j^vee>, integer.
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }

  Rational inner(const Root& a, const Root& b) const;
  /// <a, b^vee> = 2 (a, b) / (b, b), always an integer for roots.
  int coroot_pairing(const Root& a, const Root& b) const;
  bool is_long(const Root& r) const;

  /// Coefficients of b^vee in the basis of simple coroots.
  std::vector<int> coroot_coords(const Root& b) const;

  Weight to_weight(const Root& r) const;
  Weight fundamental_weight(int i) const;
  /// Inner product on P(R) tensor Q.
  Rational pairing(const Weight& x, const Weight& y) const;
  /// <x, b^vee> for a weight x and a root b.
  Rational coroot_pairing(const Weight& x, const Root& b) const;
  /// Expresses a weight in the simple-root basis (rational coordinates).
  std::vector<Rational> weight_in_root_basis(const Weight& x) const;

  Root reflect(const Root& r, const Root& s) const;
  Weight reflect(const Weight& x, const Root& s) const;

  nlohmann::json to_json() const;

 private:
  RootSystem() = default;
  void generate_roots();

  CartanType type_ = CartanType::A;
  int rank_ = 0;
  std::vector<Rational> lengths_;               // (alpha_i, alpha_i)
  std::vector<std::vector<Rational>> gram_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<Rational>> inverse_cartan_;  // omega_i = sum_j inv[i][j] alpha_j
  std::vector<Root> roots_;
  std::size_t num_positive_ = 0;
  std::map<std::vector<int>, std::size_t> index_;
};

}  // namespace glie
