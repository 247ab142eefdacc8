#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "glie/rational.hpp"
#include "glie/rootsys.hpp"
#include "json.hpp"

namespace glie {

/// Sparse exact coordinate vector in a Chevalley basis. Zero coefficients are
/// never stored.
class AlgebraElement {
 public:
  using Map = std::map<std::size_t, Rational>;

  AlgebraElement() = default;
  static AlgebraElement basis(std::size_t i, const Rational& c = 1);

  Rational coefficient(std::size_t i) const;
  void add(std::size_t i, const Rational& c);
  bool is_zero() const { return coords_.empty(); }
  std::size_t support_size() const { return coords_.size(); }
  Map::const_iterator begin() const { return coords_.begin(); }
  Map::const_iterator end() const { return coords_.end(); }

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const Rational& c);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const Rational& c, AlgebraElement a) { return a *= c; }
  friend AlgebraElement operator*(AlgebraElement a, const Rational& c) { return a *= c; }
  AlgebraElement operator-() const { return Rational(-1) * *this; }

  bool operator==(const AlgebraElement&) const = default;

 private:
  Map coords_;
};

/// Extraspecial-pair sign rule. Both give valid Chevalley bases; Alternate
/// flips the sign on every extraspecial pair whose sum has even height.
enum class SignConvention { Standard, Alternate };

/// A (type, rank, marked node) triple; node is 0-based.
struct CaseId {
  CartanType type = CartanType::A;
  int rank = 1;
  int node = 0;

  std::string to_string() const;  // e.g. "E8:a8"
  static CaseId parse(const std::string& s);
  auto operator<=>(const CaseId&) const = default;
};

class LinearOperator;

/// Split simple Lie algebra in a Chevalley basis, optionally Z-graded by the
/// coefficient of a marked simple root.
///
/// Basis order: root vectors e_b in RootSystem::roots() order, then the simple
/// coroots h_1..h_r.
class GradedAlgebra {
 public:
  struct Term {
    std::size_t index;
    int coeff;
  };

  /// Ungraded algebra with integer structure constants.
  static GradedAlgebra build(const RootSystem& rs, SignConvention sc = SignConvention::Standard);
  /// Same algebra graded by the simple root with 0-based index node.
  GradedAlgebra graded_by(int node) const;

  const RootSystem& root_system() const { return data_->roots; }
  SignConvention sign_convention() const { return data_->convention; }
  std::size_t dim() const { return data_->dim; }
  std::size_t num_roots() const { return data_->roots.roots().size(); }
  std::optional<int> marked_node() const { return marked_; }

  bool is_cartan(std::size_t i) const { return i >= num_roots(); }
  const Root& root_of(std::size_t i) const { return data_->roots.roots().at(i); }
  std::size_t index_of(const Root& r) const;
  std::size_t cartan_index(int i) const { return num_roots() + static_cast<std::size_t>(i); }
  std::string basis_label(std::size_t i) const;

  /// N_{a,b} with [e_a, e_b] = N_{a,b} e_{a+b}; zero when a+b is not a root.
  int structure_constant(const Root& a, const Root& b) const;

  const std::vector<Term>& bracket_basis(std::size_t i, std::size_t j) const {
    return data_->table[i * data_->dim + j];
  }
  AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) const;

  int grade(std::size_t i) const;
  std::vector<std::size_t> basis_of_grade(int n) const;
  /// grade -> dimension
  std::map<int, std::size_t> grade_dimensions() const;
  /// Component of x in grade n.
  AlgebraElement component(const AlgebraElement& x, int n) const;
  bool is_homogeneous(const AlgebraElement& x, int n) const;

  /// Cartan element h with [h, e_b] = (coefficient of the marked root in b) e_b.
  AlgebraElement grading_element() const;

  LinearOperator ad(const AlgebraElement& x) const;
  /// sum_n ad(x)^n y / n!; throws if ad(x) is not nilpotent on y within dim steps.
  AlgebraElement exp_apply(const AlgebraElement& x, const AlgebraElement& y) const;
  LinearOperator exp_nilpotent(const AlgebraElement& x) const;
  /// The torus element acting on the grade-n piece by t^n.
  AlgebraElement grade_scale(const AlgebraElement& x, const Rational& t) const;

  nlohmann::json to_json() const;

 private:
  struct Data {
    RootSystem roots;
    SignConvention convention;
    std::size_t dim;
    std::map<std::pair<std::size_t, std::size_t>, int> positive_constants;
    std::vector<std::vector<Term>> table;
  };

  explicit GradedAlgebra(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;
  std::optional<int> marked_;
};

/// Linear operator on the algebra, stored column by column.
class LinearOperator {
 public:
  explicit LinearOperator(std::vector<AlgebraElement> columns) : columns_(std::move(columns)) {}
  static LinearOperator identity(std::size_t dim);

  std::size_t dim() const { return columns_.size(); }
  const AlgebraElement& column(std::size_t j) const { return columns_.at(j); }
  AlgebraElement apply(const AlgebraElement& x) const;
  LinearOperator compose(const LinearOperator& rhs) const;  // this * rhs
  bool operator==(const LinearOperator&) const = default;

 private:
  std::vector<AlgebraElement> columns_;
};

/// Nodes whose grading has exactly five nonzero pieces, for all supported
/// types up to max_rank for the classical series.
std::vector<CaseId> classify_grading_length_5(int max_rank = 8);

/// Nodes for which the highest root equals the fundamental weight of the node.
std::vector<CaseId> classify_adjoint_fundamental(int max_rank = 8);

bool is_adjoint_fundamental(const RootSystem& rs, int node);

/// {basis label: coefficient} for reports.
nlohmann::json element_json(const GradedAlgebra& g, const AlgebraElement& x);

/// Every (type, rank) pair enumerated by the classifiers.
std::vector<std::pair<CartanType, int>> enumerate_simple_types(int max_rank);

}  // namespace glie
