#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "glie/rational.hpp"

namespace glie {

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix over Q.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RationalVector row(std::size_t i) const;
  RationalMatrix transposed() const;
  RationalVector apply(const RationalVector& x) const;

  bool operator==(const RationalMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct EchelonForm {
  RationalMatrix reduced;            // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

EchelonForm row_reduce(RationalMatrix m);
std::size_t rank(const RationalMatrix& m);
std::size_t rank(const std::vector<RationalVector>& vectors);

/// Some x with m x = rhs, free variables set to zero; nullopt when inconsistent.
std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& rhs);

/// Basis of { x : m x = 0 }.
std::vector<RationalVector> kernel(const RationalMatrix& m);

Rational determinant(RationalMatrix m);

using IntegerMatrix = std::vector<std::vector<Integer>>;

/// Nonzero invariant factors d_1 | d_2 | ... of the integer matrix.
std::vector<Integer> smith_invariants(IntegerMatrix m);

/// True iff the rows span Z^n as a lattice (n = row length).
bool generates_full_lattice(const IntegerMatrix& rows, std::size_t n);

}  // namespace glie
