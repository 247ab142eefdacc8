#include "glie/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace glie {

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows, std::size_t cols) {
  RationalMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("from_rows: ragged input");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RationalVector RationalMatrix::row(std::size_t i) const {
  return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                        data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RationalVector RationalMatrix::apply(const RationalVector& x) const {
  if (x.size() != cols_) throw std::invalid_argument("apply: dimension mismatch");
  RationalVector y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (sgn((*this)(i, j)) != 0 && sgn(x[j]) != 0) y[i] += (*this)(i, j) * x[j];
  return y;
}

EchelonForm row_reduce(RationalMatrix m) {
  EchelonForm out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (sgn(m(r, j)) != 0) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const RationalMatrix& m0) {
  // integer elimination on primitive rows; dividing each updated row by its
  // content keeps entry growth in check
  const std::size_t cols = m0.cols();
  std::vector<std::vector<Integer>> rows;
  for (std::size_t i = 0; i < m0.rows(); ++i) {
    Integer den = 1;
    for (std::size_t j = 0; j < cols; ++j) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m0(i, j).get_den_mpz_t());
    std::vector<Integer> row(cols);
    bool nonzero = false;
    for (std::size_t j = 0; j < cols; ++j) {
      row[j] = m0(i, j).get_num() * (den / m0(i, j).get_den());
      nonzero = nonzero || row[j] != 0;
    }
    if (nonzero) rows.push_back(std::move(row));
  }
  auto make_primitive = [&](std::vector<Integer>& row, std::size_t from) {
    Integer g = 0;
    for (std::size_t j = from; j < cols; ++j)
      if (row[j] != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row[j].get_mpz_t());
    if (g > 1)
      for (std::size_t j = from; j < cols; ++j) mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), g.get_mpz_t());
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    // pick the nonzero entry with the fewest digits as pivot
    std::size_t p = rows.size();
    for (std::size_t i = r; i < rows.size(); ++i)
      if (rows[i][c] != 0 && (p == rows.size() || mpz_sizeinbase(rows[i][c].get_mpz_t(), 2) < mpz_sizeinbase(rows[p][c].get_mpz_t(), 2)))
        p = i;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const std::vector<Integer>& piv = rows[r];
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      Integer g;
      mpz_gcd(g.get_mpz_t(), piv[c].get_mpz_t(), rows[i][c].get_mpz_t());
      const Integer a = piv[c] / g, b = rows[i][c] / g;
      for (std::size_t j = c; j < cols; ++j) rows[i][j] = a * rows[i][j] - b * piv[j];
      make_primitive(rows[i], c + 1);
    }
    ++r;
  }
  return r;
}

std::size_t rank(const std::vector<RationalVector>& vectors) {
  if (vectors.empty()) return 0;
  return rank(RationalMatrix::from_rows(vectors, vectors.front().size()));
}

std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("solve: dimension mismatch");
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = rhs[i];
  }
  const EchelonForm e = row_reduce(std::move(aug));
  RationalVector x(m.cols());
  for (std::size_t k = 0; k < e.pivots.size(); ++k) {
    if (e.pivots[k] == m.cols()) return std::nullopt;
    x[e.pivots[k]] = e.reduced(k, m.cols());
  }
  return x;
}

std::vector<RationalVector> kernel(const RationalMatrix& m) {
  const EchelonForm e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(m.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.reduced(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational determinant(RationalMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: non-square matrix");
  Rational det = 1;
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(m(i, c)) == 0) continue;
      const Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

std::vector<Integer> smith_invariants(IntegerMatrix m) {
  std::vector<Integer> diag;
  if (m.empty()) return diag;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // smallest nonzero entry of the trailing block becomes the pivot
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (sgn(m[i][j]) != 0 && (pi == rows || abs(m[i][j]) < abs(m[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi == rows) break;
    std::swap(m[t], m[pi]);
    for (auto& row : m) std::swap(row[t], row[pj]);

    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i) {
      if (sgn(m[i][t]) == 0) continue;
      const Integer q = m[i][t] / m[t][t];
      for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
      if (sgn(m[i][t]) != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      if (sgn(m[t][j]) == 0) continue;
      const Integer q = m[t][j] / m[t][t];
      for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
      if (sgn(m[t][j]) != 0) clean = false;
    }
    if (!clean) continue;
    // divisibility of the remaining block by the pivot
    bool divides = true;
    for (std::size_t i = t + 1; i < rows && divides; ++i)
      for (std::size_t j = t + 1; j < cols; ++j)
        if (!mpz_divisible_p(m[i][j].get_mpz_t(), m[t][t].get_mpz_t())) {
          for (std::size_t jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
          divides = false;
          break;
        }
    if (!divides) continue;
    diag.push_back(abs(m[t][t]));
    ++t;
  }
  return diag;
}

bool generates_full_lattice(const IntegerMatrix& rows, std::size_t n) {
  if (rows.empty()) return n == 0;
  const auto inv = smith_invariants(rows);
  if (inv.size() != n) return false;
  for (const auto& d : inv)
    if (d != 1) return false;
  return true;
}

}  // namespace glie
