#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "apolar/errors.hpp"
#include "apolar/field.hpp"

namespace apolar {

/// Dense row-major matrix over K.
template <class K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, field_traits<K>::zero()) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field_traits<K>::one();
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<K>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < m.rows_; ++i) {
      if (rows[i].size() != m.cols_) throw DimensionError("ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  K& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const K& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<K> row(std::size_t i) const {
    return std::vector<K>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  std::vector<K> col(std::size_t j) const {
    std::vector<K> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (field_traits<K>::is_zero(a(i, k))) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
      }
    return r;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<K> data_;
};

/// Reduced row-echelon form with the pivot columns, in increasing order.
template <class K>
struct Echelon {
  Matrix<K> reduced;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination over an exact field. Columns are scanned left
/// to right and the first row with a nonzero entry is used as pivot, so the
/// result is the unique RREF.
template <class K>
Echelon<K> rref(Matrix<K> m) {
  using T = field_traits<K>;
  static_assert(T::exact, "rref needs exact arithmetic");
  Echelon<K> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && T::is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const K inv = T::inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || T::is_zero(m(i, c))) continue;
      const K factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= factor * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

template <class K>
std::size_t rank(const Matrix<K>& m) {
  if constexpr (field_traits<K>::exact) {
    return rref(m).pivots.size();
  } else {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Eigen::MatrixXcd a(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) a(i, j) = m(i, j);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
    const auto& s = svd.singularValues();
    const double tol = 1e-8 * (s.size() ? s(0) : 0.0);
    std::size_t r = 0;
    for (Eigen::Index k = 0; k < s.size(); ++k)
      if (s(k) > tol) ++r;
    return r;
  }
}

/// Canonical kernel basis of an exact matrix: one vector per free column,
/// equal to 1 in that column and 0 in the other free columns.
template <class K>
std::vector<std::vector<K>> kernel(const Matrix<K>& m) {
  using T = field_traits<K>;
  const Echelon<K> e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<K>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<K> v(m.cols(), T::zero());
    v[f] = T::one();
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solves m x = b exactly; nullopt when inconsistent. Free variables are 0.
template <class K>
std::optional<std::vector<K>> solve(const Matrix<K>& m, const std::vector<K>& b) {
  using T = field_traits<K>;
  if (b.size() != m.rows()) throw DimensionError("solve: right-hand side has wrong length");
  Matrix<K> aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const Echelon<K> e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  std::vector<K> x(m.cols(), T::zero());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
  return x;
}

/// Exact inverse; throws DomainError when singular.
template <class K>
Matrix<K> inverse(const Matrix<K>& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<K> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = field_traits<K>::one();
  }
  const Echelon<K> e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw DomainError("matrix is singular");
  Matrix<K> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

inline Eigen::MatrixXcd to_eigen(const Matrix<ComplexF>& m) {
  Eigen::MatrixXcd a(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a(i, j) = m(i, j);
  return a;
}

/// Singular values, largest first.
inline std::vector<double> singular_values(const Matrix<ComplexF>& m) {
  if (m.rows() == 0 || m.cols() == 0) return {};
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m));
  const auto& s = svd.singularValues();
  return std::vector<double>(s.data(), s.data() + s.size());
}

/// Right null space by singular-value thresholding: directions whose singular
/// value is at most rel_tol * sigma_1 (columns beyond the row count included).
inline std::vector<std::vector<ComplexF>> numeric_kernel(const Matrix<ComplexF>& m,
                                                         double rel_tol = 1e-8) {
  std::vector<std::vector<ComplexF>> basis;
  if (m.cols() == 0) return basis;
  if (m.rows() == 0) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::vector<ComplexF> v(m.cols());
      v[j] = 1.0;
      basis.push_back(v);
    }
    return basis;
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m), Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double tol = rel_tol * s(0);
  const auto& v = svd.matrixV();
  for (Eigen::Index k = 0; k < v.cols(); ++k) {
    if (k < s.size() && s(k) > tol) continue;
    std::vector<ComplexF> col(m.cols());
    for (std::size_t i = 0; i < m.cols(); ++i) col[i] = v(static_cast<Eigen::Index>(i), k);
    basis.push_back(std::move(col));
  }
  return basis;
}

}  // namespace apolar
