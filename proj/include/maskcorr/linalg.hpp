// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace maskcorr {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Column vectors are the cols == 1 case;
/// norms and products are defined uniformly for both.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  /// Zero matrix of the given shape.
  ComplexMatrix(std::size_t rows, std::size_t cols);

  /// Takes ownership of row-major entries. Throws std::invalid_argument if
  /// the entry count is not rows*cols or any entry is non-finite.
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix column(std::vector<Complex> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  bool column_vector() const { return cols_ == 1; }

  Complex& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  Complex at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  const std::vector<Complex>& entries() const { return entries_; }

  Complex trace() const;

  /// Frobenius norm; the Euclidean norm when this is a column vector.
  double norm() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scale, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product; dimensions multiply.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// Standard matrix product. Throws std::invalid_argument unless a.cols == b.rows.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

/// Conjugate transpose.
ComplexMatrix dagger(const ComplexMatrix& a);

/// Entrywise transpose in the computational basis, no conjugation.
ComplexMatrix transpose(const ComplexMatrix& a);

/// Max over entries of |a - b|; 0 iff exactly equal. Dims must match.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// True iff u*dagger(u) and dagger(u)*u are both within tol of the identity.
/// Throws std::invalid_argument for non-square input.
bool is_unitary(const ComplexMatrix& u, double tol);

}  // namespace maskcorr
