// SPDX-License-Identifier: Apache-2.0
#include "maskcorr/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace maskcorr {

namespace {

void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Complex(0.0, 0.0)) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  require(entries_.size() == rows_ * cols_, "ComplexMatrix: entry count must be rows*cols");
  for (const Complex& z : entries_) {
    require(std::isfinite(z.real()) && std::isfinite(z.imag()),
            "ComplexMatrix: entries must be finite");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Complex(1.0, 0.0);
  return m;
}

ComplexMatrix ComplexMatrix::column(std::vector<Complex> entries) {
  const std::size_t n = entries.size();
  return ComplexMatrix(n, 1, std::move(entries));
}

Complex ComplexMatrix::trace() const {
  require(square(), "trace: matrix must be square");
  Complex sum(0.0, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) sum += at(i, i);
  return sum;
}

double ComplexMatrix::norm() const {
  double sum = 0.0;
  for (const Complex& z : entries_) sum += std::norm(z);
  return std::sqrt(sum);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require(rows_ == other.rows_ && cols_ == other.cols_, "operator+=: dimension mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require(rows_ == other.rows_ && cols_ == other.cols_, "operator-=: dimension mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (Complex& z : entries_) z *= scale;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex scale, ComplexMatrix a) { return a *= scale; }
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return matmul(a, b); }

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  require(a.rows() > 0 && a.cols() > 0 && b.rows() > 0 && b.cols() > 0,
          "tensor: operands must be nonempty");
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a.at(i, j);
      if (aij == Complex(0.0, 0.0)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out.at(i * b.rows() + k, j * b.cols() + l) = aij * b.at(k, l);
        }
      }
    }
  }
  return out;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  require(a.cols() == b.rows(), "matmul: a.cols must equal b.rows");
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a.at(i, k);
      if (aik == Complex(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out.at(i, j) += aik * b.at(k, j);
      }
    }
  }
  return out;
}

ComplexMatrix dagger(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out.at(j, i) = std::conj(a.at(i, j));
    }
  }
  return out;
}

ComplexMatrix transpose(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out.at(j, i) = a.at(i, j);
    }
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "max_abs_diff: dimension mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return worst;
}

bool is_unitary(const ComplexMatrix& u, double tol) {
  require(u.square(), "is_unitary: matrix must be square");
  const ComplexMatrix id = ComplexMatrix::identity(u.rows());
  const ComplexMatrix ud = dagger(u);
  return max_abs_diff(matmul(u, ud), id) <= tol && max_abs_diff(matmul(ud, u), id) <= tol;
}

}  // namespace maskcorr
