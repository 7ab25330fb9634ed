// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "maskcorr/linalg.hpp"
#include "maskcorr/rng.hpp"

namespace maskcorr {

// Bit convention for the whole project: qubit 0 is the most significant bit
// of a computational-basis index, so register order reads left to right in
// tensor products. This is the single place the convention lives.
inline std::size_t qubit_bit(std::size_t index, std::size_t qubit, std::size_t num_qubits) {
  return (index >> (num_qubits - 1 - qubit)) & std::size_t{1};
}

/// Normalized pure state over an ordered qubit register.
class StateVector {
 public:
  /// Throws std::invalid_argument unless amplitudes is a 2^num_qubits column
  /// vector with Euclidean norm within 1e-10 of 1.
  StateVector(std::size_t num_qubits, ComplexMatrix amplitudes);

  /// Computational basis state |index>.
  static StateVector basis(std::size_t num_qubits, std::size_t index);

  /// Accepts |norm - 1| <= max_norm_error and rescales to exact unit norm.
  static StateVector renormalized(std::size_t num_qubits, std::vector<Complex> amplitudes,
                                  double max_norm_error);

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return amplitudes_.rows(); }
  const ComplexMatrix& amplitudes() const { return amplitudes_; }
  Complex amplitude(std::size_t index) const { return amplitudes_.at(index, 0); }

 private:
  std::size_t num_qubits_;
  ComplexMatrix amplitudes_;
};

/// Hermitian, unit-trace operator over a qubit register. Construction checks
/// Hermiticity and trace within 1e-10 and probes positivity with 64 seeded
/// random vectors (<v|rho|v> >= -1e-10 for each).
class DensityMatrix {
 public:
  DensityMatrix(std::size_t num_qubits, ComplexMatrix matrix);

  static DensityMatrix maximally_mixed(std::size_t num_qubits);

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  std::size_t num_qubits_;
  ComplexMatrix matrix_;
};

/// Projective measurement basis parameterized by Bloch angles:
/// |b0> = cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>, |b1> orthogonal to it.
struct MeasurementBasis {
  double theta = 0.0;
  double phi = 0.0;

  ComplexMatrix b0() const;
  ComplexMatrix b1() const;
};

StateVector tensor(const StateVector& a, const StateVector& b);

DensityMatrix to_density(const StateVector& psi);

/// Partial trace on a raw 2^n x 2^n matrix; building block for DensityMatrix
/// flows that pass through unnormalized intermediates.
ComplexMatrix partial_trace_matrix(const ComplexMatrix& m, std::size_t num_qubits,
                                   std::vector<std::size_t> keep);

/// Reduced state on the kept qubits, in their original register order. An
/// empty keep set returns the 1x1 scalar trace. Throws on out-of-range or
/// duplicate indices.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::size_t>& keep);

/// Expands u (square, dim 2^|targets|) to the full 2^n register: acts as u on
/// the target qubits in the given order and as identity elsewhere.
ComplexMatrix embed(const ComplexMatrix& u, const std::vector<std::size_t>& targets,
                    std::size_t num_qubits);

/// U|psi> / U rho U^dagger. Rejects dimension mismatches and operators that
/// fail is_unitary(u, 1e-10).
StateVector apply_unitary(const StateVector& state, const ComplexMatrix& u_full);
DensityMatrix apply_unitary(const DensityMatrix& rho, const ComplexMatrix& u_full);

/// <target|rho|target>, clamped to [0,1].
double fidelity_pure(const StateVector& target, const DensityMatrix& rho);

/// Non-selective projective measurement of one qubit: rho -> P0 rho P0 + P1 rho P1.
DensityMatrix measure_discard(const DensityMatrix& rho, std::size_t qubit,
                              const MeasurementBasis& basis);

/// Single-qubit state from a normalized pair of independent complex standard
/// Gaussians; deterministic for a fixed stream.
StateVector haar_random_qubit(Rng& rng);

MeasurementBasis random_basis(Rng& rng);

/// Random single-qubit unitary from Bloch-angle draws (theta, phi, lambda).
ComplexMatrix random_bloch_unitary(Rng& rng);

}  // namespace maskcorr
