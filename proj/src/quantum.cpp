// SPDX-License-Identifier: Apache-2.0
#include "maskcorr/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace maskcorr {

namespace {

constexpr double kStateNormTol = 1e-10;
constexpr double kDensityTol = 1e-10;
constexpr double kUnitaryTol = 1e-10;
constexpr int kPositivityProbes = 64;

void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

std::size_t pow2(std::size_t n) { return std::size_t{1} << n; }

// Probe directions are fixed per dimension so that density validation is
// deterministic and independent of caller RNG streams.
const std::vector<ComplexMatrix>& positivity_probes(std::size_t dim) {
  static std::mutex mutex;
  static std::unordered_map<std::size_t, std::vector<ComplexMatrix>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(dim);
  if (it != cache.end()) return it->second;

  Rng rng(Rng::derive_seed(0x6d61736b636f7272ULL, "positivity-probe"));
  std::vector<ComplexMatrix> probes;
  probes.reserve(kPositivityProbes);
  for (int p = 0; p < kPositivityProbes; ++p) {
    std::vector<Complex> v(dim);
    double norm_sq = 0.0;
    do {
      norm_sq = 0.0;
      for (std::size_t i = 0; i < dim; ++i) {
        v[i] = Complex(rng.normal(), rng.normal());
        norm_sq += std::norm(v[i]);
      }
    } while (norm_sq < 1e-12);
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (Complex& z : v) z *= inv;
    probes.push_back(ComplexMatrix::column(std::move(v)));
  }
  return cache.emplace(dim, std::move(probes)).first->second;
}

// Scatters the bits of sub (one per listed qubit, most significant first)
// into a full-register index.
std::size_t place_bits(std::size_t sub, const std::vector<std::size_t>& qubits,
                       std::size_t num_qubits) {
  std::size_t index = 0;
  const std::size_t k = qubits.size();
  for (std::size_t m = 0; m < k; ++m) {
    const std::size_t bit = (sub >> (k - 1 - m)) & std::size_t{1};
    index |= bit << (num_qubits - 1 - qubits[m]);
  }
  return index;
}

std::vector<std::size_t> complement_of(const std::vector<std::size_t>& qubits,
                                       std::size_t num_qubits) {
  std::vector<std::size_t> rest;
  rest.reserve(num_qubits - qubits.size());
  for (std::size_t q = 0; q < num_qubits; ++q) {
    if (std::find(qubits.begin(), qubits.end(), q) == qubits.end()) rest.push_back(q);
  }
  return rest;
}

void check_qubit_list(const std::vector<std::size_t>& qubits, std::size_t num_qubits,
                      const char* who) {
  for (std::size_t q : qubits) {
    if (q >= num_qubits) throw std::invalid_argument(std::string(who) + ": qubit index out of range");
  }
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    for (std::size_t j = i + 1; j < qubits.size(); ++j) {
      if (qubits[i] == qubits[j]) {
        throw std::invalid_argument(std::string(who) + ": duplicate qubit index");
      }
    }
  }
}

}  // namespace

StateVector::StateVector(std::size_t num_qubits, ComplexMatrix amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
  require(amplitudes_.column_vector(), "StateVector: amplitudes must be a column vector");
  require(amplitudes_.rows() == pow2(num_qubits_), "StateVector: dimension must be 2^num_qubits");
  require(std::abs(amplitudes_.norm() - 1.0) <= kStateNormTol,
          "StateVector: amplitudes must have unit norm");
}

StateVector StateVector::basis(std::size_t num_qubits, std::size_t index) {
  require(index < pow2(num_qubits), "StateVector::basis: index out of range");
  ComplexMatrix v(pow2(num_qubits), 1);
  v.at(index, 0) = Complex(1.0, 0.0);
  return StateVector(num_qubits, std::move(v));
}

StateVector StateVector::renormalized(std::size_t num_qubits, std::vector<Complex> amplitudes,
                                      double max_norm_error) {
  ComplexMatrix v = ComplexMatrix::column(std::move(amplitudes));
  const double norm = v.norm();
  require(std::abs(norm - 1.0) <= max_norm_error,
          "StateVector::renormalized: norm too far from 1");
  v *= Complex(1.0 / norm, 0.0);
  return StateVector(num_qubits, std::move(v));
}

DensityMatrix::DensityMatrix(std::size_t num_qubits, ComplexMatrix matrix)
    : num_qubits_(num_qubits), matrix_(std::move(matrix)) {
  require(matrix_.square(), "DensityMatrix: matrix must be square");
  require(matrix_.rows() == pow2(num_qubits_), "DensityMatrix: dimension must be 2^num_qubits");
  double herm = 0.0;
  for (std::size_t i = 0; i < matrix_.rows(); ++i) {
    for (std::size_t j = i; j < matrix_.cols(); ++j) {
      herm = std::max(herm, std::abs(matrix_.at(i, j) - std::conj(matrix_.at(j, i))));
    }
  }
  require(herm <= kDensityTol, "DensityMatrix: matrix must be Hermitian");
  require(std::abs(matrix_.trace() - Complex(1.0, 0.0)) <= kDensityTol,
          "DensityMatrix: trace must be 1");
  for (const ComplexMatrix& v : positivity_probes(matrix_.rows())) {
    const Complex q = matmul(dagger(v), matmul(matrix_, v)).at(0, 0);
    require(q.real() >= -kDensityTol, "DensityMatrix: failed positivity probe");
  }
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t num_qubits) {
  ComplexMatrix m = ComplexMatrix::identity(pow2(num_qubits));
  m *= Complex(1.0 / static_cast<double>(pow2(num_qubits)), 0.0);
  return DensityMatrix(num_qubits, std::move(m));
}

ComplexMatrix MeasurementBasis::b0() const {
  return ComplexMatrix::column(
      {Complex(std::cos(theta / 2.0), 0.0), std::polar(std::sin(theta / 2.0), phi)});
}

ComplexMatrix MeasurementBasis::b1() const {
  return ComplexMatrix::column(
      {Complex(std::sin(theta / 2.0), 0.0), -std::polar(std::cos(theta / 2.0), phi)});
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  return StateVector(a.num_qubits() + b.num_qubits(), tensor(a.amplitudes(), b.amplitudes()));
}

DensityMatrix to_density(const StateVector& psi) {
  return DensityMatrix(psi.num_qubits(), matmul(psi.amplitudes(), dagger(psi.amplitudes())));
}

ComplexMatrix partial_trace_matrix(const ComplexMatrix& m, std::size_t num_qubits,
                                   std::vector<std::size_t> keep) {
  require(m.square() && m.rows() == pow2(num_qubits),
          "partial_trace: matrix dimension must be 2^num_qubits");
  check_qubit_list(keep, num_qubits, "partial_trace");
  std::sort(keep.begin(), keep.end());
  const std::vector<std::size_t> traced = complement_of(keep, num_qubits);

  const std::size_t kept_dim = pow2(keep.size());
  const std::size_t traced_dim = pow2(traced.size());
  ComplexMatrix out(kept_dim, kept_dim);
  for (std::size_t i = 0; i < kept_dim; ++i) {
    const std::size_t row_base = place_bits(i, keep, num_qubits);
    for (std::size_t j = 0; j < kept_dim; ++j) {
      const std::size_t col_base = place_bits(j, keep, num_qubits);
      Complex sum(0.0, 0.0);
      for (std::size_t s = 0; s < traced_dim; ++s) {
        const std::size_t rest = place_bits(s, traced, num_qubits);
        sum += m.at(row_base | rest, col_base | rest);
      }
      out.at(i, j) = sum;
    }
  }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::size_t>& keep) {
  return DensityMatrix(keep.size(), partial_trace_matrix(rho.matrix(), rho.num_qubits(), keep));
}

ComplexMatrix embed(const ComplexMatrix& u, const std::vector<std::size_t>& targets,
                    std::size_t num_qubits) {
  require(u.square(), "embed: operator must be square");
  require(targets.size() <= num_qubits, "embed: too many targets");
  require(u.rows() == pow2(targets.size()), "embed: operator dimension must be 2^|targets|");
  check_qubit_list(targets, num_qubits, "embed");
  const std::vector<std::size_t> rest_qubits = complement_of(targets, num_qubits);

  const std::size_t sub_dim = u.rows();
  const std::size_t rest_dim = pow2(rest_qubits.size());
  ComplexMatrix out(pow2(num_qubits), pow2(num_qubits));
  for (std::size_t i = 0; i < sub_dim; ++i) {
    const std::size_t row_base = place_bits(i, targets, num_qubits);
    for (std::size_t j = 0; j < sub_dim; ++j) {
      const Complex uij = u.at(i, j);
      if (uij == Complex(0.0, 0.0)) continue;
      const std::size_t col_base = place_bits(j, targets, num_qubits);
      for (std::size_t r = 0; r < rest_dim; ++r) {
        const std::size_t rest = place_bits(r, rest_qubits, num_qubits);
        out.at(row_base | rest, col_base | rest) = uij;
      }
    }
  }
  return out;
}

StateVector apply_unitary(const StateVector& state, const ComplexMatrix& u_full) {
  require(u_full.square() && u_full.rows() == state.dim(),
          "apply_unitary: operator dimension must match state");
  require(is_unitary(u_full, kUnitaryTol), "apply_unitary: operator is not unitary");
  return StateVector(state.num_qubits(), matmul(u_full, state.amplitudes()));
}

DensityMatrix apply_unitary(const DensityMatrix& rho, const ComplexMatrix& u_full) {
  require(u_full.square() && u_full.rows() == rho.dim(),
          "apply_unitary: operator dimension must match state");
  require(is_unitary(u_full, kUnitaryTol), "apply_unitary: operator is not unitary");
  return DensityMatrix(rho.num_qubits(), matmul(matmul(u_full, rho.matrix()), dagger(u_full)));
}

double fidelity_pure(const StateVector& target, const DensityMatrix& rho) {
  require(target.dim() == rho.dim(), "fidelity_pure: dimension mismatch");
  const Complex f =
      matmul(dagger(target.amplitudes()), matmul(rho.matrix(), target.amplitudes())).at(0, 0);
  return std::clamp(f.real(), 0.0, 1.0);
}

DensityMatrix measure_discard(const DensityMatrix& rho, std::size_t qubit,
                              const MeasurementBasis& basis) {
  require(qubit < rho.num_qubits(), "measure_discard: qubit index out of range");
  ComplexMatrix sum(rho.dim(), rho.dim());
  for (const ComplexMatrix& b : {basis.b0(), basis.b1()}) {
    const ComplexMatrix proj = embed(matmul(b, dagger(b)), {qubit}, rho.num_qubits());
    sum += matmul(matmul(proj, rho.matrix()), proj);
  }
  return DensityMatrix(rho.num_qubits(), std::move(sum));
}

StateVector haar_random_qubit(Rng& rng) {
  while (true) {
    const Complex a(rng.normal(), rng.normal());
    const Complex b(rng.normal(), rng.normal());
    const double norm = std::sqrt(std::norm(a) + std::norm(b));
    if (norm < 1e-12) continue;
    return StateVector(1, ComplexMatrix::column({a / norm, b / norm}));
  }
}

MeasurementBasis random_basis(Rng& rng) {
  constexpr double kPi = 3.14159265358979323846;
  return MeasurementBasis{rng.uniform() * kPi, rng.uniform() * 2.0 * kPi};
}

ComplexMatrix random_bloch_unitary(Rng& rng) {
  constexpr double kPi = 3.14159265358979323846;
  const double theta = rng.uniform() * kPi;
  const double phi = rng.uniform() * 2.0 * kPi;
  const double lambda = rng.uniform() * 2.0 * kPi;
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  return ComplexMatrix(2, 2,
                       {Complex(c, 0.0), -std::polar(s, lambda), std::polar(s, phi),
                        std::polar(c, phi + lambda)});
}

}  // namespace maskcorr
