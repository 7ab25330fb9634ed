// SPDX-License-Identifier: Apache-2.0
#include "maskcorr/masking.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace maskcorr {

namespace {

const Complex kI(0.0, 1.0);

ComplexMatrix projector(const StateVector& v) {
  return matmul(v.amplitudes(), dagger(v.amplitudes()));
}

// Shared constructor for the two pair decoders; Eqs. on (A,S1,N1) and
// (A,S2,N2) have entrywise identical matrices.
ComplexMatrix build_pair_decoder() {
  ComplexMatrix sum(8, 8);
  for (int mu = 0; mu < 4; ++mu) {
    sum += alpha(mu) * tensor(pauli(mu), projector(phi_mu(mu)));
  }
  return sum;
}

std::size_t output_index_within_pair(Pair) {
  // A is first in the XY/XZ registers and S1 is first in the YZ register.
  return 0;
}

}  // namespace

const std::vector<std::size_t>& system_x() {
  static const std::vector<std::size_t> q{reg::kA};
  return q;
}

const std::vector<std::size_t>& system_y() {
  static const std::vector<std::size_t> q{reg::kS1, reg::kN1};
  return q;
}

const std::vector<std::size_t>& system_z() {
  static const std::vector<std::size_t> q{reg::kS2, reg::kN2};
  return q;
}

std::string_view pair_name(Pair pair) {
  switch (pair) {
    case Pair::XY: return "xy";
    case Pair::XZ: return "xz";
    case Pair::YZ: return "yz";
  }
  throw std::invalid_argument("pair_name: invalid pair");
}

Pair pair_from_name(std::string_view name) {
  if (name == "xy") return Pair::XY;
  if (name == "xz") return Pair::XZ;
  if (name == "yz") return Pair::YZ;
  throw std::invalid_argument("pair_from_name: expected xy, xz, or yz");
}

const std::vector<std::size_t>& pair_qubits(Pair pair) {
  static const std::vector<std::size_t> xy{reg::kA, reg::kS1, reg::kN1};
  static const std::vector<std::size_t> xz{reg::kA, reg::kS2, reg::kN2};
  static const std::vector<std::size_t> yz{reg::kS1, reg::kN1, reg::kS2, reg::kN2};
  switch (pair) {
    case Pair::XY: return xy;
    case Pair::XZ: return xz;
    case Pair::YZ: return yz;
  }
  throw std::invalid_argument("pair_qubits: invalid pair");
}

std::size_t output_qubit(Pair pair) {
  return pair == Pair::YZ ? reg::kS1 : reg::kA;
}

ComplexMatrix pauli(int mu) {
  switch (mu) {
    case 0: return ComplexMatrix::identity(2);
    case 1: return ComplexMatrix(2, 2, {0.0, 1.0, 1.0, 0.0});
    case 2: return ComplexMatrix(2, 2, {0.0, -kI, kI, 0.0});
    case 3: return ComplexMatrix(2, 2, {1.0, 0.0, 0.0, -1.0});
    default: throw std::invalid_argument("pauli: mu must be in {0,1,2,3}");
  }
}

Complex alpha(int mu) {
  if (mu < 0 || mu > 3) throw std::invalid_argument("alpha: mu must be in {0,1,2,3}");
  return mu == 0 ? Complex(1.0, 0.0) : kI;
}

Complex alpha_inv(int mu) { return std::conj(alpha(mu)); }

StateVector bell_phi() {
  const double r = 1.0 / std::sqrt(2.0);
  return StateVector(2, ComplexMatrix::column({r, 0.0, 0.0, r}));
}

StateVector phi_mu(int mu) {
  const ComplexMatrix op = tensor(pauli(mu), ComplexMatrix::identity(2));
  return StateVector(2, matmul(op, bell_phi().amplitudes()));
}

ComplexMatrix build_u_enc() {
  const ComplexMatrix id = ComplexMatrix::identity(2);
  ComplexMatrix sum(32, 32);
  for (int mu = 0; mu < 4; ++mu) {
    const ComplexMatrix s = pauli(mu);
    sum += alpha_inv(mu) * tensor(tensor(tensor(tensor(s, s), id), s), id);
  }
  sum *= Complex(0.5, 0.0);
  return sum;
}

ComplexMatrix build_u_dec_yz() {
  const ComplexMatrix id = ComplexMatrix::identity(2);
  ComplexMatrix sum(16, 16);
  for (int mu = 0; mu < 4; ++mu) {
    sum += alpha(mu) * tensor(tensor(projector(phi_mu(mu)), id), transpose(pauli(mu)));
  }
  return sum;
}

ComplexMatrix build_u_dec_xy() { return build_pair_decoder(); }

ComplexMatrix build_u_dec_xz() { return build_pair_decoder(); }

StateVector mask(const StateVector& psi) {
  if (psi.num_qubits() != 1) {
    throw std::invalid_argument("mask: input must be a single-qubit state");
  }
  static const ComplexMatrix u_enc = build_u_enc();
  const StateVector product = tensor(tensor(psi, bell_phi()), bell_phi());
  return apply_unitary(product, u_enc);
}

DecodeResult decode(Pair pair, const StateVector& state) {
  if (state.num_qubits() != reg::kNumQubits) {
    throw std::invalid_argument("decode: pure-state input must cover the full 5-qubit register");
  }
  return decode(pair, to_density(state));
}

DecodeResult decode(Pair pair, const DensityMatrix& state) {
  const std::vector<std::size_t>& qubits = pair_qubits(pair);
  const ComplexMatrix decoder =
      pair == Pair::YZ ? build_u_dec_yz() : (pair == Pair::XY ? build_u_dec_xy() : build_u_dec_xz());

  if (state.num_qubits() == reg::kNumQubits) {
    const ComplexMatrix full = embed(decoder, qubits, reg::kNumQubits);
    DensityMatrix post = apply_unitary(state, full);
    DensityMatrix recovered = partial_trace(post, {output_qubit(pair)});
    return DecodeResult{std::move(recovered), std::move(post)};
  }
  if (state.num_qubits() == qubits.size()) {
    DensityMatrix post = apply_unitary(state, decoder);
    DensityMatrix recovered = partial_trace(post, {output_index_within_pair(pair)});
    return DecodeResult{std::move(recovered), std::move(post)};
  }
  throw std::invalid_argument(
      "decode: state must cover the full register or exactly the pair's qubits (pair " +
      std::string(pair_name(pair)) + ")");
}

}  // namespace maskcorr
