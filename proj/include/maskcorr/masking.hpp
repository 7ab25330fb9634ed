// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string_view>
#include <vector>

#include "maskcorr/quantum.hpp"

namespace maskcorr {

// Fixed register layout: (A, S1, N1, S2, N2) = qubits (0,1,2,3,4), grouped
// into systems X = {A}, Y = {S1,N1}, Z = {S2,N2}.
namespace reg {
inline constexpr std::size_t kA = 0;
inline constexpr std::size_t kS1 = 1;
inline constexpr std::size_t kN1 = 2;
inline constexpr std::size_t kS2 = 3;
inline constexpr std::size_t kN2 = 4;
inline constexpr std::size_t kNumQubits = 5;
}  // namespace reg

const std::vector<std::size_t>& system_x();
const std::vector<std::size_t>& system_y();
const std::vector<std::size_t>& system_z();

/// The two-system combinations the scheme can decode from.
enum class Pair { XY, XZ, YZ };

std::string_view pair_name(Pair pair);
Pair pair_from_name(std::string_view name);  // "xy" | "xz" | "yz"

/// Register qubits the pair's decoder acts on: XY -> (A,S1,N1),
/// XZ -> (A,S2,N2), YZ -> (S1,N1,S2,N2).
const std::vector<std::size_t>& pair_qubits(Pair pair);

/// Full-register qubit the masked state reappears on: A for XY/XZ, S1 for YZ.
std::size_t output_qubit(Pair pair);

/// sigma_0 = I, sigma_1..3 = Pauli x, y, z with sigma_y = [[0,-i],[i,0]].
ComplexMatrix pauli(int mu);

/// alpha_0 = 1, alpha_1 = alpha_2 = alpha_3 = i.
Complex alpha(int mu);
Complex alpha_inv(int mu);

/// (|00> + |11>)/sqrt(2).
StateVector bell_phi();

/// (sigma_mu x I)|phi>; the four of them are an orthonormal two-qubit basis.
StateVector phi_mu(int mu);

/// 32x32 encoder (1/2) sum_mu alpha_mu^{-1} sigma_mu x sigma_mu x I x sigma_mu x I
/// on register order (A, S1, N1, S2, N2).
ComplexMatrix build_u_enc();

/// 16x16 decoder on (S1, N1, S2, N2):
/// sum_mu alpha_mu |phi_mu><phi_mu| x I x transpose(sigma_mu).
ComplexMatrix build_u_dec_yz();

/// 8x8 decoder on (A, S1, N1): sum_mu alpha_mu sigma_mu x |phi_mu><phi_mu|.
ComplexMatrix build_u_dec_xy();

/// 8x8 decoder on (A, S2, N2); entrywise identical to build_u_dec_xy().
ComplexMatrix build_u_dec_xz();

/// Encodes a single-qubit state into the 5-qubit register:
/// U_enc (|psi> x |phi> x |phi>). Classical bits are the |0>/|1> special case.
StateVector mask(const StateVector& psi);

struct DecodeResult {
  DensityMatrix recovered;    // one-qubit state on the pair's output qubit
  DensityMatrix post_global;  // full post-decode state on the input's register
};

/// Applies the pair's decoder and reduces to the output qubit. Accepts the
/// full 5-qubit state, or (density overload) the reduced state on exactly the
/// pair's qubits.
DecodeResult decode(Pair pair, const StateVector& state);
DecodeResult decode(Pair pair, const DensityMatrix& state);

}  // namespace maskcorr
