// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "maskcorr/quantum.hpp"

namespace maskcorr::io {

/// Scientific notation with 17 significant digits; round-trips exactly.
std::string format_double(double x);

// State files: {"num_qubits": n, "amplitudes": [[re,im], ...]} in basis-index
// order. Density files carry "matrix" with row-major [[re,im], ...] instead.
// Square 2^n operators reuse the density layout.
std::string state_to_json(const StateVector& psi);
StateVector state_from_json(const std::string& text);

std::string density_to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const std::string& text);

std::string operator_to_json(const ComplexMatrix& m);
ComplexMatrix operator_from_json(const std::string& text);

/// Raw parse of a state file, before any normalization policy is applied.
std::pair<std::size_t, std::vector<Complex>> state_amplitudes_from_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace maskcorr::io
