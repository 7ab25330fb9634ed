// SPDX-License-Identifier: Apache-2.0
#include "maskcorr/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace maskcorr::io {

namespace {

using nlohmann::json;

std::string pairs_to_json(const std::vector<Complex>& values, const char* key,
                          std::size_t num_qubits) {
  std::ostringstream out;
  out << "{\n  \"num_qubits\": " << num_qubits << ",\n  \"" << key << "\": [\n";
  for (std::size_t i = 0; i < values.size(); ++i) {
    out << "    [" << format_double(values[i].real()) << ", " << format_double(values[i].imag())
        << "]" << (i + 1 < values.size() ? "," : "") << "\n";
  }
  out << "  ]\n}\n";
  return out.str();
}

std::pair<std::size_t, std::vector<Complex>> pairs_from_json(const std::string& text,
                                                             const char* key) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("num_qubits") || !doc.contains(key)) {
    throw std::invalid_argument(std::string("expected object with num_qubits and ") + key);
  }
  if (!doc["num_qubits"].is_number_unsigned()) {
    throw std::invalid_argument("num_qubits must be a nonnegative integer");
  }
  const std::size_t num_qubits = doc["num_qubits"].get<std::size_t>();
  const json& arr = doc[key];
  if (!arr.is_array()) throw std::invalid_argument(std::string(key) + " must be an array");
  std::vector<Complex> values;
  values.reserve(arr.size());
  for (const json& entry : arr) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number()) {
      throw std::invalid_argument(std::string(key) + " entries must be [re, im] pairs");
    }
    values.emplace_back(entry[0].get<double>(), entry[1].get<double>());
  }
  return {num_qubits, std::move(values)};
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", x);
  return buf;
}

std::string state_to_json(const StateVector& psi) {
  return pairs_to_json(psi.amplitudes().entries(), "amplitudes", psi.num_qubits());
}

StateVector state_from_json(const std::string& text) {
  auto [num_qubits, amplitudes] = state_amplitudes_from_json(text);
  return StateVector(num_qubits, ComplexMatrix::column(std::move(amplitudes)));
}

std::pair<std::size_t, std::vector<Complex>> state_amplitudes_from_json(const std::string& text) {
  return pairs_from_json(text, "amplitudes");
}

std::string density_to_json(const DensityMatrix& rho) {
  return pairs_to_json(rho.matrix().entries(), "matrix", rho.num_qubits());
}

DensityMatrix density_from_json(const std::string& text) {
  auto [num_qubits, entries] = pairs_from_json(text, "matrix");
  const std::size_t dim = std::size_t{1} << num_qubits;
  if (entries.size() != dim * dim) {
    throw std::invalid_argument("matrix entry count must be 4^num_qubits");
  }
  return DensityMatrix(num_qubits, ComplexMatrix(dim, dim, std::move(entries)));
}

std::string operator_to_json(const ComplexMatrix& m) {
  if (!m.square()) throw std::invalid_argument("operator_to_json: matrix must be square");
  std::size_t num_qubits = 0;
  while ((std::size_t{1} << num_qubits) < m.rows()) ++num_qubits;
  if ((std::size_t{1} << num_qubits) != m.rows()) {
    throw std::invalid_argument("operator_to_json: dimension must be a power of 2");
  }
  return pairs_to_json(m.entries(), "matrix", num_qubits);
}

ComplexMatrix operator_from_json(const std::string& text) {
  auto [num_qubits, entries] = pairs_from_json(text, "matrix");
  const std::size_t dim = std::size_t{1} << num_qubits;
  if (entries.size() != dim * dim) {
    throw std::invalid_argument("matrix entry count must be 4^num_qubits");
  }
  return ComplexMatrix(dim, dim, std::move(entries));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open file for writing: " + path);
  out << contents;
  if (!out) throw std::runtime_error("failed writing file: " + path);
}

}  // namespace maskcorr::io
