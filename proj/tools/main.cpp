// SPDX-License-Identifier: Apache-2.0
//
// maskcorr CLI: run verification scenarios and scheme demos.
//
//   maskcorr verify --scenario all --trials 100 --tol 1e-10 --seed 42 --format text|json
//   maskcorr demo mask     --state 1,0,0,0 [--out gamma.json]
//   maskcorr demo decode   --pair xy|xz|yz --state ... | --state-file f
//   maskcorr demo dispatch --theta T --phi P --state ...
//   maskcorr demo teleport --state ...
//
// Exit codes: 0 = success / all scenarios pass, 1 = a scenario failed,
// 2 = usage error. MASKCORR_SEED overrides the default seed when --seed is
// absent.

#include <cctype>
#include <cstdio>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "maskcorr/io.hpp"
#include "maskcorr/masking.hpp"
#include "maskcorr/scenarios.hpp"

namespace {

using namespace maskcorr;

constexpr double kInlineNormTol = 1e-6;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<double> parse_reals(const std::string& text) {
  std::vector<double> values;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(token, &used);
    } catch (const std::exception&) {
      throw UsageError("malformed state value: '" + token + "'");
    }
    while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used]))) ++used;
    if (used != token.size()) throw UsageError("malformed state value: '" + token + "'");
    values.push_back(value);
  }
  return values;
}

StateVector load_input_state(const std::string& inline_state, const std::string& state_file) {
  if (!inline_state.empty() && !state_file.empty()) {
    throw UsageError("give either --state or --state-file, not both");
  }
  std::vector<Complex> amplitudes;
  if (!inline_state.empty()) {
    const std::vector<double> v = parse_reals(inline_state);
    if (v.size() != 4) throw UsageError("--state expects re0,im0,re1,im1");
    amplitudes = {Complex(v[0], v[1]), Complex(v[2], v[3])};
  } else if (!state_file.empty()) {
    const auto [num_qubits, amps] = io::state_amplitudes_from_json(io::read_file(state_file));
    if (num_qubits != 1) throw UsageError("--state-file must hold a single-qubit state");
    amplitudes = amps;
  } else {
    throw UsageError("a state is required (--state or --state-file)");
  }
  try {
    return StateVector::renormalized(1, std::move(amplitudes), kInlineNormTol);
  } catch (const std::invalid_argument&) {
    throw UsageError("state is not normalizable (norm must be within 1e-6 of 1)");
  }
}

void print_amplitudes(const StateVector& state) {
  for (std::size_t i = 0; i < state.dim(); ++i) {
    std::string bits;
    for (std::size_t q = 0; q < state.num_qubits(); ++q) {
      bits += qubit_bit(i, q, state.num_qubits()) ? '1' : '0';
    }
    const Complex a = state.amplitude(i);
    std::printf("  |%s>  % .16e  % .16e\n", bits.c_str(), a.real(), a.imag());
  }
}

void print_density(const DensityMatrix& rho) {
  for (std::size_t i = 0; i < rho.dim(); ++i) {
    std::string row = "  [";
    for (std::size_t j = 0; j < rho.dim(); ++j) {
      char buf[64];
      const Complex z = rho.matrix().at(i, j);
      std::snprintf(buf, sizeof buf, " %+.6f%+.6fi", z.real(), z.imag());
      row += buf;
    }
    row += " ]";
    std::puts(row.c_str());
  }
}

void write_out(const std::string& path, const std::string& contents) {
  if (!path.empty()) io::write_file(path, contents);
}

int run_verify(const std::string& scenario, const ScenarioConfig& config,
               const std::string& format) {
  std::vector<VerificationReport> reports;
  if (scenario == "all") {
    reports = run_all(config);
  } else {
    reports.push_back(run_scenario(scenario, config));
  }
  std::cout << (format == "json" ? reports_to_json(reports) + "\n" : reports_to_text(reports));
  return all_pass(reports) ? 0 : 1;
}

int run_demo_mask(const StateVector& psi, const std::string& out) {
  const StateVector gamma = mask(psi);
  std::puts("postencoding state on (A, S1, N1, S2, N2):");
  print_amplitudes(gamma);
  write_out(out, io::state_to_json(gamma));
  return 0;
}

int run_demo_decode(Pair pair, const StateVector& psi, const std::string& out) {
  const DecodeResult result = decode(pair, mask(psi));
  const double fid = fidelity_pure(psi, result.recovered);
  std::printf("pair %s: recovered on qubit %s\n", std::string(pair_name(pair)).c_str(),
              pair == Pair::YZ ? "S1" : "A");
  std::printf("fidelity = %.12f\n", fid);
  std::puts("recovered density:");
  print_density(result.recovered);
  write_out(out, io::density_to_json(result.recovered));
  return 0;
}

int run_demo_dispatch(const StateVector& psi, double theta, double phi, const std::string& out) {
  const MeasurementBasis basis{theta, phi};
  const DensityMatrix dispatched = measure_discard(to_density(mask(psi)), reg::kA, basis);
  const DecodeResult yz = decode(Pair::YZ, dispatched);
  const DecodeResult xy = decode(Pair::XY, dispatched);
  std::printf("measured A in basis theta=%.6f phi=%.6f, outcome discarded\n", theta, phi);
  std::printf("yz decode fidelity = %.12f\n", fidelity_pure(psi, yz.recovered));
  std::printf("xy decode fidelity (diagnostic) = %.12f\n", fidelity_pure(psi, xy.recovered));
  write_out(out, io::density_to_json(yz.recovered));
  return 0;
}

int run_demo_teleport(const StateVector& psi, const std::string& out) {
  const TeleportationRecord record = teleportation_demo(psi);
  std::puts("pre-correction Bob state (outcome-averaged):");
  print_density(record.pre_correction_bob);
  std::printf("per-outcome corrected fidelity = %.12f %.12f %.12f %.12f\n",
              record.per_outcome_fidelity[0], record.per_outcome_fidelity[1],
              record.per_outcome_fidelity[2], record.per_outcome_fidelity[3]);
  std::printf("average post-correction fidelity = %.12f\n", record.average_post_fidelity);
  write_out(out, io::density_to_json(record.pre_correction_bob));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"three-system quantum information masking: simulator and verifier"};
  app.require_subcommand(1);

  // verify
  std::string scenario = "all";
  std::string format = "text";
  ScenarioConfig config;
  CLI::App* verify = app.add_subcommand("verify", "run verification scenarios");
  verify->add_option("--scenario", scenario, "scenario to run")
      ->check(CLI::IsMember({"all", "masking", "recovery-xy", "recovery-xz", "recovery-yz",
                             "exclusivity", "dispatch", "nosignal"}));
  verify->add_option("--trials", config.trials, "trials per scenario")
      ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()));
  verify->add_option("--tol", config.tol, "pass tolerance")->check(CLI::PositiveNumber);
  verify->add_option("--seed", config.seed, "master seed")->envname("MASKCORR_SEED");
  verify->add_option("--format", format, "report format")->check(CLI::IsMember({"text", "json"}));

  // demo
  CLI::App* demo = app.add_subcommand("demo", "run scheme demonstrations");
  demo->require_subcommand(1);
  std::string inline_state, state_file, out_path, pair_text = "xy";
  double theta = 0.0, phi = 0.0;
  auto add_state_options = [&](CLI::App* sub) {
    sub->add_option("--state", inline_state, "inline amplitudes re0,im0,re1,im1");
    sub->add_option("--state-file", state_file, "single-qubit state JSON file");
    sub->add_option("--out", out_path, "write the resulting state/density JSON here");
  };
  CLI::App* demo_mask = demo->add_subcommand("mask", "encode a qubit into the 5-qubit register");
  add_state_options(demo_mask);
  CLI::App* demo_decode = demo->add_subcommand("decode", "mask, then decode from one pair");
  add_state_options(demo_decode);
  demo_decode->add_option("--pair", pair_text, "pair to decode from")
      ->check(CLI::IsMember({"xy", "xz", "yz"}));
  CLI::App* demo_dispatch =
      demo->add_subcommand("dispatch", "mask, measure A and discard, then decode from YZ");
  add_state_options(demo_dispatch);
  demo_dispatch->add_option("--theta", theta, "measurement basis polar angle (radians)");
  demo_dispatch->add_option("--phi", phi, "measurement basis azimuth (radians)");
  CLI::App* demo_teleport =
      demo->add_subcommand("teleport", "standard teleportation over one Bell pair, for contrast");
  add_state_options(demo_teleport);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) {
      return run_verify(scenario, config, format);
    }
    const StateVector psi = load_input_state(inline_state, state_file);
    if (demo_mask->parsed()) return run_demo_mask(psi, out_path);
    if (demo_decode->parsed()) return run_demo_decode(pair_from_name(pair_text), psi, out_path);
    if (demo_dispatch->parsed()) return run_demo_dispatch(psi, theta, phi, out_path);
    if (demo_teleport->parsed()) return run_demo_teleport(psi, out_path);
    std::cerr << "error: no subcommand selected\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
