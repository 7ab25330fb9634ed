// SPDX-License-Identifier: Apache-2.0
#include "maskcorr/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "maskcorr/io.hpp"

namespace maskcorr {

namespace {

std::string trial_line(std::size_t trial, const char* what, double value) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "trial %zu: %s=%s", trial, what,
                io::format_double(value).c_str());
  return buf;
}

VerificationReport make_report(std::string scenario, std::size_t trials, std::uint64_t seed,
                               double tol) {
  VerificationReport report;
  report.scenario = std::move(scenario);
  report.trials = trials;
  report.seed = seed;
  report.tolerance = tol;
  return report;
}

void finish(VerificationReport& report, double max_deviation) {
  report.max_deviation = max_deviation;
  report.pass = max_deviation <= report.tolerance;
}

std::array<DensityMatrix, 3> reduced_systems(const StateVector& gamma) {
  const DensityMatrix rho = to_density(gamma);
  return {partial_trace(rho, system_x()), partial_trace(rho, system_y()),
          partial_trace(rho, system_z())};
}

// XY decode on the full state, then a YZ decode attempt on what is left.
std::pair<DensityMatrix, double> decode_xy_then_yz(const StateVector& psi) {
  const DecodeResult first = decode(Pair::XY, mask(psi));
  const DecodeResult second = decode(Pair::YZ, first.post_global);
  return {second.recovered, fidelity_pure(psi, second.recovered)};
}

}  // namespace

VerificationReport verify_masking(std::size_t trials, double tol, std::uint64_t seed) {
  if (trials < 2) throw std::invalid_argument("verify_masking: needs at least 2 trials");
  VerificationReport report = make_report("masking", trials, seed, tol);
  Rng rng(seed);

  const std::array<DensityMatrix, 3> baseline = reduced_systems(mask(StateVector::basis(1, 0)));
  double worst = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const StateVector psi = t == 0 ? StateVector::basis(1, 0) : haar_random_qubit(rng);
    const std::array<DensityMatrix, 3> reduced = reduced_systems(mask(psi));
    double dev = 0.0;
    for (int s = 0; s < 3; ++s) {
      dev = std::max(dev, max_abs_diff(reduced[s].matrix(), baseline[s].matrix()));
    }
    worst = std::max(worst, dev);
    report.details.push_back(trial_line(t, "deviation", dev));
  }
  finish(report, worst);
  return report;
}

VerificationReport verify_recovery(Pair pair, std::size_t trials, double tol, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("verify_recovery: needs at least 1 trial");
  VerificationReport report =
      make_report("recovery-" + std::string(pair_name(pair)), trials, seed, tol);
  Rng rng(seed);

  double worst = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const StateVector psi = haar_random_qubit(rng);
    const StateVector gamma = mask(psi);

    const double fid_pure = fidelity_pure(psi, decode(pair, gamma).recovered);
    const DensityMatrix rho_pair = partial_trace(to_density(gamma), pair_qubits(pair));
    const double fid_reduced = fidelity_pure(psi, decode(pair, rho_pair).recovered);

    const double dev = std::max(1.0 - fid_pure, 1.0 - fid_reduced);
    worst = std::max(worst, dev);
    report.details.push_back(trial_line(t, "infidelity", dev));
  }
  finish(report, worst);
  return report;
}

VerificationReport verify_exclusivity(std::size_t trials, double tol, std::uint64_t seed) {
  if (trials < 2) throw std::invalid_argument("verify_exclusivity: needs at least 2 trials");
  VerificationReport report = make_report("exclusivity", trials, seed, tol);
  Rng rng(seed);

  const auto [baseline, baseline_fid] = decode_xy_then_yz(StateVector::basis(1, 0));
  double worst = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const StateVector psi = t == 0 ? StateVector::basis(1, 0) : haar_random_qubit(rng);
    const auto [recovered, fid] = decode_xy_then_yz(psi);
    const double dev = max_abs_diff(recovered.matrix(), baseline.matrix());
    worst = std::max(worst, dev);
    char buf[128];
    std::snprintf(buf, sizeof buf, "trial %zu: deviation=%s yz_fidelity=%s", t,
                  io::format_double(dev).c_str(), io::format_double(fid).c_str());
    report.details.push_back(buf);
  }
  finish(report, worst);
  return report;
}

VerificationReport verify_dispatch(std::optional<MeasurementBasis> basis, std::size_t trials,
                                   double tol, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("verify_dispatch: needs at least 1 trial");
  VerificationReport report = make_report("dispatch", trials, seed, tol);
  Rng rng(seed);

  double worst = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const StateVector psi = haar_random_qubit(rng);
    const MeasurementBasis b = basis ? *basis : random_basis(rng);
    const DensityMatrix dispatched = measure_discard(to_density(mask(psi)), reg::kA, b);

    const double fid_yz = fidelity_pure(psi, decode(Pair::YZ, dispatched).recovered);
    // Diagnostic only: what an XY decode yields once X has been measured out.
    const double fid_xy = fidelity_pure(psi, decode(Pair::XY, dispatched).recovered);

    worst = std::max(worst, 1.0 - fid_yz);
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "trial %zu: theta=%.6f phi=%.6f yz_infidelity=%s xy_fidelity_diag=%s", t,
                  b.theta, b.phi, io::format_double(1.0 - fid_yz).c_str(),
                  io::format_double(fid_xy).c_str());
    report.details.push_back(buf);
  }
  finish(report, worst);
  return report;
}

VerificationReport verify_no_signaling(std::size_t trials, double tol, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("verify_no_signaling: needs at least 1 trial");
  VerificationReport report = make_report("nosignal", trials, seed, tol);
  Rng rng(seed);

  std::vector<std::size_t> yz = system_y();
  yz.insert(yz.end(), system_z().begin(), system_z().end());

  double worst = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const StateVector psi = haar_random_qubit(rng);
    const DensityMatrix rho = to_density(mask(psi));

    std::vector<DensityMatrix> remote;
    remote.push_back(partial_trace(rho, yz));
    remote.push_back(partial_trace(measure_discard(rho, reg::kA, random_basis(rng)), yz));
    remote.push_back(partial_trace(measure_discard(rho, reg::kA, random_basis(rng)), yz));
    remote.push_back(partial_trace(
        apply_unitary(rho, embed(random_bloch_unitary(rng), {reg::kA}, reg::kNumQubits)), yz));
    remote.push_back(partial_trace(
        apply_unitary(rho, embed(random_bloch_unitary(rng), {reg::kA}, reg::kNumQubits)), yz));

    double dev = 0.0;
    std::size_t comparisons = 0;
    for (std::size_t i = 0; i < remote.size(); ++i) {
      for (std::size_t j = i + 1; j < remote.size(); ++j) {
        dev = std::max(dev, max_abs_diff(remote[i].matrix(), remote[j].matrix()));
        ++comparisons;
      }
    }
    worst = std::max(worst, dev);
    char buf[128];
    std::snprintf(buf, sizeof buf, "trial %zu: actions=%zu comparisons=%zu deviation=%s", t,
                  remote.size(), comparisons, io::format_double(dev).c_str());
    report.details.push_back(buf);
  }
  finish(report, worst);
  return report;
}

TeleportationRecord teleportation_demo(const StateVector& psi) {
  if (psi.num_qubits() != 1) {
    throw std::invalid_argument("teleportation_demo: input must be a single-qubit state");
  }
  // Register (A, S, N): Alice holds A and S, Bob holds N.
  const StateVector init = tensor(psi, bell_phi());
  const ComplexMatrix rho = matmul(init.amplitudes(), dagger(init.amplitudes()));

  ComplexMatrix averaged(2, 2);
  std::array<double, 4> fidelities{};
  double average_fid = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    const StateVector bell = phi_mu(mu);
    const ComplexMatrix proj =
        embed(matmul(bell.amplitudes(), dagger(bell.amplitudes())), {0, 1}, 3);
    const ComplexMatrix post = matmul(matmul(proj, rho), proj);
    const double prob = post.trace().real();

    ComplexMatrix bob = partial_trace_matrix(post, 3, {2});  // trace = prob
    averaged += bob;
    bob *= Complex(1.0 / prob, 0.0);
    const ComplexMatrix corrected = matmul(matmul(pauli(mu), bob), pauli(mu));
    fidelities[mu] = fidelity_pure(psi, DensityMatrix(1, corrected));
    average_fid += prob * fidelities[mu];
  }
  return TeleportationRecord{DensityMatrix(1, std::move(averaged)), fidelities, average_fid};
}

VerificationReport verify_teleportation(std::size_t trials, double tol, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("verify_teleportation: needs at least 1 trial");
  VerificationReport report = make_report("teleport", trials, seed, tol);
  Rng rng(seed);

  ComplexMatrix half_identity = ComplexMatrix::identity(2);
  half_identity *= Complex(0.5, 0.0);

  double worst = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const StateVector psi = haar_random_qubit(rng);
    const TeleportationRecord record = teleportation_demo(psi);
    double dev = max_abs_diff(record.pre_correction_bob.matrix(), half_identity);
    for (double f : record.per_outcome_fidelity) dev = std::max(dev, 1.0 - f);
    dev = std::max(dev, std::abs(1.0 - record.average_post_fidelity));
    worst = std::max(worst, dev);
    report.details.push_back(trial_line(t, "deviation", dev));
  }
  finish(report, worst);
  return report;
}

const std::vector<std::string>& all_scenarios() {
  static const std::vector<std::string> names{"masking",     "recovery-xy", "recovery-xz",
                                              "recovery-yz", "exclusivity", "dispatch",
                                              "nosignal",    "teleport"};
  return names;
}

VerificationReport run_scenario(const std::string& name, const ScenarioConfig& config) {
  // The recovery scenarios share one sub-seed: identical trial sets across
  // pairs certify that all three correlations carry the state simultaneously.
  const bool is_recovery = name.rfind("recovery-", 0) == 0;
  const std::uint64_t sub_seed = Rng::derive_seed(config.seed, is_recovery ? "recovery" : name);

  if (name == "masking") return verify_masking(config.trials, config.tol, sub_seed);
  if (name == "recovery-xy") return verify_recovery(Pair::XY, config.trials, config.tol, sub_seed);
  if (name == "recovery-xz") return verify_recovery(Pair::XZ, config.trials, config.tol, sub_seed);
  if (name == "recovery-yz") return verify_recovery(Pair::YZ, config.trials, config.tol, sub_seed);
  if (name == "exclusivity") return verify_exclusivity(config.trials, config.tol, sub_seed);
  if (name == "dispatch")
    return verify_dispatch(std::nullopt, config.trials, config.tol, sub_seed);
  if (name == "nosignal") return verify_no_signaling(config.trials, config.tol, sub_seed);
  if (name == "teleport") return verify_teleportation(config.trials, config.tol, sub_seed);
  throw std::invalid_argument("run_scenario: unknown scenario " + name);
}

std::vector<VerificationReport> run_all(const ScenarioConfig& config) {
  std::vector<VerificationReport> reports;
  reports.reserve(all_scenarios().size());
  for (const std::string& name : all_scenarios()) {
    try {
      reports.push_back(run_scenario(name, config));
    } catch (const std::exception& e) {
      VerificationReport failed = make_report(name, config.trials,
                                              Rng::derive_seed(config.seed, name), config.tol);
      failed.max_deviation = std::numeric_limits<double>::quiet_NaN();
      failed.pass = false;
      failed.error = e.what();
      reports.push_back(std::move(failed));
    }
  }
  return reports;
}

bool all_pass(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const VerificationReport& r) { return r.pass; });
}

namespace {

std::string escape_json(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

}  // namespace

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
  std::ostringstream out;
  out << "[\n";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const VerificationReport& r = reports[i];
    out << "  {\n";
    out << "    \"scenario\": \"" << escape_json(r.scenario) << "\",\n";
    out << "    \"trials\": " << r.trials << ",\n";
    out << "    \"seed\": " << r.seed << ",\n";
    out << "    \"tolerance\": " << io::format_double(r.tolerance) << ",\n";
    out << "    \"max_deviation\": "
        << (std::isfinite(r.max_deviation) ? io::format_double(r.max_deviation) : "null") << ",\n";
    out << "    \"pass\": " << (r.pass ? "true" : "false");
    if (!r.error.empty()) {
      out << ",\n    \"error\": \"" << escape_json(r.error) << "\"";
    }
    out << "\n  }" << (i + 1 < reports.size() ? "," : "") << "\n";
  }
  out << "]";
  return out.str();
}

std::vector<VerificationReport> reports_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("invalid report JSON: ") + e.what());
  }
  if (!doc.is_array()) throw std::invalid_argument("report JSON must be an array");
  std::vector<VerificationReport> reports;
  reports.reserve(doc.size());
  for (const nlohmann::json& item : doc) {
    VerificationReport r;
    r.scenario = item.at("scenario").get<std::string>();
    r.trials = item.at("trials").get<std::size_t>();
    r.seed = item.at("seed").get<std::uint64_t>();
    r.tolerance = item.at("tolerance").get<double>();
    const nlohmann::json& dev = item.at("max_deviation");
    r.max_deviation = dev.is_null() ? std::numeric_limits<double>::quiet_NaN() : dev.get<double>();
    r.pass = item.at("pass").get<bool>();
    if (item.contains("error")) r.error = item["error"].get<std::string>();
    reports.push_back(std::move(r));
  }
  return reports;
}

std::string reports_to_text(const std::vector<VerificationReport>& reports) {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const VerificationReport& r : reports) {
    char buf[256];
    if (r.error.empty()) {
      std::snprintf(buf, sizeof buf, "[%s] %-12s trials=%zu seed=%llu tol=%.3e max_dev=%.3e",
                    r.pass ? "PASS" : "FAIL", r.scenario.c_str(), r.trials,
                    static_cast<unsigned long long>(r.seed), r.tolerance, r.max_deviation);
    } else {
      std::snprintf(buf, sizeof buf, "[%s] %-12s trials=%zu seed=%llu tol=%.3e error: %s",
                    r.pass ? "PASS" : "FAIL", r.scenario.c_str(), r.trials,
                    static_cast<unsigned long long>(r.seed), r.tolerance, r.error.c_str());
    }
    out << buf << "\n";
    if (r.pass) ++passed;
  }
  out << passed << "/" << reports.size() << " scenarios passed\n";
  return out.str();
}

}  // namespace maskcorr
