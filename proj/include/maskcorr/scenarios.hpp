// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "maskcorr/masking.hpp"

namespace maskcorr {

/// Outcome record of one scenario run. pass <=> max_deviation <= tolerance.
struct VerificationReport {
  std::string scenario;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  double max_deviation = 0.0;
  bool pass = false;
  std::vector<std::string> details;  // per-trial records; not serialized
  std::string error;                 // nonempty when the scenario could not run
};

/// Reduced states of X, Y, Z are compared against the psi = |0> baseline
/// trial over Haar-random inputs. Requires trials >= 2.
VerificationReport verify_masking(std::size_t trials, double tol, std::uint64_t seed);

/// Decode fidelity for one pair, from both the pure 5-qubit state and the
/// reduced pair density. Requires trials >= 1.
VerificationReport verify_recovery(Pair pair, std::size_t trials, double tol, std::uint64_t seed);

/// After an XY decode, the YZ-recovered state must be independent of psi;
/// the YZ fidelity to psi is recorded per trial but not asserted.
/// Requires trials >= 2 (the check compares across trials).
VerificationReport verify_exclusivity(std::size_t trials, double tol, std::uint64_t seed);

/// Measure-and-discard on qubit A, then YZ decode; fidelity per trial.
/// With no fixed basis, a fresh random basis is drawn every trial. The
/// XY-decode fidelity after the measurement is recorded as a diagnostic.
VerificationReport verify_dispatch(std::optional<MeasurementBasis> basis, std::size_t trials,
                                   double tol, std::uint64_t seed);

/// rho_YZ must be invariant across a battery of local actions on X
/// (identity, measure-and-discard in random bases, random unitaries).
VerificationReport verify_no_signaling(std::size_t trials, double tol, std::uint64_t seed);

/// Standard teleportation over one Bell pair, for contrast: Bell measurement
/// on (A,S), conditional Pauli correction on N.
struct TeleportationRecord {
  DensityMatrix pre_correction_bob;           // outcome-averaged, uncorrected
  std::array<double, 4> per_outcome_fidelity; // after the matching correction
  double average_post_fidelity;
};
TeleportationRecord teleportation_demo(const StateVector& psi);

/// Report wrapper: pre-correction Bob state = I/2 and corrected fidelity = 1,
/// over random psi.
VerificationReport verify_teleportation(std::size_t trials, double tol, std::uint64_t seed);

struct ScenarioConfig {
  std::size_t trials = 100;
  double tol = 1e-10;
  std::uint64_t seed = 42;
};

/// Run order of run_all. The three recovery scenarios share one derived
/// sub-seed so they see identical trial sets.
const std::vector<std::string>& all_scenarios();

VerificationReport run_scenario(const std::string& name, const ScenarioConfig& config);

/// Runs every scenario with derived sub-seeds; a scenario that throws is
/// reported as failed instead of aborting the suite.
std::vector<VerificationReport> run_all(const ScenarioConfig& config);

bool all_pass(const std::vector<VerificationReport>& reports);

/// JSON array of {scenario, trials, seed, tolerance, max_deviation, pass}
/// (plus "error" for scenarios that could not run); byte-stable for fixed
/// inputs. Reports that could not run serialize max_deviation as null.
std::string reports_to_json(const std::vector<VerificationReport>& reports);
std::vector<VerificationReport> reports_from_json(const std::string& text);

/// Terminal renderer, one line per scenario plus a summary.
std::string reports_to_text(const std::vector<VerificationReport>& reports);

}  // namespace maskcorr
