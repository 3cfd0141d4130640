#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kacmult/cache.hpp"
#include "kacmult/json_io.hpp"

namespace kacmult {

enum class CheckStatus { pass, fail, falsification_candidate };

std::string to_string(CheckStatus s);

struct VerificationCheck {
  int id = 0;
  std::string name;
  /// The claim or worked example the check reproduces.
  std::string anchor;
  CheckStatus status = CheckStatus::pass;
  json expected;
  json actual;
  std::string detail;
  double seconds = 0.0;
  std::optional<double> time_limit;
};

struct VerificationReport {
  std::vector<VerificationCheck> checks;

  bool all_passed() const;
  /// 0 when everything passes, 1 on any failure, otherwise 3 when a
  /// falsification candidate was seen.
  int exit_code() const;
  /// Timings are omitted unless asked for, so reports of equal runs compare equal.
  json to_json(bool with_timing = false) const;
  /// One line per check.
  std::string summary_lines() const;
};

struct VerifyOptions {
  Limits limits;
  const MatrixCache* cache = nullptr;
  std::uint64_t seed = 20240611;
  int samples_per_algebra = 100;
  /// Harness self-test: add one to k_1 of every atypical sample before the
  /// lambda(1,...,1) = mu0 + 2 rho_1 comparison.
  bool inject_k_fault = false;
  /// Criterion ids to run; empty means all.
  std::vector<int> only;
};

/// The random dominant samples of the identity suites: `per_algebra` weights
/// each for gl(2|2), gl(3|2), gl(2|3), gl(3|3), coordinates in [-5, 5].
std::vector<Weight> identity_samples(std::uint64_t seed, int per_algebra);

struct CriterionOutcome {
  CheckStatus status = CheckStatus::pass;
  json expected;
  json actual;
  std::string detail;
};

struct Criterion {
  int id = 0;
  std::string name;
  std::string anchor;
  std::optional<double> time_limit;
  std::function<CriterionOutcome(const VerifyOptions&)> run;
};

/// The ten acceptance criteria, in order.
const std::vector<Criterion>& acceptance_criteria();

/// Runs the selected criteria. A criterion that exceeds its time limit fails;
/// ConjectureFalsified becomes a falsification candidate; any other exception
/// a failure.
VerificationReport run_verification(const VerifyOptions& options = {});

}  // namespace kacmult
