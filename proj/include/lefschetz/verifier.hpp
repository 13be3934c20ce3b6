#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lefschetz/complete_intersection.hpp"
#include "lefschetz/gorenstein.hpp"
#include "lefschetz/hilbert_seq.hpp"

namespace lefschetz {

struct SweepConfig {
  int d_max = 8;
  int m_max = 3;
  int alpha_offset = 3;
  /// Restrict to reduced delta with empty B set and theta_Z - theta_G <= a1.
  bool enforce_normalization = true;

  /// Throws InvalidConfig.
  void validate() const;

  friend bool operator==(const SweepConfig&, const SweepConfig&) = default;
};

struct CheckResult {
  bool ok = true;
  /// Informational checks are recorded but never make a pair fail.
  bool required = true;
  std::optional<int> degree;  // first offending degree, when there is one

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

// Check names, as they appear in reports.
namespace check {
inline constexpr const char* kWls = "wls";
inline constexpr const char* kTauClaim = "tau_claim";
inline constexpr const char* kLowDegreeDomination = "low_degree_domination";
inline constexpr const char* kThetaLambdaGap = "theta_lambda_gap";
inline constexpr const char* kTauLowerBounds = "tau_lower_bounds";
inline constexpr const char* kSecondDiffSteep = "g_second_diff_le_minus_2";
inline constexpr const char* kSecondDiffDescending = "g_second_diff_le_minus_1";
inline constexpr const char* kMciDomination = "mci_delta_domination";
inline constexpr const char* kGorensteinShape = "g_difference_shape";
inline constexpr const char* kHzDominatesHg = "hz_dominates_hg";
}  // namespace check

struct PairVerdict {
  CiTriple alpha;
  DegreeSequence delta;
  /// Absent only when H_G exceeds H_Z somewhere (then no residual exists).
  std::optional<HilbertFunction> h_q;
  WlsVerdict wls;
  int tau = 0;
  bool claim_ok = false;
  bool normalized = false;
  std::map<std::string, CheckResult> checks;

  /// Every required check passed.
  bool passed() const;
  std::vector<std::string> failed_checks() const;

  friend bool operator==(const PairVerdict&, const PairVerdict&) = default;
};

struct SweepReport {
  SweepConfig config;
  std::int64_t deltas_enumerated = 0;
  std::int64_t pairs_checked = 0;
  std::vector<PairVerdict> failures;  // sorted by (delta, alpha)
  std::int64_t distinct_hq = 0;
  std::int64_t elapsed_ms = 0;
  /// Every verdict, sorted by (delta, alpha); filled only on request.
  std::vector<PairVerdict> verdicts;
};

/// Runs every numeric check on one (alpha, delta) pair. The tau claim and the
/// checks tied to alpha = mci(delta) are required only for normalized pairs.
/// Throws RegorEmpty / TrivialLink like link_hf.
PairVerdict check_pair(const CiTriple& alpha, const DegreeSequence& delta);

/// All Gaeta-valid delta within the bounds, in canonical order (by m, then
/// lexicographically), before any normalization filter.
std::vector<DegreeSequence> enumerate_deltas(int d_max, int m_max);

/// `workers` = 0 picks the hardware concurrency. Counts, failures and
/// verdicts do not depend on the worker count.
SweepReport sweep(const SweepConfig& config, unsigned workers = 0, bool keep_verdicts = false);

}  // namespace lefschetz
