#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qillum/receivers.hpp"
#include "qillum/rng.hpp"

// Monte Carlo oracle for the receiver models.
//
// Every trial draws from its own xoshiro256** stream keyed by (seed, trial
// index) through SplitMix64, and trials are processed in fixed-size chunks
// merged in chunk order. Results therefore depend only on (model, trials,
// seed), never on the number of worker threads.
//
// Statistics are sampled directly in their exact distribution: the homodyne
// sum of M iid Gaussians is drawn as one Gaussian with mean M mu and variance
// M sigma^2, and the OPA total count as a gamma(M, N)-Poisson mixture, which
// is exactly the negative-binomial count law.

namespace qillum {

struct OutcomeCounts {
  std::uint64_t correct_absent = 0;  // decide H0, H0 true
  std::uint64_t false_alarm = 0;     // decide H1, H0 true
  std::uint64_t detect = 0;          // decide H1, H1 true
  std::uint64_t miss = 0;            // decide H0, H1 true

  std::uint64_t total() const { return correct_absent + false_alarm + detect + miss; }
};

/// Running mean/variance of the sampled statistic under one hypothesis.
struct SampleMoments {
  std::uint64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x);
  void merge(const SampleMoments& other);
  double variance() const { return count > 1 ? m2 / static_cast<double>(count - 1) : 0.0; }
};

struct TrialBatch {
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  OutcomeCounts counts;
  SampleMoments absent;   // statistic moments for trials where H0 was true
  SampleMoments present;  // ... and H1

  double p_f() const;
  double p_d() const;
  /// (false alarms + misses) / trials, priors realised per trial.
  double p_e() const;
  double se_p_f() const;
  double se_p_d() const;
  double se_p_e() const;
};

struct RunOptions {
  unsigned threads = 1;
};

/// Throws std::invalid_argument for trials == 0.
TrialBatch run_homodyne_trials(const HomodyneModel& model, std::uint64_t trials, std::uint64_t seed,
                               RunOptions options = {});
TrialBatch run_opa_trials(const OpaModel& model, std::uint64_t trials, std::uint64_t seed,
                          RunOptions options = {});

/// Exact draw of the OPA total count over `m` modes with per-mode mean `n`.
std::uint64_t sample_negative_binomial(double mean_per_mode, std::uint64_t m, Xoshiro256& rng);

struct EmpiricalRocPoint {
  double threshold = 0.0;
  double p_f = 0.0;
  double p_d = 0.0;
  double se_p_f = 0.0;
  double se_p_d = 0.0;
};

/// Step ROC from one pass of `trials` samples under each hypothesis, scored
/// against every threshold (decide H1 when the statistic exceeds it).
/// `thresholds` must be sorted ascending; +-infinity are allowed.
std::vector<EmpiricalRocPoint> empirical_roc(const HomodyneModel& model, std::uint64_t trials,
                                             std::span<const double> thresholds, std::uint64_t seed,
                                             RunOptions options = {});
std::vector<EmpiricalRocPoint> empirical_roc(const OpaModel& model, std::uint64_t trials,
                                             std::span<const double> thresholds, std::uint64_t seed,
                                             RunOptions options = {});

}  // namespace qillum
