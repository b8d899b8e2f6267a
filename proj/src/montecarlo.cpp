#include "qillum/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <thread>

namespace qillum {

namespace {

constexpr std::uint64_t kChunkSize = 4096;
// Distinct key spaces for the per-hypothesis streams of empirical_roc.
constexpr std::uint64_t kRocAbsentKey = 0x5851f42d4c957f2dULL;
constexpr std::uint64_t kRocPresentKey = 0x14057b7ef767814fULL;

double binomial_se(double p, std::uint64_t n) {
  if (n == 0) return 0.0;
  return std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

double ratio(std::uint64_t num, std::uint64_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

// Runs body(chunk_index) for every chunk on `threads` workers.
template <class Body>
void for_each_chunk(std::uint64_t chunks, unsigned threads, Body&& body) {
  threads = std::max(1u, threads);
  if (threads == 1 || chunks <= 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) body(c);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::vector<std::jthread> pool;
  const auto workers = static_cast<unsigned>(std::min<std::uint64_t>(threads, chunks));
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::uint64_t c = next++; c < chunks; c = next++) body(c);
    });
  }
}

double sample_homodyne(const HomodyneModel& model, Hypothesis h, Xoshiro256& rng) {
  const auto mm = static_cast<double>(model.m);
  if (model.m == 0) return 0.0;
  const double mean = mm * (h == Hypothesis::present ? model.mean_present : model.mean_absent);
  std::normal_distribution<double> dist(mean, std::sqrt(mm * model.variance));
  return dist(rng);
}

double sample_opa(const OpaModel& model, Hypothesis h, Xoshiro256& rng) {
  return static_cast<double>(sample_negative_binomial(model.mean_per_mode(h), model.m, rng));
}

template <class Model, class Sampler>
TrialBatch run_trials(const Model& model, double w1, double threshold, std::uint64_t trials,
                      std::uint64_t seed, RunOptions options, Sampler sample) {
  if (trials == 0) throw std::invalid_argument("trials must be at least 1");
  const std::uint64_t chunks = (trials + kChunkSize - 1) / kChunkSize;
  std::vector<TrialBatch> partial(chunks);
  for_each_chunk(chunks, options.threads, [&](std::uint64_t c) {
    TrialBatch& out = partial[c];
    const std::uint64_t begin = c * kChunkSize;
    const std::uint64_t end = std::min(trials, begin + kChunkSize);
    for (std::uint64_t i = begin; i < end; ++i) {
      auto rng = Xoshiro256::substream(seed, i);
      const bool present = rng.uniform() < w1;
      const double x = sample(model, present ? Hypothesis::present : Hypothesis::absent, rng);
      // Ties go to H0.
      const bool decide_present = x > threshold;
      if (present) {
        out.present.add(x);
        ++(decide_present ? out.counts.detect : out.counts.miss);
      } else {
        out.absent.add(x);
        ++(decide_present ? out.counts.false_alarm : out.counts.correct_absent);
      }
    }
  });

  TrialBatch batch;
  batch.seed = seed;
  batch.trials = trials;
  for (const auto& p : partial) {
    batch.counts.correct_absent += p.counts.correct_absent;
    batch.counts.false_alarm += p.counts.false_alarm;
    batch.counts.detect += p.counts.detect;
    batch.counts.miss += p.counts.miss;
    batch.absent.merge(p.absent);
    batch.present.merge(p.present);
  }
  return batch;
}

template <class Model, class Sampler>
std::vector<EmpiricalRocPoint> roc_from_samples(const Model& model, std::uint64_t trials,
                                                std::span<const double> thresholds, std::uint64_t seed,
                                                RunOptions options, Sampler sample) {
  if (trials == 0) throw std::invalid_argument("trials must be at least 1");
  if (!std::is_sorted(thresholds.begin(), thresholds.end())) {
    throw std::invalid_argument("empirical_roc: thresholds must be sorted ascending");
  }
  std::vector<double> absent(trials);
  std::vector<double> present(trials);
  const std::uint64_t chunks = (trials + kChunkSize - 1) / kChunkSize;
  for_each_chunk(chunks, options.threads, [&](std::uint64_t c) {
    const std::uint64_t begin = c * kChunkSize;
    const std::uint64_t end = std::min(trials, begin + kChunkSize);
    for (std::uint64_t i = begin; i < end; ++i) {
      auto rng0 = Xoshiro256::substream(seed ^ kRocAbsentKey, i);
      auto rng1 = Xoshiro256::substream(seed ^ kRocPresentKey, i);
      absent[i] = sample(model, Hypothesis::absent, rng0);
      present[i] = sample(model, Hypothesis::present, rng1);
    }
  });
  std::sort(absent.begin(), absent.end());
  std::sort(present.begin(), present.end());

  const auto above = [](const std::vector<double>& xs, double t) {
    return static_cast<std::uint64_t>(xs.end() - std::upper_bound(xs.begin(), xs.end(), t));
  };
  std::vector<EmpiricalRocPoint> out;
  out.reserve(thresholds.size());
  for (double t : thresholds) {
    EmpiricalRocPoint p;
    p.threshold = t;
    p.p_f = ratio(above(absent, t), trials);
    p.p_d = ratio(above(present, t), trials);
    p.se_p_f = binomial_se(p.p_f, trials);
    p.se_p_d = binomial_se(p.p_d, trials);
    out.push_back(p);
  }
  return out;
}

}  // namespace

void SampleMoments::add(double x) {
  ++count;
  const double delta = x - mean;
  mean += delta / static_cast<double>(count);
  m2 += delta * (x - mean);
}

void SampleMoments::merge(const SampleMoments& other) {
  if (other.count == 0) return;
  if (count == 0) {
    *this = other;
    return;
  }
  const auto na = static_cast<double>(count);
  const auto nb = static_cast<double>(other.count);
  const double n = na + nb;
  const double delta = other.mean - mean;
  mean += delta * nb / n;
  m2 += other.m2 + delta * delta * na * nb / n;
  count += other.count;
}

double TrialBatch::p_f() const {
  return ratio(counts.false_alarm, counts.false_alarm + counts.correct_absent);
}

double TrialBatch::p_d() const { return ratio(counts.detect, counts.detect + counts.miss); }

double TrialBatch::p_e() const { return ratio(counts.false_alarm + counts.miss, trials); }

double TrialBatch::se_p_f() const {
  return binomial_se(p_f(), counts.false_alarm + counts.correct_absent);
}

double TrialBatch::se_p_d() const { return binomial_se(p_d(), counts.detect + counts.miss); }

double TrialBatch::se_p_e() const { return binomial_se(p_e(), trials); }

std::uint64_t sample_negative_binomial(double mean_per_mode, std::uint64_t m, Xoshiro256& rng) {
  if (!(mean_per_mode >= 0.0)) throw std::domain_error("negative-binomial mean must be non-negative");
  if (m == 0 || mean_per_mode == 0.0) return 0;
  std::gamma_distribution<double> rate(static_cast<double>(m), mean_per_mode);
  const double lambda = rate(rng);
  if (!(lambda > 0.0)) return 0;
  std::poisson_distribution<std::uint64_t> counts(lambda);
  return counts(rng);
}

TrialBatch run_homodyne_trials(const HomodyneModel& model, std::uint64_t trials, std::uint64_t seed,
                               RunOptions options) {
  return run_trials(model, model.w1, model.threshold(), trials, seed, options, sample_homodyne);
}

TrialBatch run_opa_trials(const OpaModel& model, std::uint64_t trials, std::uint64_t seed,
                          RunOptions options) {
  return run_trials(model, model.w1, model.threshold, trials, seed, options, sample_opa);
}

std::vector<EmpiricalRocPoint> empirical_roc(const HomodyneModel& model, std::uint64_t trials,
                                             std::span<const double> thresholds, std::uint64_t seed,
                                             RunOptions options) {
  return roc_from_samples(model, trials, thresholds, seed, options, sample_homodyne);
}

std::vector<EmpiricalRocPoint> empirical_roc(const OpaModel& model, std::uint64_t trials,
                                             std::span<const double> thresholds, std::uint64_t seed,
                                             RunOptions options) {
  return roc_from_samples(model, trials, thresholds, seed, options, sample_opa);
}

}  // namespace qillum
