#include "hofa/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace hofa {

namespace {

constexpr std::size_t kChunk = 1 << 16;

double sample_one(Dist dist, std::mt19937_64& rng) {
  switch (dist) {
    case Dist::CenteredExponential: {
      std::exponential_distribution<double> d(1.0);
      return d(rng) - 1.0;
    }
    case Dist::UniformSym: {
      std::uniform_real_distribution<double> d(-1.0, 1.0);
      return d(rng);
    }
    case Dist::Rademacher: {
      std::bernoulli_distribution d(0.5);
      return d(rng) ? 1.0 : -1.0;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

std::vector<double> draw(const SimConfig& config) {
  if (config.samples < 1) throw std::invalid_argument("draw requires samples >= 1");
  const int p = config.spec.p, m = config.spec.m;
  std::vector<double> out(config.samples * static_cast<std::size_t>(p));
  std::vector<double> y(static_cast<std::size_t>(m));
  for (std::size_t start = 0; start < config.samples; start += kChunk) {
    std::seed_seq sseq{static_cast<std::uint64_t>(config.seed),
                       static_cast<std::uint64_t>(start / kChunk), std::uint64_t{0x5e11}};
    std::mt19937_64 rng(sseq);
    const std::size_t end = std::min(config.samples, start + kChunk);
    for (std::size_t n = start; n < end; ++n) {
      for (int j = 0; j < m; ++j) y[static_cast<std::size_t>(j)] = sample_one(config.factor_dist, rng);
      double* row = &out[n * static_cast<std::size_t>(p)];
      for (int i = 1; i <= p; ++i) {
        double acc = sample_one(config.noise_dist, rng);
        for (int j = 1; j <= std::min(i, m); ++j) {
          acc += config.loading(i, j) * y[static_cast<std::size_t>(j - 1)];
        }
        row[i - 1] = acc;
      }
    }
  }
  return out;
}

BlockMoments empirical_moments_blocked(const std::vector<double>& samples, int p, int max_order,
                                       std::size_t n_blocks) {
  if (p < 1 || max_order < 2) throw std::invalid_argument("empirical moments require p >= 1, k >= 2");
  const std::size_t n = samples.size() / static_cast<std::size_t>(p);
  if (n == 0 || samples.size() % static_cast<std::size_t>(p) != 0) {
    throw std::invalid_argument("sample matrix shape mismatch");
  }
  n_blocks = std::max<std::size_t>(1, std::min(n_blocks, n));

  BlockMoments bm;
  bm.p = p;
  bm.max_order = max_order;
  bm.n_blocks = n_blocks;

  std::vector<std::vector<MultiIndex>> idx_by_order;
  for (int r = 1; r <= max_order; ++r) idx_by_order.push_back(enumerate_indices(p, r));

  for (std::size_t b = 0; b < n_blocks; ++b) {
    const std::size_t lo = n * b / n_blocks;
    const std::size_t hi = n * (b + 1) / n_blocks;
    auto seq = TensorSequence<double>::zeros(p, max_order, /*zero_mean=*/false);
    for (std::size_t s = lo; s < hi; ++s) {
      const double* row = &samples[s * static_cast<std::size_t>(p)];
      for (int r = 1; r <= max_order; ++r) {
        auto& tensor = seq.order(r);
        const auto& idxs = idx_by_order[static_cast<std::size_t>(r - 1)];
        for (std::size_t e = 0; e < idxs.size(); ++e) {
          double prod = 1.0;
          for (int t = 0; t < r; ++t) prod *= row[idxs[e][t] - 1];
          tensor.data()[e] += prod;
        }
      }
    }
    const double inv = hi > lo ? 1.0 / static_cast<double>(hi - lo) : 0.0;
    for (int r = 1; r <= max_order; ++r) {
      for (auto& v : seq.order(r).data()) v *= inv;
    }
    bm.blocks.push_back(std::move(seq));
    bm.block_sizes.push_back(hi - lo);
  }
  return bm;
}

TensorSequence<double> BlockMoments::combined() const {
  auto seq = TensorSequence<double>::zeros(p, max_order, false);
  std::size_t total = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const double w = static_cast<double>(block_sizes[b]);
    total += block_sizes[b];
    for (int r = 1; r <= max_order; ++r) {
      const auto& src = blocks[b].order(r).data();
      auto& dst = seq.order(r).data();
      for (std::size_t e = 0; e < src.size(); ++e) dst[e] += w * src[e];
    }
  }
  const double inv = total > 0 ? 1.0 / static_cast<double>(total) : 0.0;
  for (int r = 1; r <= max_order; ++r) {
    for (auto& v : seq.order(r).data()) v *= inv;
  }
  return seq;
}

TensorSequence<double> empirical_moments(const std::vector<double>& samples, int p, int max_order) {
  return empirical_moments_blocked(samples, p, max_order, 1).combined();
}

DeviationReport validate(const SimConfig& config) {
  const ModelSpec& spec = config.spec;

  // Analytic prediction: deltas from factor cumulants, eps from noise cumulants.
  const auto factor_cum = analytic_cumulants(config.factor_dist, spec.k);
  const auto noise_cum = analytic_cumulants(config.noise_dist, spec.k);
  FactorParams<double> params(spec);
  for (int r = 2; r <= spec.k; ++r) {
    for (int j = 1; j <= spec.m; ++j) params.delta_order(r)[j] = to_double(factor_cum[static_cast<std::size_t>(r - 1)]);
    for (int j = 1; j <= spec.p; ++j) params.eps_order(r)[j] = to_double(noise_cum[static_cast<std::size_t>(r - 1)]);
  }
  for (int i = 1; i <= spec.p; ++i) {
    for (int j = 1; j <= std::min(i, spec.m); ++j) params.loading.set(i, j, config.loading(i, j));
  }
  const auto predicted = phi(params);

  const auto samples = draw(config);
  const auto blocked = empirical_moments_blocked(samples, spec.p, spec.k, kBootstrapResamples);
  const auto empirical_cum = moments_to_cumulants(blocked.combined());

  // Block bootstrap of the cumulant entries.
  std::vector<TensorSequence<double>> resampled;
  resampled.reserve(kBootstrapResamples);
  std::seed_seq sseq{static_cast<std::uint64_t>(config.seed), std::uint64_t{0xb007}};
  std::mt19937_64 rng(sseq);
  std::uniform_int_distribution<std::size_t> pick(0, blocked.n_blocks - 1);
  for (std::size_t b = 0; b < kBootstrapResamples; ++b) {
    BlockMoments boot;
    boot.p = blocked.p;
    boot.max_order = blocked.max_order;
    boot.n_blocks = blocked.n_blocks;
    for (std::size_t i = 0; i < blocked.n_blocks; ++i) {
      const std::size_t sel = pick(rng);
      boot.blocks.push_back(blocked.blocks[sel]);
      boot.block_sizes.push_back(blocked.block_sizes[sel]);
    }
    resampled.push_back(moments_to_cumulants(boot.combined()));
  }

  DeviationReport report;
  report.seed = config.seed;
  report.samples = config.samples;
  for (int r = 2; r <= spec.k; ++r) {
    const auto& emp = empirical_cum.order(r).data();
    const auto& pred = predicted.order(r).data();
    OrderDeviation od{r, 0.0, 0.0};
    for (std::size_t e = 0; e < emp.size(); ++e) {
      double mean = 0.0;
      for (const auto& rs : resampled) mean += rs.order(r).data()[e];
      mean /= static_cast<double>(resampled.size());
      double var = 0.0;
      for (const auto& rs : resampled) {
        const double d = rs.order(r).data()[e] - mean;
        var += d * d;
      }
      const double se = std::sqrt(var / static_cast<double>(resampled.size() - 1));
      const double dev = std::abs(emp[e] - pred[e]);
      od.max_abs_deviation = std::max(od.max_abs_deviation, dev);
      od.max_normalized_deviation = std::max(od.max_normalized_deviation, dev / std::max(se, 1e-300));
    }
    report.max_normalized = std::max(report.max_normalized, od.max_normalized_deviation);
    report.per_order.push_back(od);
  }
  report.flag = report.max_normalized < kWarnThreshold   ? DeviationFlag::Pass
                : report.max_normalized < kFailThreshold ? DeviationFlag::Warn
                                                         : DeviationFlag::Fail;
  return report;
}

}  // namespace hofa
