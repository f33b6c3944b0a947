#ifndef HOFA_SIMULATE_HPP
#define HOFA_SIMULATE_HPP

#include <cstdint>
#include <vector>

#include "hofa/cumulants.hpp"
#include "hofa/famodel.hpp"

namespace hofa {

struct SimConfig {
  ModelSpec spec{1, 1, 2};
  Dist factor_dist = Dist::CenteredExponential;
  Dist noise_dist = Dist::CenteredExponential;
  LoadingMatrix<double> loading{1, 1};
  std::size_t samples = 1;
  std::uint64_t seed = 0;
};

/// Row-major samples x p matrix of X = Lambda Y + eps draws. Samples are
/// generated in fixed-size chunks with counter-derived substreams, so the
/// result depends only on (seed, config), not on scheduling.
std::vector<double> draw(const SimConfig& config);

/// Canonical-entry sample averages of monomials, orders 1..max_order.
TensorSequence<double> empirical_moments(const std::vector<double>& samples, int p, int max_order);

/// Per-block moment averages for block-bootstrap error bars.
struct BlockMoments {
  int p = 1;
  int max_order = 2;
  std::size_t n_blocks = 0;
  std::vector<TensorSequence<double>> blocks;
  std::vector<std::size_t> block_sizes;

  TensorSequence<double> combined() const;
};

BlockMoments empirical_moments_blocked(const std::vector<double>& samples, int p, int max_order,
                                       std::size_t n_blocks);

enum class DeviationFlag { Pass, Warn, Fail };

struct OrderDeviation {
  int order;
  double max_abs_deviation;
  double max_normalized_deviation;
};

struct DeviationReport {
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::vector<OrderDeviation> per_order;
  double max_normalized = 0.0;
  DeviationFlag flag = DeviationFlag::Pass;
};

inline constexpr double kWarnThreshold = 5.0;
inline constexpr double kFailThreshold = 8.0;
inline constexpr std::size_t kBootstrapResamples = 200;

/// Compares empirical cumulants of X against the phi_k prediction built from
/// the analytic factor/noise cumulants, normalized by block-bootstrap
/// standard errors.
DeviationReport validate(const SimConfig& config);

}  // namespace hofa

#endif
