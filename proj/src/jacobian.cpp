#include "hofa/jacobian.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hofa {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  a %= p;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce_int(const BigInt& x, std::uint64_t p) {
  BigInt r = x % BigInt(p);
  if (r < 0) r += BigInt(p);
  return r.convert_to<std::uint64_t>();
}

}  // namespace

long long modp_rank(std::vector<std::uint64_t> a, std::size_t rows, std::size_t cols,
                    std::uint64_t prime) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot * cols + col] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = col; j < cols; ++j) std::swap(a[pivot * cols + j], a[rank * cols + j]);
    }
    const std::uint64_t inv = powmod(a[rank * cols + col], prime - 2, prime);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const std::uint64_t f = a[i * cols + col];
      if (f == 0) continue;
      const std::uint64_t scale = mulmod(f, inv, prime);
      for (std::size_t j = col; j < cols; ++j) {
        const std::uint64_t sub = mulmod(scale, a[rank * cols + j], prime);
        a[i * cols + j] = (a[i * cols + j] + prime - sub) % prime;
      }
    }
    ++rank;
  }
  return static_cast<long long>(rank);
}

long long bareiss_rank(std::vector<BigInt> a, std::size_t rows, std::size_t cols) {
  std::size_t rank = 0;
  BigInt prev(1);
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    // Partial pivot: smallest nonzero magnitude to limit growth.
    std::size_t pivot = rows;
    for (std::size_t i = rank; i < rows; ++i) {
      if (a[i * cols + col] == 0) continue;
      if (pivot == rows || abs(a[i * cols + col]) < abs(a[pivot * cols + col])) pivot = i;
    }
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = col; j < cols; ++j) std::swap(a[pivot * cols + j], a[rank * cols + j]);
    }
    const BigInt piv = a[rank * cols + col];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const BigInt f = a[i * cols + col];
      for (std::size_t j = col; j < cols; ++j) {
        BigInt val = piv * a[i * cols + j] - f * a[rank * cols + j];
        a[i * cols + j] = val / prev;  // exact by the Bareiss identity
      }
    }
    prev = piv;
    ++rank;
  }
  return static_cast<long long>(rank);
}

RankReport rank_svd(const JacobianMatrix<double>& J, double tol_factor) {
  const std::size_t rows = J.n_rows(), cols = J.n_cols();
  Eigen::MatrixXd M(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const double v = J.at(i, j);
      if (!std::isfinite(v)) throw std::runtime_error("rank_svd: non-finite Jacobian entry");
      M(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
    }
  }
  Eigen::BDCSVD<Eigen::MatrixXd> svd(M);
  const auto& sv = svd.singularValues();
  if (tol_factor <= 0.0) {
    tol_factor = static_cast<double>(std::max(rows, cols)) * std::numeric_limits<double>::epsilon();
  }
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  const double tol = tol_factor * smax;
  long long rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > tol && smax > 0.0) ++rank;
  }
  double gap = std::numeric_limits<double>::infinity();
  if (rank > 0 && rank < sv.size() && sv(rank) > 0.0) gap = sv(rank - 1) / sv(rank);

  RankReport rep;
  rep.method = RankMethod::Svd;
  rep.point = PointKind::RandomFloat;
  rep.computed_rank = rank;
  rep.expected_rank = std::min(J.spec.M(), J.restricted ? J.spec.N_prime() : J.spec.N());
  rep.gap = gap;
  rep.restricted = J.restricted;
  return rep;
}

RankReport rank_modp(const FactorParams<Rational>& params, std::uint64_t prime, bool restricted) {
  const auto J = assemble(params, restricted);
  std::vector<std::uint64_t> a(J.a.size());
  for (std::size_t i = 0; i < J.a.size(); ++i) {
    if (denominator(J.a[i]) != 1) throw std::invalid_argument("rank_modp requires an integer point");
    a[i] = reduce_int(numerator(J.a[i]), prime);
  }
  RankReport rep;
  rep.method = RankMethod::ModP;
  rep.point = PointKind::RandomModP;
  rep.computed_rank = modp_rank(std::move(a), J.n_rows(), J.n_cols(), prime);
  rep.expected_rank = std::min(params.spec.M(), restricted ? params.spec.N_prime() : params.spec.N());
  rep.prime = prime;
  rep.restricted = restricted;
  return rep;
}

FactorParams<Rational> witness_point(const ModelSpec& spec) {
  if (spec.p <= spec.m) throw std::invalid_argument("witness_point requires p >= m+1");
  FactorParams<Rational> w(spec);
  for (int r = 2; r <= spec.k; ++r) {
    for (int j = 1; j <= spec.m; ++j) w.delta_order(r)[j] = 1;
  }
  for (int j = 1; j <= spec.m; ++j) w.loading.set(j, j, Rational(1));
  for (int j = 1; j <= spec.m; ++j) {
    const int row = spec.m + 1 + (j - 1) % (spec.p - spec.m);
    w.loading.set(row, j, Rational(1));
  }
  return w;
}

RankReport rank_exact(const ModelSpec& spec) {
  const auto w = witness_point(spec);
  const auto J = assemble(w, /*restricted=*/true);
  std::vector<BigInt> a(J.a.size());
  for (std::size_t i = 0; i < J.a.size(); ++i) a[i] = numerator(J.a[i]);  // witness entries are integers

  RankReport rep;
  rep.method = RankMethod::Exact;
  rep.point = PointKind::Witness;
  rep.computed_rank = bareiss_rank(std::move(a), J.n_rows(), J.n_cols());
  rep.expected_rank = spec.M();
  rep.restricted = true;
  return rep;
}

double fd_check(const FactorParams<double>& params, double step) {
  const auto J = assemble(params, /*restricted=*/false);
  const auto x0 = params.flatten();
  const auto rows = J.rows;
  double max_err = 0.0;
  for (std::size_t col = 0; col < x0.size(); ++col) {
    auto xp = x0, xm = x0;
    xp[col] += step;
    xm[col] -= step;
    const auto fp = phi(FactorParams<double>::unflatten(params.spec, xp));
    const auto fm = phi(FactorParams<double>::unflatten(params.spec, xm));
    for (std::size_t row = 0; row < rows.size(); ++row) {
      const double fd =
          (fp.order(rows[row].order).at(rows[row].idx) - fm.order(rows[row].order).at(rows[row].idx)) /
          (2.0 * step);
      const double an = J.at(row, col);
      const double err = std::abs(an - fd) / std::max(1.0, std::abs(an));
      max_err = std::max(max_err, err);
    }
  }
  return max_err;
}

FactorParams<double> random_shell_point(const ModelSpec& spec, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> mag(1.0, 2.0);
  std::bernoulli_distribution flip(0.5);
  std::vector<double> v(static_cast<std::size_t>(spec.M()));
  for (auto& x : v) x = (flip(rng) ? -1.0 : 1.0) * mag(rng);
  return FactorParams<double>::unflatten(spec, v);
}

FactorParams<Rational> random_integer_point(const ModelSpec& spec, std::mt19937_64& rng,
                                            long long lo, long long hi) {
  std::uniform_int_distribution<long long> mag(lo, hi);
  std::vector<Rational> v(static_cast<std::size_t>(spec.M()));
  for (auto& x : v) x = Rational(mag(rng));
  return FactorParams<Rational>::unflatten(spec, v);
}

VerifySummary verify_dimension(const ModelSpec& spec, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("verify_dimension requires trials >= 1");
  VerifySummary summary;
  summary.spec = spec;
  summary.expected_rank = std::min(spec.M(), spec.N());
  summary.seed = seed;
  summary.asserted = spec.p >= spec.m + 2;
  summary.certifiable =
      spec.k >= 3 && spec.p >= spec.m + 2 && spec.M() <= spec.N_prime();

  for (int t = 0; t < trials; ++t) {
    // Per-trial deterministic substream.
    std::seed_seq sseq{static_cast<std::uint64_t>(seed), static_cast<std::uint64_t>(t)};
    std::mt19937_64 rng(sseq);
    const auto fparams = random_shell_point(spec, rng);
    auto svd_rep = rank_svd(assemble(fparams, false));
    const auto iparams = random_integer_point(spec, rng);
    auto modp_rep = rank_modp(iparams, kDefaultPrime, false);
    summary.reports.push_back(svd_rep);
    summary.reports.push_back(modp_rep);
  }
  if (summary.certifiable) {
    summary.reports.push_back(rank_exact(spec));
  }
  if (summary.asserted) {
    for (const auto& rep : summary.reports) {
      if (!rep.matches()) summary.all_match = false;
    }
  }
  return summary;
}

}  // namespace hofa
