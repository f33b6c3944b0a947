#ifndef HOFA_JACOBIAN_HPP
#define HOFA_JACOBIAN_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hofa/famodel.hpp"

namespace hofa {

struct RowLabel {
  int order;
  MultiIndex idx;
};

/// Jacobian of phi_k at a parameter point. Full mode lists all N canonical
/// entries, orders ascending and lexicographic within each order.
/// Restricted mode lists, per order, the diagonal entries t_1..t_p followed
/// by t_{j,...,j,l} for j in [p-1], l in (j, p].
template <typename T>
struct JacobianMatrix {
  ModelSpec spec;
  bool restricted;
  std::vector<RowLabel> rows;
  std::vector<std::string> cols;
  std::vector<T> a;  // row-major, rows.size() x cols.size()

  std::size_t n_rows() const { return rows.size(); }
  std::size_t n_cols() const { return cols.size(); }
  T& at(std::size_t i, std::size_t j) { return a[i * cols.size() + j]; }
  const T& at(std::size_t i, std::size_t j) const { return a[i * cols.size() + j]; }
};

inline std::vector<RowLabel> jacobian_rows(const ModelSpec& spec, bool restricted) {
  std::vector<RowLabel> rows;
  for (int r = 2; r <= spec.k; ++r) {
    if (!restricted) {
      for (auto& mi : enumerate_indices(spec.p, r)) rows.push_back({r, mi});
    } else {
      for (int j = 1; j <= spec.p; ++j) {
        rows.push_back({r, MultiIndex(std::vector<int>(static_cast<std::size_t>(r), j), spec.p)});
      }
      for (int j = 1; j <= spec.p - 1; ++j) {
        for (int l = j + 1; l <= spec.p; ++l) {
          std::vector<int> v(static_cast<std::size_t>(r), j);
          v.back() = l;
          rows.push_back({r, MultiIndex(std::move(v), spec.p)});
        }
      }
    }
  }
  return rows;
}

/// Analytic Jacobian. For a row (r, i_1..i_r):
///   d/d eps^(r)_j   = 1 iff i_1 = ... = i_r = j
///   d/d delta^(r)_l = prod_s lambda_{i_s,l}
///   d/d lambda_{uv} = delta^(r)_v * sum_{s: i_s=u} prod_{s'!=s} lambda_{i_s',v}
/// Cross-order blocks vanish.
template <typename T>
JacobianMatrix<T> assemble(const FactorParams<T>& params, bool restricted) {
  const ModelSpec& spec = params.spec;
  JacobianMatrix<T> J{spec, restricted, jacobian_rows(spec, restricted), coord_labels(spec), {}};
  const std::size_t ncols = J.cols.size();
  J.a.assign(J.rows.size() * ncols, T{});

  // Column offsets in the flattened order.
  const std::size_t eps_base = 0;
  const std::size_t delta_base = static_cast<std::size_t>(spec.k - 1) * spec.p;
  const std::size_t lambda_base = delta_base + static_cast<std::size_t>(spec.k - 1) * spec.m;

  // lambda column position for (u, v), u >= v: diagonal first, then columns.
  auto lambda_col = [&](int u, int v) -> std::size_t {
    if (u == v) return lambda_base + static_cast<std::size_t>(v - 1);
    std::size_t off = lambda_base + static_cast<std::size_t>(spec.m);
    for (int s = 1; s < v; ++s) off += static_cast<std::size_t>(spec.p - s);
    return off + static_cast<std::size_t>(u - v - 1);
  };

  for (std::size_t row = 0; row < J.rows.size(); ++row) {
    const int r = J.rows[row].order;
    const MultiIndex& mi = J.rows[row].idx;
    T* out = &J.a[row * ncols];

    bool all_equal = true;
    for (int s = 1; s < r; ++s) {
      if (mi[s] != mi[0]) {
        all_equal = false;
        break;
      }
    }
    if (all_equal) {
      out[eps_base + static_cast<std::size_t>(r - 2) * spec.p + static_cast<std::size_t>(mi[0] - 1)] = T(1);
    }

    for (int l = 1; l <= spec.m; ++l) {
      T prod = T(1);
      for (int s = 0; s < r; ++s) prod = prod * params.loading(mi[s], l);
      out[delta_base + static_cast<std::size_t>(r - 2) * spec.m + static_cast<std::size_t>(l - 1)] = prod;
    }

    for (int v = 1; v <= spec.m; ++v) {
      const T& dv = params.delta_order(r)[v];
      for (int s = 0; s < r; ++s) {
        const int u = mi[s];
        if (u < v) continue;
        T prod = dv;
        for (int t = 0; t < r; ++t) {
          if (t == s) continue;
          prod = prod * params.loading(mi[t], v);
        }
        out[lambda_col(u, v)] += prod;
      }
    }
  }
  return J;
}

enum class RankMethod { Svd, ModP, Exact };
enum class PointKind { RandomFloat, RandomModP, Witness };

struct RankReport {
  RankMethod method;
  PointKind point;
  long long computed_rank = 0;
  long long expected_rank = 0;
  double gap = 0.0;          // svd only: smallest retained / largest discarded
  std::uint64_t prime = 0;   // modp only
  bool restricted = false;

  bool matches() const { return computed_rank == expected_rank; }
};

inline constexpr std::uint64_t kDefaultPrime = 2147483647ULL;        // 2^31 - 1
inline constexpr std::uint64_t kSecondPrime = 2147483629ULL;

/// Numerical rank: singular values above tol_factor * sigma_max.
/// tol_factor <= 0 selects max(rows, cols) * machine epsilon.
RankReport rank_svd(const JacobianMatrix<double>& J, double tol_factor = 0.0);

/// Rank of the Jacobian at an integer-valued rational point, over F_prime.
RankReport rank_modp(const FactorParams<Rational>& params, std::uint64_t prime = kDefaultPrime,
                     bool restricted = false);

/// The exact certification point: eps = 0, all-ones deltas, identity upper
/// block of Lambda, and for column j one extra unit at row
/// m + 1 + ((j-1) mod (p-m)). Requires p >= m+1.
FactorParams<Rational> witness_point(const ModelSpec& spec);

/// Fraction-free elimination rank of the restricted Jacobian at the witness
/// point; full certification (rank == M) is claimed for p >= m+2, k >= 3.
RankReport rank_exact(const ModelSpec& spec);

/// Max relative error between the analytic full Jacobian and central finite
/// differences of phi.
double fd_check(const FactorParams<double>& params, double step);

FactorParams<double> random_shell_point(const ModelSpec& spec, std::mt19937_64& rng);
FactorParams<Rational> random_integer_point(const ModelSpec& spec, std::mt19937_64& rng,
                                            long long lo = 1, long long hi = 1 << 20);

struct VerifySummary {
  ModelSpec spec{1, 1, 2};
  long long expected_rank = 0;  // min{M, N}
  std::uint64_t seed = 0;
  std::vector<RankReport> reports;
  bool certifiable = false;  // exact witness certification attempted
  bool all_match = true;
  bool asserted = true;  // false for p in {m, m+1}: ranks reported, no claim
};

/// Draws `trials` random points and compares SVD and mod-p ranks (plus the
/// exact witness rank where certifiable) against min{M, N}.
VerifySummary verify_dimension(const ModelSpec& spec, int trials, std::uint64_t seed);

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
long long bareiss_rank(std::vector<BigInt> a, std::size_t rows, std::size_t cols);

/// Rank over F_prime by Gaussian elimination.
long long modp_rank(std::vector<std::uint64_t> a, std::size_t rows, std::size_t cols,
                    std::uint64_t prime);

}  // namespace hofa

#endif
