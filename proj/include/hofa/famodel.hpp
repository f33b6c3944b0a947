#ifndef HOFA_FAMODEL_HPP
#define HOFA_FAMODEL_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hofa/cumulants.hpp"
#include "hofa/sym_tensor.hpp"

namespace hofa {

/// The triple (p, m, k) with p >= m, together with the derived counts:
///   M  = dim of the parameter space (k-1)(p+m) + pm - C(m,2)
///   N  = dim of the ambient tensor space C(p+k,k) - p - 1
///   N' = (k-1) * C(p+1,2), the row count of the restricted Jacobian
struct ModelSpec {
  int p;
  int m;
  int k;

  ModelSpec(int p_, int m_, int k_) : p(p_), m(m_), k(k_) {
    if (p < 1 || m < 1) throw std::invalid_argument("ModelSpec requires p >= 1, m >= 1");
    if (k < 2) throw std::invalid_argument("ModelSpec requires k >= 2");
    if (p < m) throw std::invalid_argument("ModelSpec requires p >= m");
  }

  long long M() const {
    return static_cast<long long>(k - 1) * (p + m) + static_cast<long long>(p) * m -
           static_cast<long long>(m) * (m - 1) / 2;
  }
  long long N() const {
    return static_cast<long long>(binomial_u64(p + k, k)) - p - 1;
  }
  long long N_prime() const {
    return static_cast<long long>(k - 1) * p * (p + 1) / 2;
  }
};

struct Dims {
  long long M;
  long long N;
  long long N_prime;
  long long dim;
  long long codim;
};

/// Dimension bookkeeping; internally cross-checks k!(N - M) against the
/// codimension polynomial.
Dims dims(const ModelSpec& spec);

struct ProjectionReport {
  long long f_value;            // f_k(p)
  bool sufficient;              // f_k(p) >= 0, i.e. M <= N'
  std::optional<long long> m_star;  // defined for k >= 3
};

ProjectionReport projection_sufficient(const ModelSpec& spec);

/// A point of the domain of phi_k: diagonal tensors eps^(2..k) over p,
/// delta^(2..k) over m, and a lower-triangular loading matrix.
template <typename T>
struct FactorParams {
  ModelSpec spec;
  std::vector<DiagTensor<T>> eps;    // orders 2..k, dimension p
  std::vector<DiagTensor<T>> delta;  // orders 2..k, dimension m
  LoadingMatrix<T> loading;

  explicit FactorParams(const ModelSpec& s) : spec(s), loading(s.p, s.m, true) {
    for (int r = 2; r <= s.k; ++r) {
      eps.emplace_back(s.p, r);
      delta.emplace_back(s.m, r);
    }
  }

  DiagTensor<T>& eps_order(int r) { return eps[static_cast<std::size_t>(r - 2)]; }
  const DiagTensor<T>& eps_order(int r) const { return eps[static_cast<std::size_t>(r - 2)]; }
  DiagTensor<T>& delta_order(int r) { return delta[static_cast<std::size_t>(r - 2)]; }
  const DiagTensor<T>& delta_order(int r) const { return delta[static_cast<std::size_t>(r - 2)]; }

  /// Coordinates in the order (eps^(2),...,eps^(k), delta^(2),...,delta^(k),
  /// lambda_11,...,lambda_mm, lambda_{>1},...,lambda_{>m}).
  std::vector<T> flatten() const {
    std::vector<T> v;
    v.reserve(static_cast<std::size_t>(spec.M()));
    for (int r = 2; r <= spec.k; ++r) {
      for (int j = 1; j <= spec.p; ++j) v.push_back(eps_order(r)[j]);
    }
    for (int r = 2; r <= spec.k; ++r) {
      for (int j = 1; j <= spec.m; ++j) v.push_back(delta_order(r)[j]);
    }
    for (int j = 1; j <= spec.m; ++j) v.push_back(loading(j, j));
    for (int s = 1; s <= spec.m; ++s) {
      for (int i = s + 1; i <= spec.p; ++i) v.push_back(loading(i, s));
    }
    return v;
  }

  static FactorParams unflatten(const ModelSpec& spec, const std::vector<T>& v) {
    if (static_cast<long long>(v.size()) != spec.M()) {
      throw std::invalid_argument("coordinate vector length must equal M");
    }
    FactorParams out(spec);
    std::size_t pos = 0;
    for (int r = 2; r <= spec.k; ++r) {
      for (int j = 1; j <= spec.p; ++j) out.eps_order(r)[j] = v[pos++];
    }
    for (int r = 2; r <= spec.k; ++r) {
      for (int j = 1; j <= spec.m; ++j) out.delta_order(r)[j] = v[pos++];
    }
    for (int j = 1; j <= spec.m; ++j) out.loading.set(j, j, v[pos++]);
    for (int s = 1; s <= spec.m; ++s) {
      for (int i = s + 1; i <= spec.p; ++i) out.loading.set(i, s, v[pos++]);
    }
    return out;
  }
};

/// Stable labels matching the flattened coordinate order.
std::vector<std::string> coord_labels(const ModelSpec& spec);

/// The parametrization map: order-r image tensor is
/// eps^(r) + delta^(r) Tucker-multiplied by Lambda^T, for r = 2..k.
template <typename T>
TensorSequence<T> phi(const FactorParams<T>& params) {
  auto out = TensorSequence<T>::zeros(params.spec.p, params.spec.k, /*zero_mean=*/true);
  for (int r = 2; r <= params.spec.k; ++r) {
    out.order(r) = add_diag(tucker_diag(params.delta_order(r), params.loading), params.eps_order(r));
  }
  return out;
}

template <typename T, typename U, typename F>
FactorParams<U> convert_params(const FactorParams<T>& in, F&& cast) {
  FactorParams<U> out(in.spec);
  const auto v = in.flatten();
  std::vector<U> w;
  w.reserve(v.size());
  for (const auto& x : v) w.push_back(cast(x));
  return FactorParams<U>::unflatten(in.spec, w);
}

}  // namespace hofa

#endif
