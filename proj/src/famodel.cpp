#include "hofa/famodel.hpp"

#include <cmath>

#include "hofa/codim.hpp"

namespace hofa {

Dims dims(const ModelSpec& spec) {
  Dims d;
  d.M = spec.M();
  d.N = spec.N();
  d.N_prime = spec.N_prime();
  d.dim = std::min(d.M, d.N);
  d.codim = d.N - d.dim;
  // Cross-module identity: k!(N - M) = h_m^(k)(p).
  const Rational lhs = Rational(factorial_big(spec.k) * (BigInt(d.N) - d.M));
  if (lhs != h_poly(spec.k, spec.m).eval(Rational(spec.p))) {
    throw std::logic_error("dims: codimension polynomial identity violated");
  }
  return d;
}

ProjectionReport projection_sufficient(const ModelSpec& spec) {
  const long long p = spec.p, m = spec.m, k = spec.k;
  ProjectionReport rep;
  rep.f_value = (k - 1) * p * p - (2 * m + k - 1) * p + m * m - (2 * k - 1) * m;
  rep.sufficient = rep.f_value >= 0;
  if (k >= 3) {
    // m* = floor((k-1)(2k + sqrt(4k^2+k-2)) / (2(k-2))), resolved with
    // integer arithmetic: t <= expr  <=>  2(k-2)t - 2k(k-1) <= (k-1)sqrt(s).
    const BigInt s = 4 * k * k + k - 2;
    auto below = [&](long long t) {
      const BigInt lhs = BigInt(2) * (k - 2) * t - BigInt(2) * k * (k - 1);
      if (lhs <= 0) return true;
      return lhs * lhs <= BigInt(k - 1) * (k - 1) * s;
    };
    long long lo = 0, hi = 16 * k + 16;
    while (lo < hi) {
      const long long mid = (lo + hi + 1) / 2;
      if (below(mid)) lo = mid;
      else hi = mid - 1;
    }
    rep.m_star = lo;
  }
  return rep;
}

std::vector<std::string> coord_labels(const ModelSpec& spec) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(spec.M()));
  for (int r = 2; r <= spec.k; ++r) {
    for (int j = 1; j <= spec.p; ++j) {
      out.push_back("eps" + std::to_string(r) + "_" + std::to_string(j));
    }
  }
  for (int r = 2; r <= spec.k; ++r) {
    for (int j = 1; j <= spec.m; ++j) {
      out.push_back("delta" + std::to_string(r) + "_" + std::to_string(j));
    }
  }
  for (int j = 1; j <= spec.m; ++j) {
    out.push_back("lambda_" + std::to_string(j) + "_" + std::to_string(j));
  }
  for (int s = 1; s <= spec.m; ++s) {
    for (int i = s + 1; i <= spec.p; ++i) {
      out.push_back("lambda_" + std::to_string(i) + "_" + std::to_string(s));
    }
  }
  return out;
}

}  // namespace hofa
