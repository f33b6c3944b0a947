#include "hofa/cumulants.hpp"

#include "hofa/combinatorics.hpp"

namespace hofa {

std::vector<Rational> analytic_moments(Dist dist, int max_order) {
  if (max_order < 1) throw std::invalid_argument("max_order must be >= 1");
  std::vector<Rational> m(static_cast<std::size_t>(max_order));
  switch (dist) {
    case Dist::CenteredExponential: {
      // E[(X-1)^r] for X ~ Exp(1): the derangement numbers !r.
      Rational prev2 = 1;  // !0
      Rational prev1 = 0;  // !1
      m[0] = prev1;
      for (int r = 2; r <= max_order; ++r) {
        Rational cur = Rational(r - 1) * (prev1 + prev2);
        m[static_cast<std::size_t>(r - 1)] = cur;
        prev2 = prev1;
        prev1 = cur;
      }
      break;
    }
    case Dist::UniformSym:
      for (int r = 1; r <= max_order; ++r) {
        m[static_cast<std::size_t>(r - 1)] = (r % 2 == 0) ? Rational(1, r + 1) : Rational(0);
      }
      break;
    case Dist::Rademacher:
      for (int r = 1; r <= max_order; ++r) {
        m[static_cast<std::size_t>(r - 1)] = (r % 2 == 0) ? Rational(1) : Rational(0);
      }
      break;
  }
  return m;
}

std::vector<Rational> analytic_cumulants(Dist dist, int max_order) {
  const auto moments = analytic_moments(dist, max_order);
  auto seq = TensorSequence<Rational>::zeros(1, std::max(2, max_order), false);
  for (int r = 1; r <= max_order; ++r) {
    seq.order(r)(std::vector<int>(static_cast<std::size_t>(r), 1)) = moments[static_cast<std::size_t>(r - 1)];
  }
  const auto cum = moments_to_cumulants(seq);
  std::vector<Rational> out(static_cast<std::size_t>(max_order));
  for (int r = 1; r <= max_order; ++r) {
    out[static_cast<std::size_t>(r - 1)] = cum.order(r)(std::vector<int>(static_cast<std::size_t>(r), 1));
  }
  return out;
}

}  // namespace hofa
