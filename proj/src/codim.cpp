#include "hofa/codim.hpp"

#include <stdexcept>

#include "hofa/combinatorics.hpp"

namespace hofa {

namespace {

BigInt floor_rational(const Rational& q) {
  BigInt n = numerator(q);
  BigInt d = denominator(q);  // d > 0
  BigInt f = n / d;
  if (n % d != 0 && n < 0) --f;
  return f;
}

bool all_coeffs_nonneg(const Poly& f) {
  for (const Rational& c : f.coeffs()) {
    if (c < 0) return false;
  }
  return true;
}

}  // namespace

std::vector<BigInt> elementary_symmetric(int k) {
  if (k < 1) throw std::invalid_argument("elementary_symmetric requires k >= 1");
  std::vector<BigInt> e(static_cast<std::size_t>(k) + 1, BigInt(0));
  e[0] = 1;
  for (int i = 1; i <= k; ++i) {
    for (int j = i; j >= 1; --j) e[static_cast<std::size_t>(j)] += BigInt(i) * e[static_cast<std::size_t>(j - 1)];
  }
  return e;
}

BigInt u_coeff(int k, int m) {
  const auto e = elementary_symmetric(k);
  return e[static_cast<std::size_t>(k - 1)] - factorial_big(k) * (k + m);
}

BigInt v_coeff(int k, int m) {
  return factorial_big(k) / 2 * m * (m - 2 * k + 1);
}

Poly h_poly(int k, int m) {
  if (k < 2 || m < 1) throw std::invalid_argument("h_poly requires k >= 2, m >= 1");
  const BigInt kfac = factorial_big(k);

  // Closed form: prod_{i=1}^k (p+i) - k!(k+m) p + k![C(m,2) - (k-1)m - 1].
  Poly closed = Poly::constant(Rational(1));
  for (int i = 1; i <= k; ++i) {
    closed = closed * Poly({Rational(i), Rational(1)});
  }
  closed = closed + Poly::monomial(1, -Rational(kfac * (k + m)));
  closed = closed + Poly::constant(Rational(kfac * (binomial_big(m, 2) - BigInt(k - 1) * m - 1)));

  // Elementary-symmetric expansion: sum_{j<=k-2} e_j p^{k-j} + u p + v.
  const auto e = elementary_symmetric(k);
  std::vector<Rational> coeffs(static_cast<std::size_t>(k) + 1, Rational(0));
  for (int j = 0; j <= k - 2; ++j) {
    coeffs[static_cast<std::size_t>(k - j)] = Rational(e[static_cast<std::size_t>(j)]);
  }
  coeffs[1] = Rational(u_coeff(k, m));
  coeffs[0] = Rational(v_coeff(k, m));
  Poly expanded(std::move(coeffs));

  if (!(closed == expanded)) throw std::logic_error("h_poly: constructions disagree");
  return closed;
}

bool nm_identity(int k, int p, int m) {
  const BigInt N = binomial_big(p + k, k) - p - 1;
  const BigInt M = BigInt(k - 1) * (p + m) + BigInt(p) * m - binomial_big(m, 2);
  const Rational lhs = Rational(factorial_big(k) * (N - M));
  return lhs == h_poly(k, m).eval(Rational(p));
}

RegimeReport regime(int k, int m) {
  if (k < 3) throw std::invalid_argument("regime requires k >= 3");
  const Poly h = h_poly(k, m);

  // Descartes sign pattern: all coefficients of degree >= 2 are positive and
  // the linear one is negative; the constant term is (k!/2) m (m - 2k + 1),
  // negative for m <= 2k-2, zero at m = 2k-1, positive for m >= 2k.
  const Rational c0 = h.coeff(0);
  const int c0_sign = c0 < 0 ? -1 : (c0 == 0 ? 0 : 1);
  const int want = m <= 2 * k - 2 ? -1 : (m == 2 * k - 1 ? 0 : 1);
  if (c0_sign != want) {
    throw std::logic_error("regime: constant-term sign pattern violated");
  }

  RegimeReport rep;
  rep.k = k;
  rep.m = m;
  rep.roots = positive_roots(h);
  switch (rep.roots.size()) {
    case 0: rep.regime = RootRegime::NoRoot; break;
    case 1: rep.regime = RootRegime::OneRoot; break;
    case 2: rep.regime = RootRegime::TwoRoots; break;
    default: throw std::logic_error("regime: more than two positive roots");
  }

  if (rep.roots.empty()) {
    rep.p0 = 1;
  } else {
    const RootInterval& top = rep.roots.back();
    // Smallest integer strictly above the largest root. The isolating
    // interval (lo, hi] has width <= 2^-20, so it contains at most one
    // integer; resolve against it exactly.
    const BigInt cand = floor_rational(top.hi);
    long long p0;
    if (Rational(cand) > top.lo && Rational(cand) <= top.hi) {
      const Rational at = h.eval(Rational(cand));
      if (at == 0) p0 = cand.convert_to<long long>() + 1;       // root is the integer itself
      else if (at > 0) p0 = cand.convert_to<long long>();        // root below the integer
      else p0 = cand.convert_to<long long>() + 1;                // root above the integer
    } else {
      p0 = (floor_rational(top.hi) + 1).convert_to<long long>();
    }
    rep.p0 = std::max(p0, 1LL);
  }
  return rep;
}

std::optional<PolyaCertificate> polya_certificate(int k, int m) {
  if (k < 3) throw std::invalid_argument("polya_certificate requires k >= 3");
  if (m < 2 * k - 1) return std::nullopt;  // v(k,m) < 0: constant term cannot certify
  const Poly h = h_poly(k, m);

  const auto e = elementary_symmetric(k);
  const BigInt u = u_coeff(k, m);
  const BigInt v = v_coeff(k, m);
  const BigInt ek2 = e[static_cast<std::size_t>(k - 2)];

  // Degree-1 multiplier with b in [-u/e_{k-2}, -v/u], when that interval
  // is nonempty (u^2 <= v e_{k-2}).
  if (u * u <= v * ek2) {
    // Divide rather than use the two-argument constructor: the latter
    // rejects negative denominators, and u < 0 here.
    const Rational lo = Rational(-u) / Rational(ek2);
    const Rational hi = Rational(-v) / Rational(u);
    const Rational b = (lo + hi) / 2;
    const Poly g({b, Rational(1)});
    if (all_coeffs_nonneg(h * g)) return PolyaCertificate{b, 1, g};
  }

  // Power escalation: g = (p+1)^d. When h is positive on [0, infinity) such
  // a d exists; when h has a positive root, no d can succeed.
  constexpr unsigned kMaxDegree = 600;
  const Poly step({Rational(1), Rational(1)});
  Poly prod = h;
  Poly g = Poly::constant(Rational(1));
  for (unsigned d = 1; d <= kMaxDegree; ++d) {
    prod = prod * step;
    g = g * step;
    if (all_coeffs_nonneg(prod)) return PolyaCertificate{Rational(1), d, g};
  }
  return std::nullopt;
}

Poly hk_poly(int k) {
  if (k < 3) throw std::invalid_argument("hk_poly requires k >= 3");
  const auto e = elementary_symmetric(k);
  const BigInt kfac = factorial_big(k);
  const BigInt A = -kfac;                                        // u = A m + B
  const BigInt B = e[static_cast<std::size_t>(k - 1)] - kfac * k;
  const BigInt ek2 = e[static_cast<std::size_t>(k - 2)];
  const Rational half_ek2 = Rational(kfac * ek2, 2);
  // u^2 - v e_{k-2} with v = (k!/2) m (m - 2k + 1).
  return Poly({Rational(B * B),
               Rational(2 * A * B) + half_ek2 * Rational(2 * k - 1),
               Rational(A * A) - half_ek2});
}

}  // namespace hofa
