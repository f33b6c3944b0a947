#ifndef HOFA_CODIM_HPP
#define HOFA_CODIM_HPP

#include <optional>
#include <vector>

#include "hofa/polynomial.hpp"

namespace hofa {

/// e_0(1..k), ..., e_k(1..k): coefficients of prod_{i=1}^k (x + i).
std::vector<BigInt> elementary_symmetric(int k);

/// Linear coefficient of h: u(k,m) = e_{k-1}^{(k)} - k!(k+m), negative for m >= 1.
BigInt u_coeff(int k, int m);

/// Constant-term contribution v(k,m) = (k!/2) m (m - 2k + 1).
BigInt v_coeff(int k, int m);

/// The codimension polynomial h_m^(k) in p, degree k, integer coefficients.
/// Built from both the binomial closed form and the elementary-symmetric
/// expansion, which must agree coefficient-wise.
Poly h_poly(int k, int m);

/// Checks k!(N - M) == h_m^(k)(p).
bool nm_identity(int k, int p, int m);

enum class RootRegime { OneRoot, TwoRoots, NoRoot };

struct RegimeReport {
  int k;
  int m;
  std::vector<RootInterval> roots;  // positive roots of h_m^(k)
  RootRegime regime;
  long long p0;  // smallest integer p with h > 0 for all p' >= p
};

RegimeReport regime(int k, int m);

/// A multiplier g = (p + b)^degree such that h_m^(k) * g has nonnegative
/// coefficients, certifying the absence of positive real roots.
struct PolyaCertificate {
  Rational shift_b;
  unsigned degree;
  Poly multiplier;
};

std::optional<PolyaCertificate> polya_certificate(int k, int m);

/// Discriminant quadratic in m controlling feasibility of a degree-1
/// multiplier: u(k,m)^2 - v(k,m) e_{k-2}^{(k)}. Nonpositive values mean
/// the paper interval [-u/e_{k-2}, -v/u] for b is nonempty.
Poly hk_poly(int k);

}  // namespace hofa

#endif
