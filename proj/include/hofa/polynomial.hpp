#ifndef HOFA_POLYNOMIAL_HPP
#define HOFA_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "hofa/rational.hpp"

namespace hofa {

/// Univariate polynomial with exact rational coefficients, ascending degree.
/// The zero polynomial has an empty coefficient vector.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  static Poly constant(Rational c);
  static Poly monomial(int degree, Rational c);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const Rational& coeff(int i) const;  // 0 beyond degree
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational eval(const Rational& x) const;
  Poly derivative() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& s) const;
  Poly operator-() const;
  bool operator==(const Poly& o) const { return c_ == o.c_; }

  /// Remainder of *this divided by o (o nonzero).
  Poly rem(const Poly& o) const;

  std::string str(const std::string& var = "p") const;

 private:
  void normalize();
  std::vector<Rational> c_;
};

/// Half-open isolating interval (lo, hi] containing exactly one distinct root.
struct RootInterval {
  Rational lo;
  Rational hi;
};

std::vector<Poly> sturm_sequence(const Poly& f);

/// Distinct real roots of f in (a, b], counted by Sturm sign variations.
int sturm_count(const std::vector<Poly>& seq, const Rational& a, const Rational& b);

/// Upper bound B such that all real roots of f lie in [-B, B].
Rational cauchy_root_bound(const Poly& f);

/// Isolating intervals for the distinct positive real roots of f,
/// bisection-refined to width <= 2^-20.
std::vector<RootInterval> positive_roots(const Poly& f);

}  // namespace hofa

#endif
