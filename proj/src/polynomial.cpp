#include "hofa/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hofa {

namespace {
const Rational kZero(0);

int sgn(const Rational& q) {
  if (q > 0) return 1;
  if (q < 0) return -1;
  return 0;
}

int sign_variations(const std::vector<int>& signs) {
  int v = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}
}  // namespace

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

Poly Poly::constant(Rational c) { return Poly({std::move(c)}); }

Poly Poly::monomial(int degree, Rational c) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1, Rational(0));
  v.back() = std::move(c);
  return Poly(std::move(v));
}

void Poly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<std::size_t>(i)];
}

Rational Poly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<int>(i));
  return Poly(std::move(d));
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return Poly(std::move(v));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  std::vector<Rational> v(c_);
  for (auto& q : v) q = -q;
  return Poly(std::move(v));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  }
  return Poly(std::move(v));
}

Poly Poly::operator*(const Rational& s) const {
  std::vector<Rational> v(c_);
  for (auto& q : v) q *= s;
  return Poly(std::move(v));
}

Poly Poly::rem(const Poly& o) const {
  if (o.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> r(c_);
  const int dn = o.degree();
  const Rational& lead = o.c_.back();
  while (static_cast<int>(r.size()) - 1 >= dn) {
    if (r.back() == 0) {
      r.pop_back();
      continue;
    }
    const Rational q = r.back() / lead;
    const std::size_t shift = r.size() - 1 - static_cast<std::size_t>(dn);
    for (int i = 0; i <= dn; ++i) r[shift + static_cast<std::size_t>(i)] -= q * o.c_[static_cast<std::size_t>(i)];
    r.pop_back();
  }
  return Poly(std::move(r));
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& q = coeff(i);
    if (q == 0) continue;
    if (!first) os << (q > 0 ? " + " : " - ");
    else if (q < 0) os << "-";
    first = false;
    const Rational a = abs(q);
    const bool unit = (a == 1 && i > 0);
    if (!unit) {
      os << numerator(a).str();
      if (denominator(a) != 1) os << "/" << denominator(a).str();
    }
    if (i >= 1) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::vector<Poly> sturm_sequence(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("Sturm sequence of the zero polynomial");
  std::vector<Poly> seq;
  seq.push_back(f);
  Poly d = f.derivative();
  if (!d.is_zero()) seq.push_back(d);
  while (seq.size() >= 2 && !seq.back().is_zero()) {
    Poly r = -(seq[seq.size() - 2].rem(seq.back()));
    if (r.is_zero()) break;
    seq.push_back(std::move(r));
  }
  return seq;
}

int sturm_count(const std::vector<Poly>& seq, const Rational& a, const Rational& b) {
  std::vector<int> sa, sb;
  sa.reserve(seq.size());
  sb.reserve(seq.size());
  for (const Poly& f : seq) {
    sa.push_back(sgn(f.eval(a)));
    sb.push_back(sgn(f.eval(b)));
  }
  return sign_variations(sa) - sign_variations(sb);
}

Rational cauchy_root_bound(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("root bound of the zero polynomial");
  const Rational lead = Rational(abs(f.coeff(f.degree())));
  Rational mx(0);
  for (int i = 0; i < f.degree(); ++i) mx = std::max(mx, Rational(abs(f.coeff(i))));
  return Rational(1) + mx / lead;
}

std::vector<RootInterval> positive_roots(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("positive_roots of the zero polynomial");
  const auto seq = sturm_sequence(f);
  const Rational bound = cauchy_root_bound(f);
  const Rational width_cap = Rational(1, 1 << 20);

  std::vector<RootInterval> done;
  std::vector<RootInterval> work;
  if (sturm_count(seq, Rational(0), bound) > 0) work.push_back({Rational(0), bound});
  while (!work.empty()) {
    RootInterval iv = work.back();
    work.pop_back();
    const int n = sturm_count(seq, iv.lo, iv.hi);
    if (n == 0) continue;
    if (n == 1 && iv.hi - iv.lo <= width_cap) {
      done.push_back(iv);
      continue;
    }
    const Rational mid = (iv.lo + iv.hi) / 2;
    work.push_back({iv.lo, mid});
    work.push_back({mid, iv.hi});
  }
  std::sort(done.begin(), done.end(),
            [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
  return done;
}

}  // namespace hofa
