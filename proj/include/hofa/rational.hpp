#ifndef HOFA_RATIONAL_HPP
#define HOFA_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace hofa {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Canonical wire form is "num/den", denominator always present.
inline std::string rational_to_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

inline Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational literal: " + s);
  }
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace hofa

#endif
