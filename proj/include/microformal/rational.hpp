#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace mf {

/// Exact coefficient arithmetic; every identity check in this project is an
/// exact equality, so no floating point anywhere.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Canonical "p/q" (or "p") form.
inline std::string toString(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace mf
