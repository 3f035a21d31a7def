#pragma once

namespace mf {

/// Z_2 grading of variables and homogeneous polynomials.
enum class Parity : unsigned char { Even = 0, Odd = 1 };

constexpr Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>((static_cast<int>(a) + static_cast<int>(b)) % 2);
}

constexpr bool isOdd(Parity p) { return p == Parity::Odd; }

constexpr const char* toString(Parity p) {
  return p == Parity::Even ? "even" : "odd";
}

}  // namespace mf
