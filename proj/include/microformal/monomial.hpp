#pragma once

#include <utility>
#include <vector>

#include "microformal/scope.hpp"

namespace mf {

/// Sign-normal form of a product of variable powers: factors sorted by the
/// global variable order, odd variables with exponent exactly 1. Reordering
/// an arbitrary factor sequence into this form costs only the Koszul sign.
struct Monomial {
  std::vector<std::pair<Variable, int>> factors;  // sorted by id, exps >= 1

  bool empty() const { return factors.empty(); }

  int totalDegree() const {
    int d = 0;
    for (const auto& [v, e] : factors) d += e;
    return d;
  }

  int exponentOf(Variable v) const {
    for (const auto& [w, e] : factors)
      if (w == v) return e;
    return 0;
  }

  int classDegree(const Scope& sc, VarClass cls) const {
    int d = 0;
    for (const auto& [v, e] : factors)
      if (sc.cls(v) == cls) d += e;
    return d;
  }

  Parity parity(const Scope& sc) const {
    int p = 0;
    for (const auto& [v, e] : factors)
      if (isOdd(sc.parity(v))) p += e;
    return static_cast<Parity>(p % 2);
  }

  bool operator==(const Monomial&) const = default;
};

/// Graded-lexicographic term order; also the canonical printing order.
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = a.totalDegree(), db = b.totalDegree();
    if (da != db) return da < db;
    auto ai = a.factors.begin(), bi = b.factors.begin();
    for (; ai != a.factors.end() && bi != b.factors.end(); ++ai, ++bi) {
      if (ai->first != bi->first) return ai->first < bi->first;
      if (ai->second != bi->second) return ai->second > bi->second;
    }
    return false;  // equal degree and one is a prefix => identical
  }
};

/// Sorts a factor sequence into normal form, merging repeated variables.
/// Returns the Koszul sign (+1/-1), or 0 when the product vanishes (square
/// of an odd variable, or a parameter reaching its nilpotency order).
int normalizeFactors(const Scope& sc, std::vector<std::pair<Variable, int>>& f);

/// Product of two normal forms; returns the sign as above.
int mergeMonomials(const Scope& sc, const Monomial& a, const Monomial& b,
                   Monomial& out);

}  // namespace mf
