#pragma once

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "microformal/monomial.hpp"
#include "microformal/rational.hpp"
#include "microformal/scope.hpp"

namespace mf {

/// Degree caps. An absent entry means no cap. Nilpotent parameters are
/// handled by the ring itself; these caps implement "mod eps^{N+1}" and the
/// fiber/base truncation orders that every series result carries.
struct Truncation {
  std::optional<int> base;
  std::optional<int> fiber;
  std::vector<std::pair<Variable, int>> vars;

  static Truncation varCap(Variable v, int cap) {
    Truncation t;
    t.vars.emplace_back(v, cap);
    return t;
  }
  static Truncation fiberCap(int cap) {
    Truncation t;
    t.fiber = cap;
    return t;
  }
  static Truncation baseCap(int cap) {
    Truncation t;
    t.base = cap;
    return t;
  }

  bool admits(const Scope& sc, const Monomial& m) const {
    if (base && m.classDegree(sc, VarClass::Base) > *base) return false;
    if (fiber && m.classDegree(sc, VarClass::Fiber) > *fiber) return false;
    for (const auto& [v, cap] : vars)
      if (m.exponentOf(v) > cap) return false;
    return true;
  }
};

/// Element of the free supercommutative algebra over a Scope, with exact
/// rational coefficients. Immutable in spirit: all operations return new
/// values; no term with zero coefficient is ever stored.
class SuperPoly {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialLess>;

  SuperPoly() = default;  // scope-less zero; usable only as a placeholder
  explicit SuperPoly(ScopePtr scope) : scope_(std::move(scope)) {}

  static SuperPoly constant(ScopePtr scope, Rational c);
  static SuperPoly var(ScopePtr scope, Variable v);
  /// Normalizes an arbitrary factor sequence into a single term.
  static SuperPoly term(ScopePtr scope,
                        std::vector<std::pair<Variable, int>> factors,
                        Rational coeff);

  const ScopePtr& scope() const { return scope_; }
  const TermMap& terms() const { return terms_; }

  bool isZero() const { return terms_.empty(); }
  bool isConstant() const;
  Rational constantTerm() const;

  /// Total parity when all monomials share one; nullopt otherwise. The zero
  /// polynomial reports Even but satisfies homogeneous() for both parities.
  std::optional<Parity> parity() const;
  bool homogeneous(Parity p) const;

  int totalDegree() const;
  int degreeIn(Variable v) const;
  int classDegree(VarClass cls) const;
  bool uses(Variable v) const;
  std::vector<Variable> support() const;

  SuperPoly operator-() const;
  SuperPoly& operator+=(const SuperPoly& o);
  SuperPoly& operator-=(const SuperPoly& o);
  friend SuperPoly operator+(SuperPoly a, const SuperPoly& b) { return a += b; }
  friend SuperPoly operator-(SuperPoly a, const SuperPoly& b) { return a -= b; }
  friend SuperPoly operator*(const SuperPoly& a, const SuperPoly& b);
  SuperPoly& operator*=(const SuperPoly& o) { return *this = *this * o; }
  friend SuperPoly operator*(const Rational& c, const SuperPoly& p);
  friend SuperPoly operator*(const SuperPoly& p, const Rational& c) { return c * p; }
  SuperPoly pow(int e) const;

  bool operator==(const SuperPoly& o) const { return terms_ == o.terms_; }

  /// Graded Leibniz rule from the left:
  /// d_v(fg) = (d_v f) g + (-1)^{v f} f (d_v g) for homogeneous f.
  SuperPoly leftDerivative(Variable v) const;

  /// Simultaneous substitution; a ring homomorphism. Each bound value must
  /// be homogeneous of the bound variable's parity (zero always passes).
  SuperPoly substitute(std::span<const std::pair<Variable, SuperPoly>> bindings) const;
  SuperPoly substitute(const std::vector<std::pair<Variable, SuperPoly>>& b) const {
    return substitute(std::span<const std::pair<Variable, SuperPoly>>(b));
  }

  SuperPoly truncated(const Truncation& t) const;

  /// Unique decomposition f = sum_k v^k f_k with v^k factored to the left;
  /// index k of the returned vector holds f_k (v-free).
  std::vector<SuperPoly> powersOf(Variable v) const;
  SuperPoly coefficientOf(Variable v, int k) const;

  void addTerm(Monomial m, Rational c);  // normal-form input assumed

 private:
  ScopePtr scope_;
  TermMap terms_;
};

/// Difference is a constant (generating functions are defined up to one).
bool equalModuloConstant(const SuperPoly& a, const SuperPoly& b);

}  // namespace mf
