#include <algorithm>

#include "microformal/superpoly.hpp"

namespace mf {

namespace {

bool blockOdd(const Scope& sc, const std::pair<Variable, int>& f) {
  return isOdd(sc.parity(f.first)) && f.second % 2 == 1;
}

}  // namespace

int normalizeFactors(const Scope& sc, std::vector<std::pair<Variable, int>>& f) {
  std::erase_if(f, [](const auto& p) { return p.second == 0; });
  for (const auto& [v, e] : f)
    if (e < 0) throw ValidationError("negative exponent");
  int sign = 1;
  // insertion sort; each adjacent transposition of two odd blocks flips the sign
  for (std::size_t i = 1; i < f.size(); ++i) {
    for (std::size_t j = i; j > 0 && f[j].first < f[j - 1].first; --j) {
      if (blockOdd(sc, f[j]) && blockOdd(sc, f[j - 1])) sign = -sign;
      std::swap(f[j], f[j - 1]);
    }
  }
  std::vector<std::pair<Variable, int>> merged;
  merged.reserve(f.size());
  for (const auto& [v, e] : f) {
    if (!merged.empty() && merged.back().first == v)
      merged.back().second += e;
    else
      merged.emplace_back(v, e);
  }
  for (const auto& [v, e] : merged) {
    const VarInfo& vi = sc.info(v);
    if (isOdd(vi.parity) && e >= 2) return 0;
    if (vi.nilpotency > 0 && e >= vi.nilpotency) return 0;
  }
  f = std::move(merged);
  return sign;
}

int mergeMonomials(const Scope& sc, const Monomial& a, const Monomial& b,
                   Monomial& out) {
  std::vector<std::pair<Variable, int>> f;
  f.reserve(a.factors.size() + b.factors.size());
  f.insert(f.end(), a.factors.begin(), a.factors.end());
  f.insert(f.end(), b.factors.begin(), b.factors.end());
  int sign = normalizeFactors(sc, f);
  out.factors = std::move(f);
  return sign;
}

SuperPoly SuperPoly::constant(ScopePtr scope, Rational c) {
  SuperPoly p(std::move(scope));
  if (c != 0) p.terms_.emplace(Monomial{}, std::move(c));
  return p;
}

SuperPoly SuperPoly::var(ScopePtr scope, Variable v) {
  return term(std::move(scope), {{v, 1}}, 1);
}

SuperPoly SuperPoly::term(ScopePtr scope,
                          std::vector<std::pair<Variable, int>> factors,
                          Rational coeff) {
  SuperPoly p(scope);
  if (coeff == 0) return p;
  int sign = normalizeFactors(*scope, factors);
  if (sign == 0) return p;
  p.terms_.emplace(Monomial{std::move(factors)}, sign > 0 ? coeff : -coeff);
  return p;
}

bool SuperPoly::isConstant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational SuperPoly::constantTerm() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<Parity> SuperPoly::parity() const {
  if (terms_.empty()) return Parity::Even;
  std::optional<Parity> p;
  for (const auto& [m, c] : terms_) {
    Parity mp = m.parity(*scope_);
    if (!p)
      p = mp;
    else if (*p != mp)
      return std::nullopt;
  }
  return p;
}

bool SuperPoly::homogeneous(Parity p) const {
  if (terms_.empty()) return true;
  auto q = parity();
  return q && *q == p;
}

int SuperPoly::totalDegree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.totalDegree());
  return d;
}

int SuperPoly::degreeIn(Variable v) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponentOf(v));
  return d;
}

int SuperPoly::classDegree(VarClass cls) const {
  int d = 0;
  for (const auto& [m, c] : terms_)
    d = std::max(d, m.classDegree(*scope_, cls));
  return d;
}

bool SuperPoly::uses(Variable v) const {
  for (const auto& [m, c] : terms_)
    if (m.exponentOf(v) > 0) return true;
  return false;
}

std::vector<Variable> SuperPoly::support() const {
  std::vector<Variable> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors)
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

void SuperPoly::addTerm(Monomial m, Rational c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(std::move(m), c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SuperPoly SuperPoly::operator-() const {
  SuperPoly out(scope_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

SuperPoly& SuperPoly::operator+=(const SuperPoly& o) {
  if (!scope_) scope_ = o.scope_;
  if (o.scope_ && scope_ != o.scope_)
    throw ValidationError("polynomials from different engine scopes");
  for (const auto& [m, c] : o.terms_) addTerm(m, c);
  return *this;
}

SuperPoly& SuperPoly::operator-=(const SuperPoly& o) {
  if (!scope_) scope_ = o.scope_;
  if (o.scope_ && scope_ != o.scope_)
    throw ValidationError("polynomials from different engine scopes");
  for (const auto& [m, c] : o.terms_) addTerm(m, -c);
  return *this;
}

SuperPoly operator*(const SuperPoly& a, const SuperPoly& b) {
  if (a.scope_ && b.scope_ && a.scope_ != b.scope_)
    throw ValidationError("polynomials from different engine scopes");
  SuperPoly out(a.scope_ ? a.scope_ : b.scope_);
  if (!out.scope_) return out;
  const Scope& sc = *out.scope_;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m;
      int sign = mergeMonomials(sc, ma, mb, m);
      if (sign == 0) continue;
      out.addTerm(std::move(m), sign > 0 ? ca * cb : -(ca * cb));
    }
  return out;
}

SuperPoly operator*(const Rational& c, const SuperPoly& p) {
  SuperPoly out(p.scope_);
  if (c == 0) return out;
  for (const auto& [m, k] : p.terms_) out.terms_.emplace(m, c * k);
  return out;
}

SuperPoly SuperPoly::pow(int e) const {
  if (e < 0) throw ValidationError("negative power");
  SuperPoly out = constant(scope_, 1);
  for (int i = 0; i < e; ++i) out = out * *this;
  return out;
}

SuperPoly SuperPoly::leftDerivative(Variable v) const {
  if (!scope_) throw ValidationError("derivative of scope-less polynomial");
  if (v.id >= scope_->size()) throw ValidationError("unknown variable");
  const Scope& sc = *scope_;
  SuperPoly out(scope_);
  bool vOdd = isOdd(sc.parity(v));
  for (const auto& [m, c] : terms_) {
    bool prefixOdd = false;
    for (std::size_t j = 0; j < m.factors.size(); ++j) {
      const auto& [w, e] = m.factors[j];
      if (w == v) {
        Monomial nm = m;
        if (e == 1)
          nm.factors.erase(nm.factors.begin() + j);
        else
          nm.factors[j].second = e - 1;
        Rational nc = c * e;
        if (vOdd && prefixOdd) nc = -nc;
        out.addTerm(std::move(nm), std::move(nc));
        break;  // factors are merged: v occurs once
      }
      if (blockOdd(sc, m.factors[j])) prefixOdd = !prefixOdd;
    }
  }
  return out;
}

SuperPoly SuperPoly::substitute(
    std::span<const std::pair<Variable, SuperPoly>> bindings) const {
  if (!scope_) return *this;
  const Scope& sc = *scope_;
  for (const auto& [v, val] : bindings) {
    if (val.scope_ && val.scope_ != scope_)
      throw ValidationError("binding value from a different engine scope");
    if (!val.homogeneous(sc.parity(v)))
      throw ValidationError("parity mismatch in substitution for '" +
                            sc.name(v) + "'");
  }
  auto lookup = [&](Variable v) -> const SuperPoly* {
    for (const auto& [w, val] : bindings)
      if (w == v) return &val;
    return nullptr;
  };
  SuperPoly out(scope_);
  for (const auto& [m, c] : terms_) {
    SuperPoly acc = constant(scope_, c);
    for (const auto& [v, e] : m.factors) {
      if (const SuperPoly* img = lookup(v))
        acc = acc * img->pow(e);
      else
        acc = acc * term(scope_, {{v, e}}, 1);
      if (acc.isZero()) break;
    }
    out += acc;
  }
  return out;
}

SuperPoly SuperPoly::truncated(const Truncation& t) const {
  SuperPoly out(scope_);
  for (const auto& [m, c] : terms_)
    if (t.admits(*scope_, m)) out.terms_.emplace(m, c);
  return out;
}

std::vector<SuperPoly> SuperPoly::powersOf(Variable v) const {
  std::vector<SuperPoly> out;
  out.emplace_back(scope_);
  const Scope& sc = *scope_;
  bool vOdd = isOdd(sc.parity(v));
  for (const auto& [m, c] : terms_) {
    int k = 0;
    bool prefixOdd = false;
    Monomial nm;
    nm.factors.reserve(m.factors.size());
    bool seen = false;
    for (const auto& fac : m.factors) {
      if (fac.first == v) {
        k = fac.second;
        seen = true;
        continue;
      }
      if (!seen && blockOdd(sc, fac)) prefixOdd = !prefixOdd;
      nm.factors.push_back(fac);
    }
    while (static_cast<int>(out.size()) <= k) out.emplace_back(scope_);
    // moving v^k to the front costs a sign when both it and the prefix are odd
    bool movedOdd = vOdd && k % 2 == 1;
    out[k].addTerm(std::move(nm), movedOdd && prefixOdd ? -c : c);
  }
  return out;
}

SuperPoly SuperPoly::coefficientOf(Variable v, int k) const {
  auto p = powersOf(v);
  if (k < 0 || k >= static_cast<int>(p.size())) return SuperPoly(scope_);
  return p[k];
}

bool equalModuloConstant(const SuperPoly& a, const SuperPoly& b) {
  return (a - b).isConstant();
}

}  // namespace mf
