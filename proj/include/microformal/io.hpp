#pragma once

#include <map>
#include <string>
#include <string_view>

#include "microformal/superpoly.hpp"

namespace mf {

/// Deterministic textual form: terms in the canonical order, coefficients
/// as "p/q". The same grammar is accepted by parsePoly, so every printed
/// polynomial round-trips.
std::string toText(const SuperPoly& p);

/// Names visible to the parser (chart variables, parameters, ...).
using VarNames = std::map<std::string, Variable, std::less<>>;

/// Grammar: expr := ['-'] term (('+'|'-') term)*; term := factor ('*' factor)*;
/// factor := primary ['^' nat]; primary := rational | name | '(' expr ')'.
SuperPoly parsePoly(const ScopePtr& scope, std::string_view text,
                    const VarNames& names);

}  // namespace mf
