#pragma once

#include <map>
#include <string>
#include <vector>

#include "hamfact/multipoly.hpp"
#include "hamfact/potential.hpp"
#include "hamfact/reduction.hpp"

namespace hamfact {

// One second-order equation per line (or per ';'):
//   <var>'' <linear terms in vars and vars'> = <polynomial in vars>
// Variables are declared by the order of the ''-heads; every other identifier
// is a parameter and must be bound. Literals are integers or fractions p/q;
// operators are + - * ^ and parentheses; ' marks derivatives.
struct ParsedSystem {
    std::vector<std::string> vars;  // position variable names
    EquationsOfMotion eom;
    PolyField force;                // nonlinear position terms, one component per variable
};

ParsedSystem parse_eom(const std::string& text, const std::map<std::string, Rational>& params,
                       std::size_t max_force_degree = 6);

// Canonical text form; parse_eom(render_eom(s)) reproduces (B1, B2, f).
std::string render_eom(const ParsedSystem& sys);

// A plain polynomial in the given variables (no derivatives), same grammar.
MultiPoly parse_polynomial(const std::string& text, const std::vector<std::string>& vars,
                           const std::map<std::string, Rational>& params);

// gamma -> g, lambda -> l, subscript digits -> digits
std::string normalize_name(const std::string& name);

}  // namespace hamfact
