#pragma once

#include <vector>

#include "hamfact/matrix.hpp"
#include "hamfact/multipoly.hpp"

namespace hamfact {

// Polynomial force field f(x): one component per position variable, all over
// the same position variable list.
struct PolyField {
    std::vector<MultiPoly> components;

    std::size_t n() const { return components.size(); }
    bool is_zero() const;
    std::size_t max_degree() const;
};

// true iff the Jacobian of f is symmetric as a polynomial identity
bool check_conservative(const PolyField& f);

// Potential V with -grad V == f exactly and V(0) = 0, by monomial-wise line
// integration along the coordinate axes in order. Throws NotConservativeError.
MultiPoly integrate_potential(const PolyField& f);

// component-wise rational linear combination g_i = sum_j m(i,j) f_j
PolyField apply_matrix(const RatMatrix& m, const PolyField& f);

}  // namespace hamfact
