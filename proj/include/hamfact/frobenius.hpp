#pragma once

#include <vector>

#include "hamfact/matrix.hpp"
#include "hamfact/unipoly.hpp"

namespace hamfact {

// Rational canonical form: block diagonal of companion matrices of the
// invariant factors, with the conjugating transform.
struct FrobeniusForm {
    std::vector<UniPoly> invariant_factors;  // monic, each divides the next, product = char poly
    RatMatrix form;                          // block-diagonal companions, block order matches factors
    RatMatrix transform;                     // invertible L with L^-1 * m * L == form
};

// Companion matrix of a monic p: ones on the subdiagonal, last column -coeffs.
RatMatrix companion_matrix(const UniPoly& p);

// Invariant-factor decomposition over the rationals (cyclic-subspace
// algorithm); exact, works for any square matrix.
FrobeniusForm frobenius(const RatMatrix& m);

// true iff all odd-degree coefficients of the characteristic polynomial vanish
bool even_char_poly(const RatMatrix& m);

// true iff m and -m have the same invariant factors, i.e. they are conjugate.
// Throws SingularMatrixError for singular input.
bool is_hamiltonian_candidate(const RatMatrix& m);

}  // namespace hamfact
