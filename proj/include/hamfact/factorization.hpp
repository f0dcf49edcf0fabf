#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hamfact/matrix.hpp"
#include "hamfact/multipoly.hpp"
#include "hamfact/unipoly.hpp"

namespace hamfact {

// M = A * S with A alternating invertible and S symmetric. space_dim is the
// dimension of the space of symmetric solutions the factor was drawn from;
// other valid choices of S exist whenever it exceeds one.
struct ASPair {
    RatMatrix a;
    RatMatrix s;
    std::size_t space_dim = 0;
};

// Reading of an ASPair as symplectic data: omega = a^-1 is the matrix of the
// 2-form, hessian = s is the full Hessian of the quadratic Hamiltonian
// h = (1/2) xi^T s xi, and the bracket table {xi_i, xi_j} equals a itself.
struct HamiltonianStructure {
    RatMatrix omega;
    RatMatrix hessian;
    MultiPoly h;
    RatMatrix bracket_table;
};

struct FactorOptions {
    std::uint64_t seed = 0;
    int max_tries = 64;
};

// Solves M^T S + S M = 0 over symmetric S, picks an invertible member and
// returns (A = M S^-1, S). Throws NotHamiltonianError when no invertible
// solution exists (exactly when the conjugacy criterion rejects M) and
// SingularMatrixError for singular M.
ASPair factor(const RatMatrix& m, const FactorOptions& opt = {});

// Factorization of the companion block of an even monic polynomial
// t^(2r) - a_(2r-2) t^(2r-2) - ... - a_0 via the anti-diagonal coefficient
// recursions; the product identity A*S == companion is always verified, with
// a linear pattern solve and the generic factorization as fallbacks.
ASPair factor_companion_block(const UniPoly& even_poly);

// (L^-1 A L^-T, L^T S L); preserves alternation/symmetry, conjugates the product.
ASPair conjugate_pair(const ASPair& pair, const RatMatrix& lambda);

// Requires pair.a * pair.s == m; verifies omega * m == hessian. The optional
// variable list (size 2n, momenta then positions) names the Hamiltonian's
// variables; defaults to phase_space_vars(n).
HamiltonianStructure to_structure(const ASPair& pair, const RatMatrix& m,
                                  std::vector<std::string> vars = {});

// phase-space coordinate names: (p, x) for n=1, (p, q, x, y) for n=2,
// (p1..pn, x1..xn) otherwise
std::vector<std::string> phase_space_vars(std::size_t n);
std::vector<std::string> position_vars(std::size_t n);

// momentum names matching a list of position names: x -> p, y -> q,
// x<k> -> p<k>, y<k> -> q<k>, anything else gets a p_ prefix; collisions
// are resolved by appending underscores
std::vector<std::string> momentum_names(const std::vector<std::string>& positions);
// momenta followed by the positions themselves
std::vector<std::string> phase_space_vars(const std::vector<std::string>& positions);

}  // namespace hamfact
