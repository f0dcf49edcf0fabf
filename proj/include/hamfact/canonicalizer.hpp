#pragma once

#include <cstdint>
#include <optional>

#include "hamfact/factorization.hpp"
#include "hamfact/matrix.hpp"
#include "hamfact/multipoly.hpp"
#include "hamfact/reduction.hpp"

namespace hamfact {

// Surgery output: the Hamiltonian compatible with the canonical symplectic
// form together with the witnesses linking it back to the standard form.
struct CanonicalResult {
    RatMatrix s1;            // symmetric invertible
    RatMatrix s2;            // -S1 B2
    RatMatrix x_mat;         // X = (1/2) S1 B1
    RatMatrix h_can_matrix;  // (S1^-1, S1^-1 X; X^T S1^-1, X^T S1^-1 X + S2)
    MultiPoly h_can;
    RatMatrix m_can;         // J * h_can_matrix with J = (0 -I; I 0)
    PElement p_link;         // L^-1 M_std L == M_can
};

// L = (1/2)(x'^T kinetic x' + x^T cross x' + x^T potential x')
struct QuadraticLagrangian {
    RatMatrix kinetic;    // symmetric invertible
    RatMatrix cross;
    RatMatrix potential;
    MultiPoly l;
};

// Symmetric invertible S1 with S1 B1 antisymmetric and S1 B2 symmetric, found
// by an exact linear solve plus the deterministic invertible-member search.
// Empty when the surgery hypotheses cannot be met.
std::optional<RatMatrix> solve_s1(const EquationsOfMotion& eom, std::uint64_t seed = 0, int tries = 64);

// The optional position-name list (size n) names the polynomial variables;
// defaults to position_vars(n).
CanonicalResult build_canonical(const EquationsOfMotion& eom, const RatMatrix& s1,
                                std::vector<std::string> positions = {});

QuadraticLagrangian build_lagrangian(const EquationsOfMotion& eom, const RatMatrix& s1,
                                     std::vector<std::string> positions = {});

// Lagrangian with the given coefficient matrices (kinetic must be symmetric
// invertible); renders the polynomial form.
QuadraticLagrangian lagrangian_from_matrices(const RatMatrix& kinetic, const RatMatrix& cross,
                                             const RatMatrix& potential,
                                             std::vector<std::string> positions = {});

// Variational equations: B1 = S1^-1 skew(cross), B2 = S1^-1 sym(potential).
EquationsOfMotion euler_lagrange(const QuadraticLagrangian& ql);

// true iff the Lagrangians differ by a total time derivative: equal kinetic
// parts, equal skew cross parts, equal symmetric potential parts
bool lagrangian_equivalent(const QuadraticLagrangian& a, const QuadraticLagrangian& b);

// The decomposition M_std = (A1 -S1^-1; S1^-1 0) * diag(S1, S2) induced by a
// valid S1; reproduces the momentum-position symplectic pairing directly in
// standard coordinates.
ASPair semi_canonical_pair(const EquationsOfMotion& eom, const RatMatrix& s1);

// position + velocity variable names for Lagrangian polynomials
std::vector<std::string> lagrangian_vars(std::size_t n);
std::vector<std::string> lagrangian_vars(const std::vector<std::string>& positions);

}  // namespace hamfact
