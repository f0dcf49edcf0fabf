#include "hamfact/canonicalizer.hpp"

#include <stdexcept>

#include "hamfact/errors.hpp"
#include "hamfact/symmetric_solve.hpp"

namespace hamfact {

namespace {

void require_valid_s1(const EquationsOfMotion& eom, const RatMatrix& s1) {
    if (!s1.is_symmetric()) throw Error("S1 is not symmetric");
    if (!is_invertible(s1)) throw Error("S1 is not invertible");
    if (!(s1 * eom.b1).is_antisymmetric()) throw Error("S1 B1 is not antisymmetric");
    if (!(s1 * eom.b2).is_symmetric()) throw Error("S1 B2 is not symmetric");
}

RatMatrix skew_part(const RatMatrix& m) { return (m - m.transpose()) * Rational(1, 2); }
RatMatrix sym_part(const RatMatrix& m) { return (m + m.transpose()) * Rational(1, 2); }

MultiPoly lagrangian_poly(const RatMatrix& kinetic, const RatMatrix& cross, const RatMatrix& potential,
                          const std::vector<std::string>& vars) {
    const std::size_t n = kinetic.rows();
    MultiPoly l(vars);
    const Rational half(1, 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            MultiPoly::Exps e(2 * n, 0);
            if (!kinetic(i, j).is_zero()) {
                e.assign(2 * n, 0);
                e[n + i] += 1;
                e[n + j] += 1;
                l.add_term(e, half * kinetic(i, j));
            }
            if (!cross(i, j).is_zero()) {
                e.assign(2 * n, 0);
                e[i] += 1;
                e[n + j] += 1;
                l.add_term(e, half * cross(i, j));
            }
            if (!potential(i, j).is_zero()) {
                e.assign(2 * n, 0);
                e[i] += 1;
                e[j] += 1;
                l.add_term(e, half * potential(i, j));
            }
        }
    return l;
}

}  // namespace

std::vector<std::string> lagrangian_vars(std::size_t n) { return lagrangian_vars(position_vars(n)); }

std::vector<std::string> lagrangian_vars(const std::vector<std::string>& positions) {
    std::vector<std::string> v = positions;
    for (const auto& name : positions) v.push_back(name + "'");
    return v;
}

std::optional<RatMatrix> solve_s1(const EquationsOfMotion& eom, std::uint64_t seed, int tries) {
    const std::size_t n = eom.b1.rows();
    auto basis = symmetric_kernel(n, [&](const RatMatrix& s) {
        const RatMatrix r1 = s * eom.b1 + (s * eom.b1).transpose();
        const RatMatrix r2 = s * eom.b2 - (s * eom.b2).transpose();
        return vstack(r1, r2);
    });
    return find_invertible_member(basis, seed, tries);
}

CanonicalResult build_canonical(const EquationsOfMotion& eom, const RatMatrix& s1,
                                std::vector<std::string> positions) {
    require_valid_s1(eom, s1);
    const std::size_t n = s1.rows();
    if (positions.empty()) positions = position_vars(n);
    if (positions.size() != n) throw DimensionError("position name count mismatch");
    CanonicalResult res;
    res.s1 = s1;
    res.s2 = -(s1 * eom.b2);
    res.x_mat = (s1 * eom.b1) * Rational(1, 2);
    const RatMatrix s1i = inverse(s1);
    res.h_can_matrix = RatMatrix(2 * n, 2 * n);
    res.h_can_matrix.set_block(0, 0, s1i);
    res.h_can_matrix.set_block(0, n, s1i * res.x_mat);
    res.h_can_matrix.set_block(n, 0, res.x_mat.transpose() * s1i);
    res.h_can_matrix.set_block(n, n, res.x_mat.transpose() * s1i * res.x_mat + res.s2);
    if (!res.h_can_matrix.is_symmetric()) throw std::logic_error("canonical Hessian is not symmetric");

    RatMatrix j(2 * n, 2 * n);
    j.set_block(0, n, -RatMatrix::identity(n));
    j.set_block(n, 0, RatMatrix::identity(n));
    res.m_can = j * res.h_can_matrix;

    res.p_link = PElement{s1i, s1i * res.x_mat};
    const RatMatrix lambda = res.p_link.embed();
    if (inverse(lambda) * std_form(eom) * lambda != res.m_can)
        throw std::logic_error("canonical conjugacy verification failed");

    res.h_can = MultiPoly::quadratic_form(res.h_can_matrix, phase_space_vars(positions));
    return res;
}

QuadraticLagrangian build_lagrangian(const EquationsOfMotion& eom, const RatMatrix& s1,
                                     std::vector<std::string> positions) {
    require_valid_s1(eom, s1);
    return lagrangian_from_matrices(s1, s1 * eom.b1, s1 * eom.b2, std::move(positions));
}

QuadraticLagrangian lagrangian_from_matrices(const RatMatrix& kinetic, const RatMatrix& cross,
                                             const RatMatrix& potential,
                                             std::vector<std::string> positions) {
    if (!kinetic.is_symmetric() || !is_invertible(kinetic))
        throw Error("kinetic matrix must be symmetric invertible");
    if (cross.rows() != kinetic.rows() || potential.rows() != kinetic.rows() || !cross.is_square() ||
        !potential.is_square())
        throw DimensionError("Lagrangian coefficient matrices must be square of equal size");
    if (positions.empty()) positions = position_vars(kinetic.rows());
    if (positions.size() != kinetic.rows()) throw DimensionError("position name count mismatch");
    return QuadraticLagrangian{kinetic, cross, potential,
                               lagrangian_poly(kinetic, cross, potential, lagrangian_vars(positions))};
}

EquationsOfMotion euler_lagrange(const QuadraticLagrangian& ql) {
    if (!is_invertible(ql.kinetic)) throw SingularMatrixError("kinetic matrix is singular");
    const RatMatrix ki = inverse(ql.kinetic);
    return EquationsOfMotion{ki * skew_part(ql.cross), ki * sym_part(ql.potential)};
}

bool lagrangian_equivalent(const QuadraticLagrangian& a, const QuadraticLagrangian& b) {
    if (a.kinetic.rows() != b.kinetic.rows()) throw DimensionError("Lagrangian dimension mismatch");
    return a.kinetic == b.kinetic && skew_part(a.cross) == skew_part(b.cross) &&
           sym_part(a.potential) == sym_part(b.potential);
}

ASPair semi_canonical_pair(const EquationsOfMotion& eom, const RatMatrix& s1) {
    require_valid_s1(eom, s1);
    const std::size_t n = s1.rows();
    const RatMatrix s1i = inverse(s1);
    RatMatrix a(2 * n, 2 * n);
    a.set_block(0, 0, eom.b1 * s1i);
    a.set_block(0, n, -s1i);
    a.set_block(n, 0, s1i);
    RatMatrix s(2 * n, 2 * n);
    s.set_block(0, 0, s1);
    s.set_block(n, n, -(s1 * eom.b2));
    const RatMatrix mstd = std_form(eom);
    if (a * s != mstd) throw std::logic_error("semi-canonical product verification failed");
    auto basis_dim = symmetric_kernel(2 * n, [&](const RatMatrix& u) {
                         return mstd.transpose() * u + u * mstd;
                     }).size();
    return ASPair{a, s, basis_dim};
}

}  // namespace hamfact
