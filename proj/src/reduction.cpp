#include "hamfact/reduction.hpp"

#include <stdexcept>

#include "hamfact/errors.hpp"

namespace hamfact {

BlockSystem::BlockSystem(RatMatrix matrix) : m(std::move(matrix)) {
    if (!m.is_square() || m.rows() % 2 != 0)
        throw DimensionError("block system needs an even-dimensional square matrix");
    n = m.rows() / 2;
}

RatMatrix PElement::embed() const {
    if (!t.is_square() || t.rows() != x.rows() || !x.is_square())
        throw DimensionError("P element blocks must be square of equal size");
    const std::size_t n = t.rows();
    RatMatrix p(2 * n, 2 * n);
    p.set_block(0, 0, t);
    p.set_block(0, n, x);
    p.set_block(n, n, RatMatrix::identity(n));
    return p;
}

bool is_admissible(const BlockSystem& sys) { return is_invertible(sys.m) && is_invertible(sys.m21()); }

EquationsOfMotion extract_eom(const BlockSystem& sys) {
    const RatMatrix m21 = sys.m21();
    if (!is_invertible(m21)) throw SingularM21Error("lower-left block is singular");
    const RatMatrix m21i = inverse(m21);
    const RatMatrix core = sys.m21() * sys.m11() * m21i;
    return EquationsOfMotion{core + sys.m22(), sys.m21() * sys.m12() - core * sys.m22()};
}

RatMatrix std_form(const EquationsOfMotion& eom) {
    const std::size_t n = eom.b1.rows();
    if (!eom.b1.is_square() || !eom.b2.is_square() || eom.b2.rows() != n)
        throw DimensionError("equations of motion blocks must be square of equal size");
    RatMatrix m(2 * n, 2 * n);
    m.set_block(0, 0, eom.b1);
    m.set_block(0, n, eom.b2);
    m.set_block(n, 0, RatMatrix::identity(n));
    return m;
}

std::pair<RatMatrix, RatMatrix> standardize(const BlockSystem& sys) {
    const RatMatrix m21 = sys.m21();
    if (!is_invertible(m21)) throw SingularM21Error("lower-left block is singular");
    const RatMatrix m21i = inverse(m21);
    const PElement link{m21i, -(m21i * sys.m22())};
    const RatMatrix lambda = link.embed();
    const RatMatrix mstd = std_form(extract_eom(sys));
    if (inverse(lambda) * sys.m * lambda != mstd)
        throw std::logic_error("standardization conjugacy verification failed");
    return {mstd, lambda};
}

BlockSystem p_conjugate(const BlockSystem& sys, const PElement& p) {
    if (p.t.rows() != sys.n) throw DimensionError("P element dimension mismatch");
    const RatMatrix pm = p.embed();
    return BlockSystem(inverse(pm) * sys.m * pm);
}

bool same_eom(const BlockSystem& a, const BlockSystem& b) {
    return extract_eom(a) == extract_eom(b);
}

}  // namespace hamfact
