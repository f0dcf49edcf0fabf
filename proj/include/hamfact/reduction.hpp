#pragma once

#include <utility>

#include "hamfact/matrix.hpp"

namespace hamfact {

// 2n x 2n evolution matrix with its n x n block partition.
struct BlockSystem {
    explicit BlockSystem(RatMatrix matrix);

    RatMatrix m;
    std::size_t n;

    RatMatrix m11() const { return m.block(0, 0, n, n); }
    RatMatrix m12() const { return m.block(0, n, n, n); }
    RatMatrix m21() const { return m.block(n, 0, n, n); }
    RatMatrix m22() const { return m.block(n, n, n, n); }
};

// x'' - B1 x' - B2 x = 0
struct EquationsOfMotion {
    RatMatrix b1;
    RatMatrix b2;
    bool operator==(const EquationsOfMotion& o) const { return b1 == o.b1 && b2 == o.b2; }
    bool operator!=(const EquationsOfMotion& o) const { return !(*this == o); }
};

// element (T X; 0 I) of the block-upper-triangular subgroup that preserves
// the second-order equations of motion
struct PElement {
    RatMatrix t;
    RatMatrix x;
    static PElement identity(std::size_t n) {
        return PElement{RatMatrix::identity(n), RatMatrix::zero(n, n)};
    }
    RatMatrix embed() const;
};

// both m and m21 invertible
bool is_admissible(const BlockSystem& sys);

// B1 = M21 M11 M21^-1 + M22, B2 = M21 M12 - M21 M11 M21^-1 M22;
// throws SingularM21Error
EquationsOfMotion extract_eom(const BlockSystem& sys);

// (B1 B2; I 0) for the given equations of motion
RatMatrix std_form(const EquationsOfMotion& eom);

// (M_std, L) with L^-1 * m * L == M_std exactly; throws SingularM21Error
std::pair<RatMatrix, RatMatrix> standardize(const BlockSystem& sys);

BlockSystem p_conjugate(const BlockSystem& sys, const PElement& p);

// true iff both systems extract to the same (B1, B2); equivalent to being
// P-conjugate
bool same_eom(const BlockSystem& a, const BlockSystem& b);

}  // namespace hamfact
