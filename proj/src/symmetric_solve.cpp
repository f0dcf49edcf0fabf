#include "hamfact/symmetric_solve.hpp"

#include <random>

namespace hamfact {

namespace {

RatMatrix sym_basis_element(std::size_t d, std::size_t i, std::size_t j) {
    RatMatrix e(d, d);
    e(i, j) = Rational(1);
    e(j, i) = Rational(1);
    return e;
}

// scale to integer entries with content 1 and positive first nonzero entry
void normalize_primitive(RatMatrix& m) {
    mpz_class den(1), num(0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            mpz_class l;
            mpz_lcm(l.get_mpz_t(), den.get_mpz_t(), m(i, j).denominator().get_mpz_t());
            den = l;
        }
    m = m * Rational(mpq_class(den));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), m(i, j).numerator().get_mpz_t());
            num = g;
        }
    if (num > 1) m = m * Rational(mpq_class(mpq_class(1) / mpq_class(num)));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) {
                if (m(i, j).is_negative()) m = -m;
                return;
            }
}

}  // namespace

std::vector<RatMatrix> symmetric_kernel(std::size_t d,
                                        const std::function<RatMatrix(const RatMatrix&)>& constraint) {
    const std::size_t unknowns = d * (d + 1) / 2;
    // one system column per symmetric basis element
    RatMatrix probe = constraint(RatMatrix::zero(d, d));
    const std::size_t eqs = probe.rows() * probe.cols();
    RatMatrix sys(eqs, unknowns);
    std::size_t col = 0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
            RatMatrix r = constraint(sym_basis_element(d, i, j));
            std::size_t row = 0;
            for (std::size_t a = 0; a < r.rows(); ++a)
                for (std::size_t b = 0; b < r.cols(); ++b) sys(row++, col) = r(a, b);
            ++col;
        }
    auto sol = solve_linear(sys, RatMatrix::zero(eqs, 1));
    std::vector<RatMatrix> basis;
    for (const auto& v : sol.nullspace) {
        RatMatrix s(d, d);
        std::size_t k = 0;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i; j < d; ++j) {
                s(i, j) = v(k, 0);
                s(j, i) = v(k, 0);
                ++k;
            }
        normalize_primitive(s);
        basis.push_back(std::move(s));
    }
    return basis;
}

std::optional<RatMatrix> find_invertible_member(const std::vector<RatMatrix>& basis, std::uint64_t seed,
                                                int tries) {
    if (basis.empty()) return std::nullopt;
    for (const auto& b : basis)
        if (is_invertible(b)) return b;
    RatMatrix sum = basis[0];
    for (std::size_t i = 1; i < basis.size(); ++i) sum = sum + basis[i];
    if (is_invertible(sum)) return sum;
    std::mt19937_64 rng(seed);
    for (int t = 0; t < tries; ++t) {
        RatMatrix s(basis[0].rows(), basis[0].cols());
        bool nonzero = false;
        for (const auto& b : basis) {
            const long c = static_cast<long>(rng() % 7) - 3;
            if (c == 0) continue;
            nonzero = true;
            s = s + b * Rational(c);
        }
        if (nonzero && is_invertible(s)) return s;
    }
    return std::nullopt;
}

}  // namespace hamfact
