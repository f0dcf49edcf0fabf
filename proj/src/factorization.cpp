#include "hamfact/factorization.hpp"

#include <cctype>
#include <stdexcept>

#include "hamfact/errors.hpp"
#include "hamfact/frobenius.hpp"
#include "hamfact/symmetric_solve.hpp"

namespace hamfact {

namespace {

std::vector<RatMatrix> factor_solution_basis(const RatMatrix& m) {
    return symmetric_kernel(m.rows(), [&](const RatMatrix& s) { return m.transpose() * s + s * m; });
}

}  // namespace

ASPair factor(const RatMatrix& m, const FactorOptions& opt) {
    if (!m.is_square() || m.rows() % 2 != 0) throw DimensionError("factor needs an even-dimensional square matrix");
    if (!is_invertible(m)) throw SingularMatrixError("cannot factor a singular evolution matrix");
    auto basis = factor_solution_basis(m);
    auto s = find_invertible_member(basis, opt.seed, opt.max_tries);
    if (!s) {
        if (!is_hamiltonian_candidate(m))
            throw NotHamiltonianError("no invertible symmetric solution of M^T S + S M = 0");
        // the criterion accepts, so an invertible member exists; widen the search
        s = find_invertible_member(basis, opt.seed + 1, 4096);
        if (!s) throw std::logic_error("criterion accepts but no invertible member was found");
    }
    return ASPair{m * inverse(*s), *s, basis.size()};
}

ASPair factor_companion_block(const UniPoly& even_poly) {
    if (!even_poly.is_monic() || even_poly.degree() < 2 || even_poly.degree() % 2 != 0 || !even_poly.is_even())
        throw Error("factor_companion_block needs a monic even polynomial of even degree");
    if (even_poly.coeff(0).is_zero())
        throw ZeroConstantTermError("companion block with zero constant term is singular");

    const std::size_t r = static_cast<std::size_t>(even_poly.degree()) / 2;
    const std::size_t dim = 2 * r;
    const RatMatrix mk = companion_matrix(even_poly);

    // p = t^(2r) - a_(2r-2) t^(2r-2) - ... - a_0
    std::vector<Rational> a(r);
    for (std::size_t i = 0; i < r; ++i) a[i] = -even_poly.coeff(2 * i);

    auto assemble = [&](const std::vector<Rational>& y) {
        RatMatrix alt(dim, dim);
        alt(0, 1) = Rational(-1);
        alt(1, 0) = Rational(1);
        // band of anti-diagonals in the trailing block, y_0 outermost
        for (std::size_t i = 0; i < dim - 2; ++i)
            for (std::size_t j = 0; j < dim - 2; ++j) {
                const std::size_t s = i + j;
                if (s % 2 == 0 || s > 2 * r - 3) continue;
                const std::size_t idx = r - 2 - (s - 1) / 2;
                Rational v = y[idx];
                if (i % 2 == 0) v = -v;
                alt(2 + i, 2 + j) = v;
            }
        return alt;
    };

    auto finish = [&](const RatMatrix& alt) -> std::optional<ASPair> {
        if (!alt.is_antisymmetric() || !is_invertible(alt)) return std::nullopt;
        RatMatrix s = inverse(alt) * mk;
        if (!s.is_symmetric()) return std::nullopt;
        return ASPair{alt, s, factor_solution_basis(mk).size()};
    };

    if (r == 1) {
        if (auto res = finish(assemble({}))) return *res;
        return factor(mk);
    }

    // coefficient recursions: b_0 = a_0, y_0 b_0 = 1, y_m = -a_(2r-2m)/a_0.
    // The convolution equations determine the b's, which here come out of
    // S = A^-1 M directly; the product identity is checked either way.
    std::vector<Rational> y(r - 1);
    y[0] = a[0].inverse();
    for (std::size_t m = 1; m + 1 < r; ++m) y[m] = -a[r - m] / a[0];
    if (auto res = finish(assemble(y))) return *res;

    // fall back to solving the pattern coefficients directly: the alternating
    // condition M A + A M^T = 0 is linear in the y's
    {
        const std::size_t k = r - 1;
        std::vector<RatMatrix> gen(k);
        for (std::size_t i = 0; i < k; ++i) {
            std::vector<Rational> unit(k, Rational(0));
            unit[i] = Rational(1);
            gen[i] = assemble(unit);
        }
        RatMatrix base = assemble(std::vector<Rational>(k, Rational(0)));
        auto resid = [&](const RatMatrix& alt) { return mk * alt + alt * mk.transpose(); };
        RatMatrix rhs0 = resid(base);
        RatMatrix sys(dim * dim, k), rhs(dim * dim, 1);
        for (std::size_t c = 0; c < k; ++c) {
            RatMatrix rc = resid(base + gen[c]) - rhs0;
            std::size_t row = 0;
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j) sys(row++, c) = rc(i, j);
        }
        std::size_t row = 0;
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) rhs(row++, 0) = -rhs0(i, j);
        auto sol = solve_linear(sys, rhs);
        if (sol.consistent) {
            std::vector<Rational> ys(k);
            for (std::size_t i = 0; i < k; ++i) ys[i] = sol.particular(i, 0);
            if (auto res = finish(assemble(ys))) return *res;
        }
    }

    return factor(mk);
}

ASPair conjugate_pair(const ASPair& pair, const RatMatrix& lambda) {
    if (!lambda.is_square() || lambda.rows() != pair.a.rows())
        throw DimensionError("conjugation transform dimension mismatch");
    const RatMatrix li = inverse(lambda);  // throws SingularMatrixError
    return ASPair{li * pair.a * li.transpose(), lambda.transpose() * pair.s * lambda, pair.space_dim};
}

HamiltonianStructure to_structure(const ASPair& pair, const RatMatrix& m, std::vector<std::string> vars) {
    if (pair.a * pair.s != m) throw Error("pair does not factor the given matrix");
    if (!pair.a.is_antisymmetric()) throw Error("factor A is not alternating");
    if (!pair.s.is_symmetric()) throw Error("factor S is not symmetric");
    if (vars.empty()) vars = phase_space_vars(m.rows() / 2);
    if (vars.size() != m.rows()) throw DimensionError("phase variable count mismatch");
    HamiltonianStructure hs;
    hs.omega = inverse(pair.a);
    hs.hessian = pair.s;
    hs.bracket_table = pair.a;
    if (hs.omega * m != hs.hessian) throw std::logic_error("omega * M != Hessian");
    hs.h = MultiPoly::quadratic_form(pair.s, std::move(vars));
    return hs;
}

std::vector<std::string> phase_space_vars(std::size_t n) {
    if (n == 1) return {"p", "x"};
    if (n == 2) return {"p", "q", "x", "y"};
    std::vector<std::string> v;
    for (std::size_t i = 1; i <= n; ++i) v.push_back("p" + std::to_string(i));
    for (std::size_t i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
    return v;
}

std::vector<std::string> position_vars(std::size_t n) {
    if (n == 1) return {"x"};
    if (n == 2) return {"x", "y"};
    std::vector<std::string> v;
    for (std::size_t i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
    return v;
}

std::vector<std::string> momentum_names(const std::vector<std::string>& positions) {
    auto digits = [](const std::string& s) {
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return !s.empty();
    };
    std::vector<std::string> momenta;
    for (const auto& pos : positions) {
        std::string m;
        if (pos == "x")
            m = "p";
        else if (pos == "y")
            m = "q";
        else if (pos.size() > 1 && pos[0] == 'x' && digits(pos.substr(1)))
            m = "p" + pos.substr(1);
        else if (pos.size() > 1 && pos[0] == 'y' && digits(pos.substr(1)))
            m = "q" + pos.substr(1);
        else
            m = "p_" + pos;
        auto taken = [&](const std::string& name) {
            for (const auto& v : positions)
                if (v == name) return true;
            for (const auto& v : momenta)
                if (v == name) return true;
            return false;
        };
        while (taken(m)) m += "_";
        momenta.push_back(std::move(m));
    }
    return momenta;
}

std::vector<std::string> phase_space_vars(const std::vector<std::string>& positions) {
    std::vector<std::string> v = momentum_names(positions);
    v.insert(v.end(), positions.begin(), positions.end());
    return v;
}

}  // namespace hamfact
