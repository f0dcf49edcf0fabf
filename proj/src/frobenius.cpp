#include "hamfact/frobenius.hpp"

#include <stdexcept>

#include "hamfact/errors.hpp"

namespace hamfact {

RatMatrix companion_matrix(const UniPoly& p) {
    if (!p.is_monic() || p.degree() < 1) throw Error("companion matrix needs a monic polynomial of degree >= 1");
    const std::size_t d = static_cast<std::size_t>(p.degree());
    RatMatrix c(d, d);
    for (std::size_t i = 0; i + 1 < d; ++i) c(i + 1, i) = Rational(1);
    for (std::size_t i = 0; i < d; ++i) c(i, d - 1) = -p.coeff(i);
    return c;
}

namespace {

using Vec = std::vector<Rational>;

Vec operator+(const Vec& a, const Vec& b) {
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec scale(const Vec& a, const Rational& s) {
    Vec r = a;
    for (auto& x : r) x *= s;
    return r;
}

bool all_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

// Row space in reduced echelon form; supports exact membership tests and
// reduction of vectors modulo the space.
class RowSpace {
public:
    explicit RowSpace(std::size_t dim) : dim_(dim) {}

    void reduce(Vec& v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Rational f = v[pivots_[r]];
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j) v[j] -= f * rows_[r][j];
        }
    }

    bool contains(Vec v) const {
        reduce(v);
        return all_zero(v);
    }

    // returns false if v was already in the space
    bool insert(Vec v) {
        reduce(v);
        std::size_t p = 0;
        while (p < dim_ && v[p].is_zero()) ++p;
        if (p == dim_) return false;
        const Rational inv = v[p].inverse();
        for (auto& x : v) x *= inv;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Rational f = rows_[r][p];
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j) rows_[r][j] -= f * v[j];
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        return true;
    }

    std::size_t rank() const { return rows_.size(); }

private:
    std::size_t dim_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;
};

// Least-degree monic p with p(M)w in U (the annihilator of w in the quotient
// module V/U). Tracks the combination of Krylov iterates that lands in U.
UniPoly conductor(const RatMatrix& m, const Vec& w, const RowSpace& u) {
    const std::size_t n = m.rows();
    std::vector<Vec> rows, combs;
    std::vector<std::size_t> pivots;
    Vec v = w;
    for (std::size_t k = 0; k <= n; ++k) {
        Vec r = v;
        u.reduce(r);
        Vec comb(k + 1, Rational(0));
        comb[k] = Rational(1);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const Rational f = r[pivots[i]];
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) r[j] -= f * rows[i][j];
            for (std::size_t j = 0; j < combs[i].size(); ++j) comb[j] -= f * combs[i][j];
        }
        std::size_t p = 0;
        while (p < n && r[p].is_zero()) ++p;
        if (p == n) return UniPoly(std::move(comb));
        const Rational inv = r[p].inverse();
        rows.push_back(scale(r, inv));
        combs.push_back(scale(comb, inv));
        pivots.push_back(p);
        v = m * v;
    }
    throw std::logic_error("conductor did not terminate");
}

Vec apply_poly(const RatMatrix& m, const UniPoly& p, const Vec& v) {
    Vec acc(v.size(), Rational(0));
    Vec power = v;
    for (int k = 0; k <= p.degree(); ++k) {
        const Rational c = p.coeff(static_cast<std::size_t>(k));
        if (!c.is_zero()) acc = acc + scale(power, c);
        if (k < p.degree()) power = m * power;
    }
    return acc;
}

struct OrderVec {
    Vec v;
    UniPoly ann;
};

// A vector of maximal order in V/U: its conductor is the minimal polynomial
// of the operator induced on the quotient. Folds the standard basis with the
// classical lcm-combination argument; each combining step needs at most
// deg(lcm)+1 trial coefficients.
OrderVec max_order_vector(const RatMatrix& m, const RowSpace& u) {
    const std::size_t n = m.rows();
    OrderVec best{Vec(n, Rational(0)), UniPoly::one()};
    for (std::size_t i = 0; i < n; ++i) {
        Vec e(n, Rational(0));
        e[i] = Rational(1);
        if (u.contains(e)) continue;
        const UniPoly b = conductor(m, e, u);
        const UniPoly l = UniPoly::lcm(best.ann, b);
        if (l == best.ann) continue;
        if (l == b) {
            best = {std::move(e), b};
            continue;
        }
        bool found = false;
        for (long c = 1; c <= l.degree() + 1; ++c) {
            Vec v = best.v + scale(e, Rational(c));
            if (conductor(m, v, u) == l) {
                best = {std::move(v), l};
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("no combination of maximal order found");
    }
    return best;
}

}  // namespace

FrobeniusForm frobenius(const RatMatrix& m) {
    if (!m.is_square()) throw DimensionError("frobenius of a non-square matrix");
    const std::size_t n = m.rows();

    struct Block {
        Vec v;
        UniPoly p;
        std::vector<Vec> chain;
    };
    std::vector<Block> blocks;
    RowSpace u(n);

    while (u.rank() < n) {
        auto [v, p] = max_order_vector(m, u);

        if (!blocks.empty()) {
            // p(M)v lies in the span of the existing chains; peel those
            // components off so the new cyclic subspace is an honest summand.
            Vec pv = apply_poly(m, p, v);
            std::size_t span = 0;
            for (const auto& b : blocks) span += b.chain.size();
            RatMatrix basis(n, span);
            std::size_t col = 0;
            for (const auto& b : blocks)
                for (const auto& cv : b.chain) {
                    for (std::size_t i = 0; i < n; ++i) basis(i, col) = cv[i];
                    ++col;
                }
            auto sol = solve_linear(basis, RatMatrix::column(pv));
            if (!sol.consistent) throw std::logic_error("conductor image not in accumulated span");
            std::size_t offset = 0;
            for (const auto& b : blocks) {
                const std::size_t d = static_cast<std::size_t>(b.p.degree());
                std::vector<Rational> gc(d, Rational(0));
                for (std::size_t k = 0; k < d; ++k) gc[k] = sol.particular(offset + k, 0);
                UniPoly g(std::move(gc));
                auto [h, rem] = g.divmod(p);
                if (!rem.is_zero()) throw std::logic_error("cyclic decomposition divisibility failed");
                for (int k = 0; k <= h.degree(); ++k) {
                    const Rational c = h.coeff(static_cast<std::size_t>(k));
                    if (c.is_zero()) continue;
                    for (std::size_t i = 0; i < n; ++i) v[i] -= c * b.chain[static_cast<std::size_t>(k)][i];
                }
                offset += d;
            }
            if (!all_zero(apply_poly(m, p, v))) throw std::logic_error("corrected vector is not annihilated");
        }

        Block blk;
        blk.p = p;
        blk.v = v;
        Vec w = v;
        for (int k = 0; k < p.degree(); ++k) {
            blk.chain.push_back(w);
            if (!u.insert(w)) throw std::logic_error("cyclic chain is linearly dependent");
            w = m * w;
        }
        blocks.push_back(std::move(blk));
    }

    // construction order has descending annihilators; invariant factors are
    // conventionally listed ascending
    FrobeniusForm f;
    f.transform = RatMatrix(n, n);
    std::vector<RatMatrix> companions;
    std::size_t col = 0;
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
        f.invariant_factors.push_back(it->p);
        companions.push_back(companion_matrix(it->p));
        for (const auto& cv : it->chain) {
            for (std::size_t i = 0; i < n; ++i) f.transform(i, col) = cv[i];
            ++col;
        }
    }
    f.form = block_diag(companions);

    if (inverse(f.transform) * m * f.transform != f.form)
        throw std::logic_error("frobenius conjugacy verification failed");
    UniPoly prod = UniPoly::one();
    for (std::size_t i = 0; i < f.invariant_factors.size(); ++i) {
        if (i + 1 < f.invariant_factors.size() && !f.invariant_factors[i].divides(f.invariant_factors[i + 1]))
            throw std::logic_error("invariant factor chain broken");
        prod = prod * f.invariant_factors[i];
    }
    if (prod != char_poly(m)) throw std::logic_error("invariant factor product mismatch");
    return f;
}

bool even_char_poly(const RatMatrix& m) {
    if (!m.is_square()) throw DimensionError("even_char_poly of a non-square matrix");
    if (m.rows() % 2 != 0) throw DimensionError("even_char_poly needs even dimension");
    return char_poly(m).is_even();
}

bool is_hamiltonian_candidate(const RatMatrix& m) {
    if (!m.is_square()) throw DimensionError("criterion needs a square matrix");
    if (m.rows() % 2 != 0) throw DimensionError("criterion needs even dimension");
    if (!is_invertible(m)) throw SingularMatrixError("criterion is stated for invertible evolution matrices");
    return frobenius(m).invariant_factors == frobenius(-m).invariant_factors;
}

}  // namespace hamfact
