#include "hamfact/potential.hpp"

#include <algorithm>

#include "hamfact/errors.hpp"

namespace hamfact {

bool PolyField::is_zero() const {
    return std::all_of(components.begin(), components.end(), [](const MultiPoly& p) { return p.is_zero(); });
}

std::size_t PolyField::max_degree() const {
    std::size_t d = 0;
    for (const auto& p : components) d = std::max(d, p.total_degree());
    return d;
}

bool check_conservative(const PolyField& f) {
    for (std::size_t i = 0; i < f.n(); ++i)
        for (std::size_t j = i + 1; j < f.n(); ++j)
            if (f.components[i].derivative(j) != f.components[j].derivative(i)) return false;
    return true;
}

MultiPoly integrate_potential(const PolyField& f) {
    if (!check_conservative(f)) throw NotConservativeError("force field has an asymmetric Jacobian");
    if (f.n() == 0) throw DimensionError("empty force field");
    MultiPoly v(f.components[0].vars());
    // axis path: integrate f_i in x_i with all later coordinates at zero
    for (std::size_t i = 0; i < f.n(); ++i) {
        MultiPoly g = f.components[i];
        for (std::size_t j = i + 1; j < f.n(); ++j) g = g.substitute_zero(j);
        v = v - g.antiderivative(i);
    }
    return v;
}

PolyField apply_matrix(const RatMatrix& m, const PolyField& f) {
    if (m.cols() != f.n()) throw DimensionError("matrix-field shape mismatch");
    PolyField g;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        MultiPoly acc(f.components[0].vars());
        for (std::size_t j = 0; j < f.n(); ++j) acc = acc + f.components[j] * m(i, j);
        g.components.push_back(std::move(acc));
    }
    return g;
}

}  // namespace hamfact
