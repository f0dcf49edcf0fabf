#include "hamfact/multipoly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hamfact/errors.hpp"

namespace hamfact {

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const Rational& c) {
    MultiPoly p(std::move(vars));
    p.add_term(Exps(p.nvars(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, std::size_t index) {
    MultiPoly p(std::move(vars));
    if (index >= p.nvars()) throw DimensionError("variable index out of range");
    Exps e(p.nvars(), 0);
    e[index] = 1;
    p.add_term(e, Rational(1));
    return p;
}

MultiPoly MultiPoly::quadratic_form(const RatMatrix& s, std::vector<std::string> vars) {
    if (!s.is_square() || s.rows() != vars.size()) throw DimensionError("quadratic form shape mismatch");
    MultiPoly p(std::move(vars));
    const Rational half(1, 2);
    for (std::size_t i = 0; i < s.rows(); ++i)
        for (std::size_t j = 0; j < s.cols(); ++j) {
            if (s(i, j).is_zero()) continue;
            Exps e(p.nvars(), 0);
            e[i] += 1;
            e[j] += 1;
            p.add_term(e, half * s(i, j));
        }
    return p;
}

std::size_t MultiPoly::total_degree() const {
    std::size_t d = 0;
    for (const auto& [e, c] : terms_) {
        std::size_t t = 0;
        for (auto x : e) t += x;
        d = std::max(d, t);
    }
    return d;
}

Rational MultiPoly::coeff(const Exps& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exps& e, const Rational& c) {
    if (e.size() != nvars()) throw DimensionError("exponent vector length mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
    if (nvars() != o.nvars()) throw DimensionError("polynomials over different variable sets");
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly p(vars_);
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly p = *this;
    for (const auto& [e, c] : o.terms_) p.add_term(e, c);
    return p;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly p(vars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            Exps e = ea;
            for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
            p.add_term(e, ca * cb);
        }
    return p;
}

MultiPoly MultiPoly::operator*(const Rational& s) const {
    MultiPoly p(vars_);
    if (s.is_zero()) return p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, c * s);
    return p;
}

MultiPoly MultiPoly::pow(std::uint32_t k) const {
    MultiPoly acc = constant(vars_, Rational(1));
    for (std::uint32_t i = 0; i < k; ++i) acc = acc * *this;
    return acc;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
    MultiPoly p(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exps d = e;
        d[var] -= 1;
        p.add_term(d, c * Rational(static_cast<long>(e[var])));
    }
    return p;
}

MultiPoly MultiPoly::antiderivative(std::size_t var) const {
    MultiPoly p(vars_);
    for (const auto& [e, c] : terms_) {
        Exps d = e;
        d[var] += 1;
        p.add_term(d, c / Rational(static_cast<long>(d[var])));
    }
    return p;
}

MultiPoly MultiPoly::substitute_zero(std::size_t var) const {
    MultiPoly p(vars_);
    for (const auto& [e, c] : terms_)
        if (e[var] == 0) p.terms_.emplace(e, c);
    return p;
}

double MultiPoly::eval(std::span<const double> point) const {
    if (point.size() != nvars()) throw DimensionError("evaluation point dimension mismatch");
    double acc = 0.0;
    for (const auto& [e, c] : terms_) {
        double t = c.to_double();
        for (std::size_t k = 0; k < e.size(); ++k)
            for (std::uint32_t i = 0; i < e[k]; ++i) t *= point[k];
        acc += t;
    }
    return acc;
}

Rational MultiPoly::eval(std::span<const Rational> point) const {
    if (point.size() != nvars()) throw DimensionError("evaluation point dimension mismatch");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t k = 0; k < e.size(); ++k)
            for (std::uint32_t i = 0; i < e[k]; ++i) t *= point[k];
        acc += t;
    }
    return acc;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    // graded order, highest total degree first, then lexicographic on exponents
    std::vector<const std::pair<const Exps, Rational>*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    auto deg = [](const Exps& e) {
        std::size_t d = 0;
        for (auto x : e) d += x;
        return d;
    };
    std::sort(order.begin(), order.end(), [&](const auto* a, const auto* b) {
        const std::size_t da = deg(a->first), db = deg(b->first);
        if (da != db) return da > db;
        return std::lexicographical_compare(b->first.begin(), b->first.end(), a->first.begin(), a->first.end());
    });
    std::ostringstream os;
    bool first = true;
    for (const auto* t : order) {
        const auto& [e, c] = *t;
        const Rational a = c.abs();
        if (first) {
            if (c.is_negative()) os << "-";
            first = false;
        } else {
            os << (c.is_negative() ? " - " : " + ");
        }
        std::vector<std::string> factors;
        if (!a.is_one() || deg(e) == 0) factors.push_back(a.to_string());
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            std::string f = vars_[k];
            if (e[k] > 1) f += "^" + std::to_string(e[k]);
            factors.push_back(f);
        }
        for (std::size_t k = 0; k < factors.size(); ++k) {
            if (k) os << "*";
            os << factors[k];
        }
    }
    return os.str();
}

}  // namespace hamfact
