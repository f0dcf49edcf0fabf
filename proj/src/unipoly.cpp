#include "hamfact/unipoly.hpp"

#include <sstream>

namespace hamfact {

UniPoly UniPoly::monomial(std::size_t k, const Rational& c) {
    std::vector<Rational> v(k + 1, Rational(0));
    v[k] = c;
    return UniPoly(std::move(v));
}

bool UniPoly::is_even() const {
    for (std::size_t k = 1; k < c_.size(); k += 2)
        if (!c_[k].is_zero()) return false;
    return true;
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
}

double UniPoly::eval(double x) const {
    double acc = 0.0;
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k].to_double();
    return acc;
}

UniPoly UniPoly::operator-() const {
    std::vector<Rational> v = c_;
    for (auto& x : v) x = -x;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = coeff(k) + o.coeff(k);
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator*(const Rational& s) const {
    std::vector<Rational> v = c_;
    for (auto& x : v) x *= s;
    return UniPoly(std::move(v));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
    if (divisor.is_zero()) throw Error("polynomial division by zero");
    std::vector<Rational> rem = c_;
    int dq = degree() - divisor.degree();
    if (dq < 0) return {UniPoly(), *this};
    std::vector<Rational> quot(static_cast<std::size_t>(dq) + 1, Rational(0));
    const Rational lead = divisor.leading();
    for (int k = degree(); k >= divisor.degree(); --k) {
        const Rational c = rem[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        const Rational f = c / lead;
        const std::size_t shift = static_cast<std::size_t>(k - divisor.degree());
        quot[shift] = f;
        for (int j = 0; j <= divisor.degree(); ++j)
            rem[shift + static_cast<std::size_t>(j)] -= f * divisor.coeff(static_cast<std::size_t>(j));
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

bool UniPoly::divides(const UniPoly& multiple) const {
    if (is_zero()) return multiple.is_zero();
    return multiple.divmod(*this).second.is_zero();
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rational> v(c_.size() - 1, Rational(0));
    for (std::size_t k = 1; k < c_.size(); ++k) v[k - 1] = c_[k] * Rational(static_cast<long>(k));
    return UniPoly(std::move(v));
}

UniPoly UniPoly::negate_argument() const {
    std::vector<Rational> v = c_;
    for (std::size_t k = 1; k < v.size(); k += 2) v[k] = -v[k];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::descend_even() const {
    if (!is_even()) throw Error("descend_even on a polynomial with odd terms");
    std::vector<Rational> v((c_.size() + 1) / 2, Rational(0));
    for (std::size_t k = 0; k < c_.size(); k += 2) v[k / 2] = c_[k];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = x.divmod(y).second;
        x = y;
        y = r;
    }
    return x.monic();
}

UniPoly UniPoly::lcm(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    UniPoly g = gcd(a, b);
    return (a.divmod(g).first * b).monic();
}

std::vector<UniPoly> UniPoly::squarefree_parts() const {
    std::vector<UniPoly> parts;
    if (degree() <= 0) return parts;
    UniPoly p = monic();
    UniPoly g = gcd(p, p.derivative());
    UniPoly w = p.divmod(g).first;  // product of distinct roots
    while (w.degree() > 0) {
        UniPoly y = gcd(w, g);
        parts.push_back(w.divmod(y).first);
        w = y;
        g = g.divmod(y).first;
    }
    return parts;
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational c = coeff(static_cast<std::size_t>(k));
        if (c.is_zero()) continue;
        const Rational a = c.abs();
        if (first) {
            if (c.is_negative()) os << "-";
            first = false;
        } else {
            os << (c.is_negative() ? " - " : " + ");
        }
        if (k == 0) {
            os << a.to_string();
        } else {
            if (!a.is_one()) os << a.to_string() << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

}  // namespace hamfact
