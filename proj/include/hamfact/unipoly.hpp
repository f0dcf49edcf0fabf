#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hamfact/rational.hpp"

namespace hamfact {

// Univariate polynomial over the rationals, coefficients stored in ascending
// degree with no trailing zeros (the zero polynomial stores nothing).
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { strip(); }
    UniPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { strip(); }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly one() { return UniPoly({Rational(1)}); }
    static UniPoly t() { return UniPoly({Rational(0), Rational(1)}); }
    static UniPoly monomial(std::size_t k, const Rational& c);

    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
    // all odd-degree coefficients vanish
    bool is_even() const;

    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    Rational eval(const Rational& x) const;
    double eval(double x) const;

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rational& s) const;
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    // (quotient, remainder) with deg(remainder) < deg(divisor); exact arithmetic
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;
    bool divides(const UniPoly& multiple) const;

    UniPoly monic() const;
    UniPoly derivative() const;
    // p(-t)
    UniPoly negate_argument() const;
    // for an even p, the polynomial q with p(t) = q(t^2)
    UniPoly descend_even() const;

    static UniPoly gcd(const UniPoly& a, const UniPoly& b);
    static UniPoly lcm(const UniPoly& a, const UniPoly& b);

    // square-free decomposition (Yun): returns factors f_i with multiplicity i+1,
    // so that p = lead * prod f_i^(i+1)
    std::vector<UniPoly> squarefree_parts() const;

    std::string to_string(const std::string& var = "t") const;

private:
    void strip() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

}  // namespace hamfact
