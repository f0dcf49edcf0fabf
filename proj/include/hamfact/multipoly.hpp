#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hamfact/matrix.hpp"
#include "hamfact/rational.hpp"

namespace hamfact {

// Multivariate polynomial over the rationals with a fixed variable list.
// Terms map exponent vectors to coefficients; zero coefficients are never kept.
class MultiPoly {
public:
    using Exps = std::vector<std::uint32_t>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(std::vector<std::string> vars, const Rational& c);
    static MultiPoly variable(std::vector<std::string> vars, std::size_t index);
    // (1/2) xi^T s xi in the given variables
    static MultiPoly quadratic_form(const RatMatrix& s, std::vector<std::string> vars);

    std::size_t nvars() const { return vars_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Exps, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t total_degree() const;
    Rational coeff(const Exps& e) const;
    void add_term(const Exps& e, const Rational& c);

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rational& s) const;
    MultiPoly pow(std::uint32_t k) const;

    bool operator==(const MultiPoly& o) const { return nvars() == o.nvars() && terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly derivative(std::size_t var) const;
    MultiPoly antiderivative(std::size_t var) const;
    MultiPoly substitute_zero(std::size_t var) const;

    double eval(std::span<const double> point) const;
    Rational eval(std::span<const Rational> point) const;

    std::string to_string() const;

private:
    void check_compatible(const MultiPoly& o) const;
    std::vector<std::string> vars_;
    std::map<Exps, Rational> terms_;
};

}  // namespace hamfact
