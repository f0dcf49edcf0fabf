#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "hamfact/rational.hpp"
#include "hamfact/unipoly.hpp"

namespace hamfact {

// Dense matrix of rationals, row-major. Equality is entry-wise exact.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, Rational(0)) {}
    RatMatrix(std::initializer_list<std::initializer_list<Rational>> init);

    static RatMatrix identity(std::size_t n);
    static RatMatrix zero(std::size_t rows, std::size_t cols) { return RatMatrix(rows, cols); }
    static RatMatrix column(const std::vector<Rational>& v);
    static RatMatrix diagonal(const std::vector<Rational>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Rational& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool operator==(const RatMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
    bool operator!=(const RatMatrix& o) const { return !(*this == o); }

    RatMatrix transpose() const;
    RatMatrix block(std::size_t r0, std::size_t c0, std::size_t h, std::size_t w) const;
    void set_block(std::size_t r0, std::size_t c0, const RatMatrix& b);

    bool is_zero() const;
    bool is_symmetric() const;
    bool is_antisymmetric() const;

    std::vector<Rational> row_vec(std::size_t i) const;
    std::vector<Rational> col_vec(std::size_t j) const;

    RatMatrix operator-() const;
    RatMatrix operator+(const RatMatrix& o) const;
    RatMatrix operator-(const RatMatrix& o) const;
    RatMatrix operator*(const RatMatrix& o) const;
    RatMatrix operator*(const Rational& s) const;

    std::vector<std::vector<double>> to_double() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> e_;
};

RatMatrix operator*(const Rational& s, const RatMatrix& m);
std::vector<Rational> operator*(const RatMatrix& m, const std::vector<Rational>& v);

// [a | b] side by side and a over b
RatMatrix hstack(const RatMatrix& a, const RatMatrix& b);
RatMatrix vstack(const RatMatrix& a, const RatMatrix& b);
RatMatrix block_diag(const std::vector<RatMatrix>& blocks);

// exact inverse; throws SingularMatrixError
RatMatrix inverse(const RatMatrix& m);
Rational det(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);
bool is_invertible(const RatMatrix& m);

// exact monic characteristic polynomial det(tI - M)
UniPoly char_poly(const RatMatrix& m);

// Full solution set of a*x = rhs: a particular solution (free variables zero)
// plus a basis of the homogeneous nullspace. `consistent` is false when the
// system has no solution, in which case the other fields are empty.
struct LinearSolution {
    bool consistent = false;
    RatMatrix particular;               // cols match rhs cols
    std::vector<RatMatrix> nullspace;   // column vectors
};
LinearSolution solve_linear(const RatMatrix& a, const RatMatrix& rhs);

std::string to_string(const RatMatrix& m);
std::string to_string_float(const RatMatrix& m);

}  // namespace hamfact
