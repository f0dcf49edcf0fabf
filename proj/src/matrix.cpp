#include "hamfact/matrix.hpp"

#include <cstdio>
#include <sstream>

#include "hamfact/errors.hpp"

namespace hamfact {

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    e_.reserve(rows_ * cols_);
    for (const auto& row : init) {
        if (row.size() != cols_) throw DimensionError("ragged initializer for RatMatrix");
        e_.insert(e_.end(), row.begin(), row.end());
    }
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
}

RatMatrix RatMatrix::column(const std::vector<Rational>& v) {
    RatMatrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
}

RatMatrix RatMatrix::diagonal(const std::vector<Rational>& d) {
    RatMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

RatMatrix RatMatrix::block(std::size_t r0, std::size_t c0, std::size_t h, std::size_t w) const {
    if (r0 + h > rows_ || c0 + w > cols_) throw DimensionError("block out of range");
    RatMatrix m(h, w);
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < w; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
    return m;
}

void RatMatrix::set_block(std::size_t r0, std::size_t c0, const RatMatrix& b) {
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw DimensionError("block out of range");
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

bool RatMatrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

bool RatMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

bool RatMatrix::is_antisymmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
        if (!(*this)(i, i).is_zero()) return false;
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != -(*this)(j, i)) return false;
    }
    return true;
}

std::vector<Rational> RatMatrix::row_vec(std::size_t i) const {
    return std::vector<Rational>(e_.begin() + static_cast<long>(i * cols_),
                                 e_.begin() + static_cast<long>((i + 1) * cols_));
}

std::vector<Rational> RatMatrix::col_vec(std::size_t j) const {
    std::vector<Rational> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

RatMatrix RatMatrix::operator-() const {
    RatMatrix m = *this;
    for (auto& x : m.e_) x = -x;
    return m;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix addition shape mismatch");
    RatMatrix m = *this;
    for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] += o.e_[k];
    return m;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const { return *this + (-o); }

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
    RatMatrix m(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) m(i, j) += a * o(k, j);
        }
    return m;
}

RatMatrix RatMatrix::operator*(const Rational& s) const {
    RatMatrix m = *this;
    for (auto& x : m.e_) x *= s;
    return m;
}

std::vector<std::vector<double>> RatMatrix::to_double() const {
    std::vector<std::vector<double>> d(rows_, std::vector<double>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) d[i][j] = (*this)(i, j).to_double();
    return d;
}

RatMatrix operator*(const Rational& s, const RatMatrix& m) { return m * s; }

std::vector<Rational> operator*(const RatMatrix& m, const std::vector<Rational>& v) {
    if (m.cols() != v.size()) throw DimensionError("matrix-vector shape mismatch");
    std::vector<Rational> r(m.rows(), Rational(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r[i] += m(i, j) * v[j];
    return r;
}

RatMatrix hstack(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows()) throw DimensionError("hstack row mismatch");
    RatMatrix m(a.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

RatMatrix vstack(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.cols()) throw DimensionError("vstack column mismatch");
    RatMatrix m(a.rows() + b.rows(), a.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), 0, b);
    return m;
}

RatMatrix block_diag(const std::vector<RatMatrix>& blocks) {
    std::size_t n = 0, c = 0;
    for (const auto& b : blocks) {
        n += b.rows();
        c += b.cols();
    }
    RatMatrix m(n, c);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        m.set_block(r0, c0, b);
        r0 += b.rows();
        c0 += b.cols();
    }
    return m;
}

namespace {

// Reduced row echelon form in place over the first `limit` columns;
// returns the pivot columns.
std::vector<std::size_t> rref(RatMatrix& m, std::size_t limit) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < limit && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(sel, j));
        const Rational inv = m(row, col).inverse();
        for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            const Rational f = m(i, col);
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

RatMatrix inverse(const RatMatrix& m) {
    if (!m.is_square()) throw DimensionError("inverse of a non-square matrix");
    RatMatrix aug = hstack(m, RatMatrix::identity(m.rows()));
    auto pivots = rref(aug, m.cols());
    if (pivots.size() != m.rows()) throw SingularMatrixError("matrix is singular");
    return aug.block(0, m.cols(), m.rows(), m.cols());
}

Rational det(const RatMatrix& m) {
    if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
    RatMatrix a = m;
    Rational d(1);
    const std::size_t n = a.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && a(sel, col).is_zero()) ++sel;
        if (sel == n) return Rational(0);
        if (sel != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(col, j), a(sel, j));
            d = -d;
        }
        d *= a(col, col);
        const Rational inv = a(col, col).inverse();
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a(i, col).is_zero()) continue;
            const Rational f = a(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
        }
    }
    return d;
}

std::size_t rank(const RatMatrix& m) {
    RatMatrix a = m;
    return rref(a, a.cols()).size();
}

bool is_invertible(const RatMatrix& m) { return m.is_square() && !det(m).is_zero(); }

UniPoly char_poly(const RatMatrix& m) {
    if (!m.is_square()) throw DimensionError("characteristic polynomial of a non-square matrix");
    // Faddeev-LeVerrier: exact over the rationals
    const std::size_t n = m.rows();
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = Rational(1);
    RatMatrix aux = RatMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        RatMatrix ma = m * aux;
        Rational tr(0);
        for (std::size_t i = 0; i < n; ++i) tr += ma(i, i);
        c[n - k] = -(tr / Rational(static_cast<long>(k)));
        aux = ma;
        for (std::size_t i = 0; i < n; ++i) aux(i, i) += c[n - k];
    }
    return UniPoly(std::move(c));
}

LinearSolution solve_linear(const RatMatrix& a, const RatMatrix& rhs) {
    if (a.rows() != rhs.rows()) throw DimensionError("solve_linear shape mismatch");
    RatMatrix aug = hstack(a, rhs);
    auto pivots = rref(aug, a.cols());
    LinearSolution sol;
    // a row that is zero on the coefficient side but not on the rhs side
    for (std::size_t i = pivots.size(); i < aug.rows(); ++i)
        for (std::size_t j = a.cols(); j < aug.cols(); ++j)
            if (!aug(i, j).is_zero()) return sol;
    sol.consistent = true;
    sol.particular = RatMatrix(a.cols(), rhs.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t j = 0; j < rhs.cols(); ++j) sol.particular(pivots[r], j) = aug(r, a.cols() + j);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    for (std::size_t col = 0; col < a.cols(); ++col) {
        if (is_pivot[col]) continue;
        RatMatrix v(a.cols(), 1);
        v(col, 0) = Rational(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v(pivots[r], 0) = -aug(r, col);
        sol.nullspace.push_back(std::move(v));
    }
    return sol;
}

std::string to_string(const RatMatrix& m) {
    std::vector<std::size_t> width(m.cols(), 0);
    std::vector<std::vector<std::string>> cell(m.rows(), std::vector<std::string>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            cell[i][j] = m(i, j).to_string();
            width[j] = std::max(width[j], cell[i][j].size());
        }
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << "[ ";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            os << std::string(width[j] - cell[i][j].size(), ' ') << cell[i][j];
            os << (j + 1 == m.cols() ? " ]" : "  ");
        }
        if (i + 1 != m.rows()) os << "\n";
    }
    return os.str();
}

std::string to_string_float(const RatMatrix& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << "[ ";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            char buf[40];
            std::snprintf(buf, sizeof(buf), "%.6g", m(i, j).to_double());
            os << buf << (j + 1 == m.cols() ? " ]" : "  ");
        }
        if (i + 1 != m.rows()) os << "\n";
    }
    return os.str();
}

}  // namespace hamfact
