#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <utility>

#include "hamfact/errors.hpp"

namespace hamfact {

// Arbitrary-precision rational scalar backed by GMP. Always stored reduced
// with a positive denominator; zero is canonically 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) {
        if (den == 0) throw Error("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) {
        if (v_.get_den() == 0) throw Error("rational with zero denominator");
        v_.canonicalize();
    }

    // Accepts "p", "-p", "p/q" with optional surrounding whitespace.
    static Rational parse(const std::string& text) {
        std::string s = trim(text);
        if (s.empty()) throw Error("empty rational literal");
        try {
            mpq_class v(s, 10);
            if (v.get_den() == 0) throw Error("rational literal '" + s + "' has zero denominator");
            v.canonicalize();
            return Rational(already_canonical{}, std::move(v));
        } catch (const std::invalid_argument&) {
            throw Error("bad rational literal '" + s + "'");
        }
    }

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_negative() const { return sgn(v_) < 0; }
    int sign() const { return sgn(v_); }

    double to_double() const { return v_.get_d(); }
    std::string to_string() const { return v_.get_str(); }

    Rational operator-() const { return Rational(already_canonical{}, mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(already_canonical{}, mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(already_canonical{}, mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(already_canonical{}, mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw Error("rational division by zero");
        return Rational(already_canonical{}, mpq_class(v_ / o.v_));
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    Rational abs() const { return is_negative() ? -*this : *this; }

    Rational inverse() const {
        if (is_zero()) throw Error("inverse of zero");
        return Rational(already_canonical{}, mpq_class(1 / v_));
    }

private:
    struct already_canonical {};
    Rational(already_canonical, mpq_class v) : v_(std::move(v)) {}

    static std::string trim(const std::string& s) {
        size_t b = s.find_first_not_of(" \t\r\n");
        if (b == std::string::npos) return "";
        size_t e = s.find_last_not_of(" \t\r\n");
        return s.substr(b, e - b + 1);
    }

    mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace hamfact
