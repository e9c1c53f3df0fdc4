#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "plab/errors.hpp"

namespace plab {

/// Exact rational scalar. Always canonical: positive denominator, coprime
/// numerator/denominator. Thin wrapper around GMP's mpq_class that keeps the
/// canonical-form invariant at every construction site.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(long long n) : v_(static_cast<long>(n)) {} // LP64: long is 64-bit

    Rational(long num, long den) {
        if (den == 0) throw DivisionByZeroError("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    explicit Rational(mpz_class z) : v_(std::move(z)) {}
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    // Accepts "3", "-7", "3/4", "-1/2".
    static Rational from_string(std::string_view s);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-v_), NoCanon{}); }
    Rational abs() const { return sign() < 0 ? -*this : *this; }
    Rational inverse() const {
        if (is_zero()) throw DivisionByZeroError("inverse of zero");
        return Rational(mpq_class(1 / v_), NoCanon{});
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZeroError("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    // "3", "-1/2" style, matching the text formats used everywhere.
    std::string str() const;

private:
    struct NoCanon {};
    Rational(mpq_class q, NoCanon) : v_(std::move(q)) {}

    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace plab
