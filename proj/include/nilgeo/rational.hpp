#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "nilgeo/errors.hpp"

namespace nilgeo {

/// Exact rational scalar. Always canonical: positive denominator,
/// gcd(|num|, den) = 1. Arithmetic never rounds.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}          // NOLINT(google-explicit-constructor)
    Rational(int n) : v_(n) {}           // NOLINT(google-explicit-constructor)
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw SingularError("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Parses "p/q" or "p" (optionally signed). Throws ParseError.
    static Rational parse(const std::string& s);

    std::string str() const { return v_.get_str(); }
    double to_double() const { return v_.get_d(); }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw SingularError("division by zero rational");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend Rational abs(const Rational& a) { return Rational(mpq_class(abs(a.v_))); }

    Rational inverse() const {
        if (is_zero()) throw SingularError("inverse of zero rational");
        return Rational(mpq_class(1) / v_);
    }

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

inline Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    mpq_class v;
    if (v.set_str(s, 10) != 0)
        throw ParseError("invalid rational literal: \"" + s + "\"");
    if (v.get_den() == 0)
        throw ParseError("zero denominator in rational literal: \"" + s + "\"");
    v.canonicalize();
    return Rational(std::move(v));
}

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace nilgeo
