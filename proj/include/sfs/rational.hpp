#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

namespace sfs {

/// Exact rational number. Always stored in lowest terms with positive
/// denominator; zero is 0/1. Arbitrary precision via GMP.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long long n) : value_(static_cast<long>(n)) {}
    Rational(int n) : value_(n) {}
    Rational(long long num, long long den);
    Rational(const mpz_class& num, const mpz_class& den);

    /// Parses "p" or "p/q".  Throws Error(Parse) on malformed input.
    static Rational parse(const std::string& text);

    const mpz_class& num() const { return value_.get_num(); }
    const mpz_class& den() const { return value_.get_den(); }

    bool is_zero() const { return value_ == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(value_ + o.value_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(value_ - o.value_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(value_ * o.value_)); }
    Rational operator/(const Rational& o) const;

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return value_ == o.value_; }
    bool operator!=(const Rational& o) const { return value_ != o.value_; }
    bool operator<(const Rational& o) const { return value_ < o.value_; }
    bool operator<=(const Rational& o) const { return value_ <= o.value_; }
    bool operator>(const Rational& o) const { return value_ > o.value_; }
    bool operator>=(const Rational& o) const { return value_ >= o.value_; }

    /// "p/q", or just "p" when the value is an integer.
    std::string str() const;

    double to_double() const { return value_.get_d(); }

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

    mpq_class value_;
};

Rational abs(const Rational& r);
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace sfs
