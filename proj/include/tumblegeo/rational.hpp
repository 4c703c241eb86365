#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational arithmetic over arbitrary-precision integers.
 *
 * Values are always stored in lowest terms with a positive denominator,
 * and zero is uniquely 0/1.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>

namespace tumblegeo {

using Integer = boost::multiprecision::cpp_int;

Integer gcd(const Integer& a, const Integer& b);

/// Floor and ceiling of n/d for d != 0.
Integer floor_div(const Integer& n, const Integer& d);
Integer ceil_div(const Integer& n, const Integer& d);

class Rational {
    Integer num_;
    Integer den_;

    void reduce();

public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design of the number tower
    Rational(Integer n) : num_(std::move(n)), den_(1) {}  // NOLINT
    Rational(Integer n, Integer d);

    /// Parses "p", "p/q" or "-p/q".
    static Rational parse(const std::string& text);

    const Integer& numerator() const { return num_; }
    const Integer& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_.sign(); }

    Integer floor() const { return floor_div(num_, den_); }
    Integer ceil() const { return ceil_div(num_, den_); }

    explicit operator double() const;
    std::string str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);
};

Rational abs(const Rational& x);

std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace tumblegeo
