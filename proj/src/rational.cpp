#include "tumblegeo/rational.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string_view>

namespace tumblegeo {

Integer gcd(const Integer& a, const Integer& b) {
    return boost::multiprecision::gcd(a, b);
}

Integer floor_div(const Integer& n, const Integer& d) {
    if (d.is_zero()) throw std::domain_error("division by zero");
    Integer q;
    Integer r;
    boost::multiprecision::divide_qr(n, d, q, r);  // truncates toward zero
    if (!r.is_zero() && ((r.sign() < 0) != (d.sign() < 0))) --q;
    return q;
}

Integer ceil_div(const Integer& n, const Integer& d) {
    return -floor_div(-n, d);
}

Rational::Rational(Integer n, Integer d) : num_(std::move(n)), den_(std::move(d)) {
    reduce();
}

void Rational::reduce() {
    if (den_.is_zero()) throw std::domain_error("rational with zero denominator");
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Integer g = gcd(num_, den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::parse(const std::string& text) {
    auto is_integer_text = [](std::string_view t) {
        if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
        return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    auto slash = text.find('/');
    std::string_view whole(text);
    if (slash == std::string::npos ? !is_integer_text(whole)
                                   : !is_integer_text(whole.substr(0, slash)) || !is_integer_text(whole.substr(slash + 1)))
        throw std::invalid_argument("malformed rational: '" + text + "'");
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        return Rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
    } catch (const std::domain_error&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational: '" + text + "'");
    }
}

Rational::operator double() const {
    return num_.convert_to<double>() / den_.convert_to<double>();
}

std::string Rational::str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
    reduce();
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ *= rhs.den_;
    reduce();
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    reduce();
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.num_.is_zero()) throw std::domain_error("division by zero");
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    reduce();
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    Integer lhs = a.num_ * b.den_;
    Integer rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

}  // namespace tumblegeo
