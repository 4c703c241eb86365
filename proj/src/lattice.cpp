#include "tumblegeo/lattice.hpp"

namespace tumblegeo {

bool RationalPoint::in_unit_cell() const {
    return x.sign() >= 0 && x < Rational(1) && y.sign() >= 0 && y < Rational(1);
}

RationalPoint RationalPoint::parse(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("expected 'x,y', got '" + text + "'");
    return {Rational::parse(text.substr(0, comma)), Rational::parse(text.substr(comma + 1))};
}

Rational denom(const Rational& x) { return Rational(Integer(1), x.denominator()); }

Rational denom(Irrational) { return Rational(0); }

std::optional<LatticePoint> first_blocker(const RationalPoint& p, const LatticePoint& q) {
    Rational dx = Rational(q.a) - p.x;
    Rational dy = Rational(q.b) - p.y;
    if (dx.is_zero() && dy.is_zero()) throw DegenerateSegment("segment endpoints coincide");

    // (dx, dy) = (g / scale) * (e, f) with (e, f) a primitive integer vector.
    Integer scale = dx.denominator() / gcd(dx.denominator(), dy.denominator()) * dy.denominator();
    Integer ix = dx.numerator() * (scale / dx.denominator());
    Integer iy = dy.numerator() * (scale / dy.denominator());
    Integer g = gcd(ix, iy);
    LatticePoint step{ix / g, iy / g};

    // Lattice points on the line are q - j * step; those with 0 < j < g/scale
    // lie strictly inside the segment.
    if (g <= scale) return std::nullopt;
    Integer j = ceil_div(g, scale) - 1;
    return LatticePoint{q.a - j * step.a, q.b - j * step.b};
}

bool visible_from(const RationalPoint& p, const LatticePoint& q) {
    return !first_blocker(p, q).has_value();
}

bool visible_by_denominator(const RationalPoint& p, const LatticePoint& q) {
    if (p.x.sign() < 0 || p.x >= Rational(1)) throw std::domain_error("start point needs 0 <= x < 1");
    if (!(Rational(q.a) > p.x) || Rational(q.b) < p.y)
        throw std::domain_error("lattice point outside the sector a > x, b >= y");
    return denom((Rational(q.b) - p.y) / (Rational(q.a) - p.x)) <= Rational(Integer(1), q.a);
}

bool visible_from_origin(const LatticePoint& q) {
    if (q.a.sign() < 0 || q.b.sign() < 0)
        throw std::domain_error("point must lie in the closed first quadrant");
    if (q.a.is_zero() && q.b.is_zero()) throw DegenerateSegment("origin is not a target");
    return gcd(q.a, q.b) == 1;
}

}  // namespace tumblegeo
