#pragma once

// Lattice points, rational start points, the denominator function and
// sight-line visibility. Coordinates are interpreted in whichever basis the
// caller uses: the unit square basis for the cube, or the u/v basis of the
// triangular lattice for the tetrahedron. Visibility is affine-invariant, so
// one implementation serves both.

#include "tumblegeo/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace tumblegeo {

struct LatticePoint {
    Integer a;
    Integer b;

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend LatticePoint operator+(const LatticePoint& p, const LatticePoint& q) {
        return {p.a + q.a, p.b + q.b};
    }
    friend LatticePoint operator-(const LatticePoint& p, const LatticePoint& q) {
        return {p.a - q.a, p.b - q.b};
    }
    std::string str() const { return "(" + a.str() + "," + b.str() + ")"; }
};

struct RationalPoint {
    Rational x;
    Rational y;

    RationalPoint() = default;
    RationalPoint(Rational x_, Rational y_) : x(std::move(x_)), y(std::move(y_)) {}
    explicit RationalPoint(const LatticePoint& q) : x(q.a), y(q.b) {}

    friend bool operator==(const RationalPoint&, const RationalPoint&) = default;

    /// True when 0 <= x < 1 and 0 <= y < 1.
    bool in_unit_cell() const;
    /// Parses "x,y" where each coordinate is an integer or p/q.
    static RationalPoint parse(const std::string& text);
    std::string str() const { return "(" + x.str() + "," + y.str() + ")"; }
};

/// Tag for a coordinate known to be irrational. Such values are never built
/// numerically; the tag only lets callers state the denominator contract.
struct Irrational {};

/// The denominator function: 1/d for x = c/d in lowest terms.
Rational denom(const Rational& x);
/// Irrationals have denominator 0, which makes every bound of the form
/// denom(...) <= 1/a hold vacuously.
Rational denom(Irrational);

/// Raised when visibility is asked of a segment with coincident endpoints.
class DegenerateSegment : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// True iff the open segment from p to q contains no lattice point.
/// Works for every direction, including axis-parallel segments.
bool visible_from(const RationalPoint& p, const LatticePoint& q);

/// The lattice point on the open segment p -> q closest to p, if any. That
/// point is itself visible from p.
std::optional<LatticePoint> first_blocker(const RationalPoint& p, const LatticePoint& q);

/// The sector form of the criterion: for 0 <= x < 1 and a > x, b >= y,
/// q is visible iff denom((b - y)/(a - x)) <= 1/a. Throws std::domain_error
/// outside the sector.
bool visible_by_denominator(const RationalPoint& p, const LatticePoint& q);

/// The criterion with an irrational slope; always true.
inline bool visible_by_denominator(Irrational, const Integer& a) {
    return denom(Irrational{}) <= Rational(1, a);
}

/// Visibility from the origin for a point in the closed first quadrant:
/// gcd(a, b) = 1.
bool visible_from_origin(const LatticePoint& q);

/// <t, t'> = x y' - y x', the skew form whose absolute value is the area of
/// the parallelogram spanned by t and t'.
inline Integer det(const LatticePoint& t, const LatticePoint& s) { return t.a * s.b - t.b * s.a; }

}  // namespace tumblegeo
