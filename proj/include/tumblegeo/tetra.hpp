#pragma once

// Geodesics from a point to a vertex on the unit regular tetrahedron.
//
// The tetrahedron rolls over the triangular lattice spanned by
// u = (1/2, sqrt3/2) and v = (1/2, -sqrt3/2); lattice points a u + b v carry
// the vertex label (a mod 2, b mod 2). Start points are given in the same
// u/v coordinates on the bottom face, and directions are kept exact: the
// tangent of the starting angle is sqrt3 * num / den with num, den integers.

#include "tumblegeo/lattice.hpp"

#include <string>
#include <vector>

namespace tumblegeo {

struct TetraVertexLabel {
    int first = 0;   // a mod 2
    int second = 0;  // b mod 2

    TetraVertexLabel() = default;
    /// Throws std::invalid_argument unless both entries are 0 or 1.
    TetraVertexLabel(int first_, int second_);
    /// Parses "a,b" with a, b in {0, 1}.
    static TetraVertexLabel parse(const std::string& text);
    std::string str() const { return std::to_string(first) + "," + std::to_string(second); }
    friend bool operator==(const TetraVertexLabel&, const TetraVertexLabel&) = default;
};

TetraVertexLabel chi(const LatticePoint& q);

struct TetraGeodesic {
    LatticePoint target;
    /// (a - x, b - y) in the u/v basis.
    Rational du;
    Rational dv;
    /// tan(alpha) = sqrt3 * tangent_num / tangent_den, reduced, den != 0 unless
    /// the direction is vertical. In the canonical sector tangent_den > 0.
    Integer tangent_num;
    Integer tangent_den;

    /// Tangent coefficient tangent_num / tangent_den (requires tangent_den != 0).
    Rational tangent_over_sqrt3() const { return Rational(tangent_num, tangent_den); }
    /// Starting angle in degrees in (-180, 180], measured from the x axis.
    double angle_degrees() const;
};

/// Every geodesic from p to the vertex with the given label whose lattice
/// endpoint a u + b v satisfies a + b <= bound, a > x and b >= y (starting
/// angles in (-60, 60] degrees). Ordered by a + b, then a.
/// Throws std::domain_error unless p lies in [0,1)^2 and bound >= 1.
std::vector<TetraGeodesic> geodesics_to_vertex(const RationalPoint& p, const TetraVertexLabel& label, long long bound);

/// Same as geodesics_to_vertex but over every direction: all visible lattice
/// points with |a| + |b| <= bound other than p itself. Ordered by |a| + |b|,
/// then a, then b.
std::vector<TetraGeodesic> geodesics_to_vertex_all_directions(const RationalPoint& p, const TetraVertexLabel& label,
                                                              long long bound);

/// Tangent coefficients (a - b)/(a + b) of the vertex-to-vertex geodesics
/// from vertex (0,0) to the label, in the canonical sector, a + b <= bound.
std::vector<Rational> vertex_to_vertex_angles(const TetraVertexLabel& label, long long bound);

}  // namespace tumblegeo
