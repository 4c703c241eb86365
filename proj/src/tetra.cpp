#include "tumblegeo/tetra.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tumblegeo {

TetraVertexLabel::TetraVertexLabel(int first_, int second_) : first(first_), second(second_) {
    if ((first != 0 && first != 1) || (second != 0 && second != 1))
        throw std::invalid_argument("tetrahedron labels are pairs of bits");
}

TetraVertexLabel TetraVertexLabel::parse(const std::string& text) {
    if (text.size() != 3 || text[1] != ',' || (text[0] != '0' && text[0] != '1') || (text[2] != '0' && text[2] != '1'))
        throw std::invalid_argument("label must be one of 0,0 0,1 1,0 1,1; got '" + text + "'");
    return {text[0] - '0', text[2] - '0'};
}

TetraVertexLabel chi(const LatticePoint& q) {
    auto parity = [](const Integer& n) { return static_cast<int>(boost::multiprecision::bit_test(n, 0)); };
    return {parity(q.a), parity(q.b)};
}

double TetraGeodesic::angle_degrees() const {
    double y = std::numbers::sqrt3 * tangent_num.convert_to<double>();
    double x = tangent_den.convert_to<double>();
    return std::atan2(y, x) * 180.0 / std::numbers::pi;
}

namespace {

TetraGeodesic make_geodesic(const RationalPoint& p, const LatticePoint& q) {
    TetraGeodesic g;
    g.target = q;
    g.du = Rational(q.a) - p.x;
    g.dv = Rational(q.b) - p.y;
    // tan = sqrt3 (du - dv) / (du + dv); clear denominators, keep signs
    Rational num = g.du - g.dv;
    Rational den = g.du + g.dv;
    Integer scale = num.denominator() * den.denominator();
    Integer n = num.numerator() * (scale / num.denominator());
    Integer d = den.numerator() * (scale / den.denominator());
    Integer common = gcd(n, d);
    g.tangent_num = n / common;
    g.tangent_den = d / common;
    return g;
}

void check_start(const RationalPoint& p, long long bound) {
    if (!p.in_unit_cell()) throw std::domain_error("start point must satisfy 0 <= x, y < 1");
    if (bound < 1) throw std::domain_error("bound must be positive");
}

}  // namespace

std::vector<TetraGeodesic> geodesics_to_vertex(const RationalPoint& p, const TetraVertexLabel& label, long long bound) {
    check_start(p, bound);
    std::vector<TetraGeodesic> out;
    for (long long sum = 1; sum <= bound; ++sum) {
        for (long long a = 1; a <= sum; ++a) {
            long long b = sum - a;
            if ((a & 1) != label.first || (b & 1) != label.second) continue;
            LatticePoint q{a, b};
            if (Rational(q.b) < p.y) continue;
            if (!visible_from(p, q)) continue;
            out.push_back(make_geodesic(p, q));
        }
    }
    return out;
}

std::vector<TetraGeodesic> geodesics_to_vertex_all_directions(const RationalPoint& p, const TetraVertexLabel& label,
                                                              long long bound) {
    check_start(p, bound);
    std::vector<TetraGeodesic> out;
    for (long long norm = 0; norm <= bound; ++norm) {
        for (long long a = -norm; a <= norm; ++a) {
            long long rest = norm - (a < 0 ? -a : a);
            for (int side = 0; side < (rest == 0 ? 1 : 2); ++side) {
                long long b = side == 0 ? -rest : rest;
                if ((a & 1) != label.first || (b & 1) != label.second) continue;
                LatticePoint q{a, b};
                if (RationalPoint(q) == p) continue;
                if (!visible_from(p, q)) continue;
                out.push_back(make_geodesic(p, q));
            }
        }
    }
    return out;
}

std::vector<Rational> vertex_to_vertex_angles(const TetraVertexLabel& label, long long bound) {
    std::vector<Rational> out;
    for (const auto& g : geodesics_to_vertex(RationalPoint{}, label, bound)) out.push_back(g.tangent_over_sqrt3());
    return out;
}

}  // namespace tumblegeo
