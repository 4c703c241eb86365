#include "tumblegeo/face.hpp"

#include <algorithm>
#include <map>

namespace tumblegeo {

OnBoundary::OnBoundary(std::size_t line)
    : std::runtime_error("start point lies on line " + std::to_string(line)), line_(line) {}

namespace {

void check_target(long long n, long long m) {
    if (n < 1 || m < 1) throw std::domain_error("target coordinates must be positive");
}

Integer cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) { return det(a - o, b - o); }

bool in_quadrilateral(const LatticePoint& q, const LatticePoint& p) {
    const LatticePoint corners[4] = {{0, 0}, {1, 0}, q, {0, 1}};
    bool nonneg = true, nonpos = true;
    for (int i = 0; i < 4; ++i) {
        Integer c = cross(corners[i], corners[(i + 1) % 4], p);
        nonneg = nonneg && c >= 0;
        nonpos = nonpos && c <= 0;
    }
    return nonneg || nonpos;
}

// > 0 when the line q -> q - v is steeper than q -> q - w; v, w point down-left
int compare_slopes(const LatticePoint& v, const LatticePoint& w) { return det(w, v).sign(); }

}  // namespace

TumbleSequence tau_zero(long long n, long long m) {
    check_target(n, m);
    std::string word(static_cast<std::size_t>(n + m - 2), 'r');
    for (long long j = 1; j < m; ++j) {
        Integer pos = Integer(n + m - j) - ceil_div(Integer(n * j), Integer(m - 1));
        word[pos.convert_to<std::size_t>() - 1] = 'u';
    }
    return TumbleSequence(std::move(word));
}

RegionDecomposition decompose(long long n, long long m) {
    check_target(n, m);
    RegionDecomposition d;
    d.target = {n, m};

    auto shallower = [](const LatticePoint& v, const LatticePoint& w) { return compare_slopes(v, w) < 0; };
    std::map<LatticePoint, std::vector<LatticePoint>, decltype(shallower)> groups(shallower);
    for (long long x = 0; x <= n; ++x) {
        for (long long y = 0; y <= m; ++y) {
            LatticePoint p{x, y};
            if ((x == 0 && y == 0) || (x == n && y == m) || !in_quadrilateral(d.target, p)) continue;
            LatticePoint v = d.target - p;
            Integer g = gcd(v.a, v.b);
            groups[{v.a / g, v.b / g}].push_back(p);
        }
    }
    for (auto& [dir, pts] : groups) {
        std::sort(pts.begin(), pts.end(), [](const LatticePoint& p, const LatticePoint& q) { return p.a + p.b < q.a + q.b; });
        d.lines.push_back({dir, pts});
        d.lattice_points.insert(d.lattice_points.end(), pts.begin(), pts.end());
    }

    d.regions.push_back(tau_zero(n, m));
    for (std::size_t i = 1; i + 1 < d.lines.size(); ++i) {
        std::string word = d.regions.back().str();
        for (const auto& p : d.lines[i].points) {
            auto at = (p.a + p.b).convert_to<std::size_t>();
            if (word[at - 2] != 'u' || word[at - 1] != 'r')
                throw std::logic_error("no ur to swap for " + p.str());
            word[at - 2] = 'r';
            word[at - 1] = 'u';
        }
        d.regions.emplace_back(std::move(word));
    }
    return d;
}

std::size_t region_of(const RationalPoint& p, const RegionDecomposition& d) {
    const Rational zero(0), one(1);
    if (p.x <= zero || p.x >= one || p.y <= zero || p.y >= one)
        throw std::domain_error("start point must lie in the open unit square");
    // v = target - p, scaled to integers
    Rational vx = Rational(d.target.a) - p.x, vy = Rational(d.target.b) - p.y;
    Integer scale = vx.denominator() * vy.denominator();
    LatticePoint v{(vx * Rational(scale)).numerator(), (vy * Rational(scale)).numerator()};
    std::size_t below = 0;
    for (std::size_t i = 0; i < d.lines.size(); ++i) {
        int c = compare_slopes(v, d.lines[i].direction);
        if (c == 0) throw OnBoundary(i);
        if (c > 0) below = i + 1;
    }
    if (below == 0 || below == d.lines.size()) throw std::logic_error("start point outside the fan");
    return below - 1;
}

std::size_t region_of(const RationalPoint& p, long long n, long long m) { return region_of(p, decompose(n, m)); }

}  // namespace tumblegeo
