#pragma once

// Geodesics from a point of the unit square to a lattice point (n, m).
//
// The lattice points of the quadrilateral (0,0), (1,0), (n,m), (0,1), other
// than (0,0) and (n,m), lie on finitely many lines through (n,m). Sorted by
// slope they cut the unit square into open regions, and all start points in
// one region share a tumble sequence. Consecutive sequences differ by
// replacing "ur" with "ru" at positions x+y-1, x+y for each lattice point
// (x, y) on the line between them.

#include "tumblegeo/lattice.hpp"
#include "tumblegeo/tumble.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace tumblegeo {

struct FaceLine {
    /// Primitive direction from the target to the points of the line.
    LatticePoint direction;
    /// Lattice points of the line, ascending x + y.
    std::vector<LatticePoint> points;
};

struct RegionDecomposition {
    LatticePoint target;
    /// All lattice points of the quadrilateral except its corners (0,0) and
    /// the target, in line order.
    std::vector<LatticePoint> lattice_points;
    /// Ascending slope; the first passes through (0,1), the last through (1,0).
    std::vector<FaceLine> lines;
    /// regions[i] lies between lines[i] and lines[i+1].
    std::vector<TumbleSequence> regions;
};

/// The start point lies on one of the lines, so the segment to the target
/// runs through a lattice point.
class OnBoundary : public std::runtime_error {
    std::size_t line_;

public:
    explicit OnBoundary(std::size_t line);
    std::size_t line() const { return line_; }
};

/// The word with u exactly at the 1-based positions n+m-j-ceil(nj/(m-1)),
/// j = 1..m-1; all r's when m = 1. Throws std::domain_error unless n, m >= 1.
TumbleSequence tau_zero(long long n, long long m);

/// Builds the lines and the sequence of every region for any n, m >= 1.
/// Throws std::domain_error for nonpositive coordinates and std::logic_error
/// if a swap position does not hold "ur".
RegionDecomposition decompose(long long n, long long m);

/// Index of the open region containing p in (0,1)^2, by exact sign tests.
/// Throws OnBoundary if p is on a line, std::domain_error outside (0,1)^2.
std::size_t region_of(const RationalPoint& p, const RegionDecomposition& d);
std::size_t region_of(const RationalPoint& p, long long n, long long m);

}  // namespace tumblegeo
