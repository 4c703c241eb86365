#pragma once

// Tumble sequences (words over {r, u} recording which grid lines a segment
// crosses) and tumble paths (the squares and corner labels the rolling cube
// leaves on the plane).

#include "tumblegeo/lattice.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tumblegeo {

class TumbleSequence {
    std::string letters_;

public:
    TumbleSequence() = default;
    /// Throws std::invalid_argument on letters other than 'r' and 'u'.
    explicit TumbleSequence(std::string letters);

    const std::string& str() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    char operator[](std::size_t i) const { return letters_[i]; }

    std::size_t count(char letter) const;
    /// Exchanges the letters r and u.
    TumbleSequence swapped_letters() const;
    TumbleSequence reversed() const;

    friend TumbleSequence operator+(const TumbleSequence& a, const TumbleSequence& b) {
        TumbleSequence w;
        w.letters_ = a.letters_ + b.letters_;
        return w;
    }
    friend bool operator==(const TumbleSequence&, const TumbleSequence&) = default;
};

/// The open segment runs into a lattice point, so no geodesic follows it.
class VertexHit : public std::runtime_error {
    LatticePoint where_;

public:
    explicit VertexHit(LatticePoint where);
    const LatticePoint& where() const { return where_; }
};

/// The geodesic tumble sequence from the origin to (a, b), gcd(a, b) = 1,
/// a, b >= 1. Letters are placed by the closed-form u positions
/// ceil(a i / b) + i - 1 (1-based) for b < a, mirrored for b > a, and (1,1)
/// gives the empty word. Throws std::domain_error otherwise.
TumbleSequence tumble_sequence(const Integer& a, const Integer& b);

/// Letters in the order the segment p -> q crosses vertical (r) and
/// horizontal (u) grid lines. Requires p in [0,1)^2 and q in the closed first
/// quadrant. Throws VertexHit if the open segment meets a lattice point.
TumbleSequence tumble_sequence_of_segment(const RationalPoint& p, const LatticePoint& q);

bool is_palindrome(const TumbleSequence& t);

struct Cell {
    std::int64_t x = 0;
    std::int64_t y = 0;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct TumblePath {
    /// Lower-left corners of the unit squares visited, in rolling order.
    std::vector<Cell> squares;
    /// Cube vertex label (0-7) resting on each lattice point touched.
    std::map<Cell, int> corner_labels;

    int label_at(std::int64_t x, std::int64_t y) const;
    /// The upper-right corner of the last square.
    Cell endpoint() const;
};

/// Rolls the cube through the word from the starting position and records
/// every square and corner label. Throws std::logic_error if a lattice point
/// would receive two different labels.
TumblePath tumble_path(const TumbleSequence& t);

/// Rebuilds the labelling from the first square's labels 0,1,2,3 using only
/// the rule that diagonally opposite corners of a domino sum to 7.
std::map<Cell, int> propagate_labels_by_sum_to_seven(const TumbleSequence& t);

/// Checks every domino (pair of consecutive squares) of the path.
bool sum_to_seven_holds(const TumblePath& path);

}  // namespace tumblegeo
