#pragma once

// Cube orientations as permutations of the four main diagonals.
//
// Diagonal i is the one touching bottom vertex i in the starting position.
// An orientation is written in one-line notation: perm[j] is the diagonal
// currently occupying the place diagonal j had at the start. Rolls are
// appended on the right: rolling a cube in orientation s by x gives
// compose(s, x), where compose(s, t)[i] = s[t[i]].

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace tumblegeo {

class CubeOrientation {
    std::array<std::uint8_t, 4> perm_{0, 1, 2, 3};

public:
    constexpr CubeOrientation() = default;
    /// Throws std::invalid_argument unless the images form a bijection on {0,1,2,3}.
    explicit CubeOrientation(std::array<std::uint8_t, 4> perm);
    /// Parses one-line notation such as "1230".
    static CubeOrientation parse(std::string_view text);

    std::uint8_t operator[](std::size_t i) const { return perm_[i]; }
    const std::array<std::uint8_t, 4>& images() const { return perm_; }
    std::string str() const;
    /// Dense index in [0, 24), lexicographic in one-line notation.
    int index() const;

    CubeOrientation inverse() const;
    /// Smallest k >= 1 with s^k = identity.
    int order() const;

    friend bool operator==(const CubeOrientation&, const CubeOrientation&) = default;
    friend auto operator<=>(const CubeOrientation&, const CubeOrientation&) = default;
};

CubeOrientation compose(const CubeOrientation& s, const CubeOrientation& t);
CubeOrientation power(const CubeOrientation& s, unsigned long long k);

namespace orientations {
inline const CubeOrientation identity{};
extern const CubeOrientation right;  // 1230
extern const CubeOrientation up;     // 2310
}  // namespace orientations

/// The orientation after rolling the word (letters 'r' and 'u') from the
/// starting position. Throws std::invalid_argument on other letters.
CubeOrientation orientation_of(std::string_view word);

/// Explicit placement of the eight labelled cube vertices. Label k starts at
/// the corner whose binary coordinates spell k (bit 0 = x, 1 = y, 2 = z).
class CubeState {
    // slot index is the local corner x + 2y + 4z; value is the label there
    std::array<std::uint8_t, 8> label_at_{0, 1, 2, 3, 4, 5, 6, 7};

public:
    CubeState() = default;

    /// Roll across the edge x = 1 (letter 'r') or y = 1 (letter 'u').
    void roll(char letter);
    static CubeState after(std::string_view word);

    /// Label at local corner (x, y, z) of the current cell, coordinates in {0,1}.
    int label_at(int x, int y, int z) const { return label_at_[x + 2 * y + 4 * z]; }
    /// Label touching the plane at the (x, y) corner of the bottom face.
    int bottom_label(int x, int y) const { return label_at(x, y, 0); }

    /// Reads the diagonal permutation off the bottom face.
    CubeOrientation diagonal_reading() const;
    /// Every label adjacent on the cube sits on adjacent corners.
    bool preserves_adjacency() const;
};

/// Label touching the upper-right corner of the bottom face once the cube is
/// in orientation o. The 24-entry table is derived by roll simulation on
/// first use.
int endpoint_vertex(const CubeOrientation& o);

}  // namespace tumblegeo
