#include "tumblegeo/cube_group.hpp"

#include <bit>
#include <deque>
#include <optional>
#include <stdexcept>

namespace tumblegeo {

CubeOrientation::CubeOrientation(std::array<std::uint8_t, 4> perm) : perm_(perm) {
    unsigned seen = 0;
    for (auto v : perm_) {
        if (v > 3) throw std::invalid_argument("orientation image out of range");
        seen |= 1u << v;
    }
    if (seen != 0xF) throw std::invalid_argument("orientation is not a permutation");
}

CubeOrientation CubeOrientation::parse(std::string_view text) {
    if (text.size() != 4) throw std::invalid_argument("orientation must have four digits");
    std::array<std::uint8_t, 4> perm{};
    for (std::size_t i = 0; i < 4; ++i) {
        if (text[i] < '0' || text[i] > '3') throw std::invalid_argument("orientation digit out of range");
        perm[i] = static_cast<std::uint8_t>(text[i] - '0');
    }
    return CubeOrientation(perm);
}

std::string CubeOrientation::str() const {
    std::string s(4, '0');
    for (std::size_t i = 0; i < 4; ++i) s[i] = static_cast<char>('0' + perm_[i]);
    return s;
}

int CubeOrientation::index() const {
    // Lehmer code
    int idx = 0;
    for (int i = 0; i < 4; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < 4; ++j) smaller += perm_[j] < perm_[i];
        idx = idx * (4 - i) + smaller;
    }
    return idx;
}

CubeOrientation CubeOrientation::inverse() const {
    std::array<std::uint8_t, 4> inv{};
    for (std::uint8_t i = 0; i < 4; ++i) inv[perm_[i]] = i;
    return CubeOrientation(inv);
}

int CubeOrientation::order() const {
    CubeOrientation acc = *this;
    int k = 1;
    while (acc != CubeOrientation{}) {
        acc = compose(acc, *this);
        ++k;
    }
    return k;
}

CubeOrientation compose(const CubeOrientation& s, const CubeOrientation& t) {
    return CubeOrientation({s[t[0]], s[t[1]], s[t[2]], s[t[3]]});
}

CubeOrientation power(const CubeOrientation& s, unsigned long long k) {
    // every element of S4 has order dividing 12
    CubeOrientation acc;
    for (unsigned long long i = 0; i < k % 12; ++i) acc = compose(acc, s);
    return acc;
}

namespace orientations {
const CubeOrientation right = CubeOrientation::parse("1230");
const CubeOrientation up = CubeOrientation::parse("2310");
}  // namespace orientations

CubeOrientation orientation_of(std::string_view word) {
    CubeOrientation s;
    for (char c : word) {
        if (c == 'r') s = compose(s, orientations::right);
        else if (c == 'u') s = compose(s, orientations::up);
        else throw std::invalid_argument(std::string("tumble letter must be r or u, got '") + c + "'");
    }
    return s;
}

void CubeState::roll(char letter) {
    std::array<std::uint8_t, 8> next{};
    for (int slot = 0; slot < 8; ++slot) {
        int x = slot & 1, y = (slot >> 1) & 1, z = (slot >> 2) & 1;
        int nx = x, ny = y, nz = z;
        if (letter == 'r') {
            nx = z;
            nz = 1 - x;
        } else if (letter == 'u') {
            ny = z;
            nz = 1 - y;
        } else {
            throw std::invalid_argument(std::string("tumble letter must be r or u, got '") + letter + "'");
        }
        next[nx + 2 * ny + 4 * nz] = label_at_[slot];
    }
    label_at_ = next;
}

CubeState CubeState::after(std::string_view word) {
    CubeState st;
    for (char c : word) st.roll(c);
    return st;
}

CubeOrientation CubeState::diagonal_reading() const {
    std::array<std::uint8_t, 4> perm{};
    for (int j = 0; j < 4; ++j) {
        int label = label_at_[j];  // bottom corner j
        perm[j] = static_cast<std::uint8_t>(label < 4 ? label : 7 - label);
    }
    return CubeOrientation(perm);
}

bool CubeState::preserves_adjacency() const {
    // labels are binary coordinates, so cube-adjacent labels differ in one bit,
    // and so do adjacent slots
    for (int s = 0; s < 8; ++s)
        for (int t = s + 1; t < 8; ++t) {
            bool slots_adjacent = std::popcount(static_cast<unsigned>(s ^ t)) == 1;
            bool labels_adjacent = std::popcount(static_cast<unsigned>(label_at_[s] ^ label_at_[t])) == 1;
            if (slots_adjacent != labels_adjacent) return false;
        }
    return true;
}

namespace {

std::array<int, 24> build_endpoint_table() {
    // breadth-first over roll words until every orientation has a witness
    std::array<std::optional<CubeState>, 24> witness;
    std::deque<CubeState> queue{CubeState{}};
    witness[CubeOrientation{}.index()] = CubeState{};
    while (!queue.empty()) {
        CubeState st = queue.front();
        queue.pop_front();
        for (char c : {'r', 'u'}) {
            CubeState next = st;
            next.roll(c);
            int idx = next.diagonal_reading().index();
            if (!witness[idx]) {
                witness[idx] = next;
                queue.push_back(next);
            }
        }
    }
    std::array<int, 24> table{};
    for (int i = 0; i < 24; ++i) {
        if (!witness[i]) throw std::logic_error("roll group does not reach every orientation");
        table[i] = witness[i]->bottom_label(1, 1);
    }
    return table;
}

}  // namespace

int endpoint_vertex(const CubeOrientation& o) {
    static const std::array<int, 24> table = build_endpoint_table();
    return table[o.index()];
}

}  // namespace tumblegeo
