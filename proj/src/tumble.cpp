#include "tumblegeo/tumble.hpp"

#include "tumblegeo/cube_group.hpp"

#include <algorithm>

namespace tumblegeo {

TumbleSequence::TumbleSequence(std::string letters) : letters_(std::move(letters)) {
    for (char c : letters_)
        if (c != 'r' && c != 'u')
            throw std::invalid_argument(std::string("tumble letter must be r or u, got '") + c + "'");
}

std::size_t TumbleSequence::count(char letter) const {
    return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), letter));
}

TumbleSequence TumbleSequence::swapped_letters() const {
    TumbleSequence w = *this;
    for (char& c : w.letters_) c = c == 'r' ? 'u' : 'r';
    return w;
}

TumbleSequence TumbleSequence::reversed() const {
    TumbleSequence w = *this;
    std::reverse(w.letters_.begin(), w.letters_.end());
    return w;
}

VertexHit::VertexHit(LatticePoint where)
    : std::runtime_error("segment passes through lattice point " + where.str()), where_(std::move(where)) {}

TumbleSequence tumble_sequence(const Integer& a, const Integer& b) {
    if (a < 1 || b < 1) throw std::domain_error("tumble_sequence needs a, b >= 1");
    if (gcd(a, b) != 1) throw std::domain_error("tumble_sequence needs gcd(a, b) = 1");
    if (a == 1 && b == 1) return {};
    if (b > a) return tumble_sequence(b, a).swapped_letters();

    auto length = (a + b - 2).convert_to<std::size_t>();
    std::string word(length, 'r');
    auto count = b.convert_to<std::size_t>();
    for (std::size_t i = 1; i < count; ++i) {
        Integer pos = ceil_div(a * i, b) + i - 1;
        word[pos.convert_to<std::size_t>() - 1] = 'u';
    }
    return TumbleSequence(std::move(word));
}

namespace {

// Integers k with lo < k < hi, in the direction from lo to hi.
std::vector<Integer> integers_strictly_between(const Rational& from, const Rational& to) {
    std::vector<Integer> out;
    if (from < to) {
        for (Integer k = from.floor() + 1; Rational(k) < to; ++k) out.push_back(k);
    } else {
        for (Integer k = from.ceil() - 1; Rational(k) > to; --k) out.push_back(k);
    }
    return out;
}

}  // namespace

TumbleSequence tumble_sequence_of_segment(const RationalPoint& p, const LatticePoint& q) {
    if (!p.in_unit_cell()) throw std::domain_error("start point must lie in [0,1)^2");
    if (q.a.sign() < 0 || q.b.sign() < 0) throw std::domain_error("target must lie in the closed first quadrant");
    if (auto blocker = first_blocker(p, q)) throw VertexHit(*blocker);

    Rational dx = Rational(q.a) - p.x;
    Rational dy = Rational(q.b) - p.y;
    auto verticals = integers_strictly_between(p.x, Rational(q.a));
    auto horizontals = integers_strictly_between(p.y, Rational(q.b));

    // Crossing parameters along the segment: (k - px)/dx and (l - py)/dy.
    std::string word;
    word.reserve(verticals.size() + horizontals.size());
    std::size_t i = 0, j = 0;
    while (i < verticals.size() || j < horizontals.size()) {
        if (j == horizontals.size()) {
            word.push_back('r');
            ++i;
        } else if (i == verticals.size()) {
            word.push_back('u');
            ++j;
        } else {
            Rational tv = (Rational(verticals[i]) - p.x) / dx;
            Rational th = (Rational(horizontals[j]) - p.y) / dy;
            if (tv == th) throw VertexHit(LatticePoint{verticals[i], horizontals[j]});
            if (tv < th) {
                word.push_back('r');
                ++i;
            } else {
                word.push_back('u');
                ++j;
            }
        }
    }
    return TumbleSequence(std::move(word));
}

bool is_palindrome(const TumbleSequence& t) {
    const auto& s = t.str();
    return std::equal(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(s.size() / 2), s.rbegin());
}

int TumblePath::label_at(std::int64_t x, std::int64_t y) const {
    auto it = corner_labels.find(Cell{x, y});
    if (it == corner_labels.end()) throw std::out_of_range("lattice point not on the tumble path");
    return it->second;
}

Cell TumblePath::endpoint() const {
    const Cell& last = squares.back();
    return Cell{last.x + 1, last.y + 1};
}

namespace {

void record_square(TumblePath& path, const CubeState& st, Cell at) {
    path.squares.push_back(at);
    for (int dx = 0; dx < 2; ++dx)
        for (int dy = 0; dy < 2; ++dy) {
            Cell corner{at.x + dx, at.y + dy};
            int label = st.bottom_label(dx, dy);
            auto [it, inserted] = path.corner_labels.emplace(corner, label);
            if (!inserted && it->second != label) throw std::logic_error("inconsistent corner label on tumble path");
        }
}

}  // namespace

TumblePath tumble_path(const TumbleSequence& t) {
    TumblePath path;
    CubeState st;
    Cell at{0, 0};
    record_square(path, st, at);
    for (char c : t.str()) {
        st.roll(c);
        if (c == 'r') ++at.x;
        else ++at.y;
        record_square(path, st, at);
    }
    return path;
}

std::map<Cell, int> propagate_labels_by_sum_to_seven(const TumbleSequence& t) {
    std::map<Cell, int> labels{{{0, 0}, 0}, {{1, 0}, 1}, {{0, 1}, 2}, {{1, 1}, 3}};
    Cell at{0, 0};
    for (char c : t.str()) {
        // the two new corners sit opposite the far corners of the old square
        if (c == 'r') {
            labels[{at.x + 2, at.y}] = 7 - labels.at({at.x, at.y + 1});
            labels[{at.x + 2, at.y + 1}] = 7 - labels.at({at.x, at.y});
            ++at.x;
        } else {
            labels[{at.x, at.y + 2}] = 7 - labels.at({at.x + 1, at.y});
            labels[{at.x + 1, at.y + 2}] = 7 - labels.at({at.x, at.y});
            ++at.y;
        }
    }
    return labels;
}

bool sum_to_seven_holds(const TumblePath& path) {
    for (std::size_t i = 1; i < path.squares.size(); ++i) {
        Cell lo{std::min(path.squares[i - 1].x, path.squares[i].x), std::min(path.squares[i - 1].y, path.squares[i].y)};
        Cell hi{std::max(path.squares[i - 1].x, path.squares[i].x) + 1,
                std::max(path.squares[i - 1].y, path.squares[i].y) + 1};
        int ll = path.label_at(lo.x, lo.y), ur = path.label_at(hi.x, hi.y);
        int lr = path.label_at(hi.x, lo.y), ul = path.label_at(lo.x, hi.y);
        if (ll + ur != 7 || lr + ul != 7) return false;
    }
    return true;
}

}  // namespace tumblegeo
