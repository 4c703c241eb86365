#include "tumblegeo/stern_brocot.hpp"

#include <deque>
#include <stdexcept>

namespace tumblegeo {

namespace {

const LatticePoint kFormalPositive{0, 1};
const LatticePoint kFormalNegative{1, 0};

// ru, the element sandwiched by both recurrences
const CubeOrientation& right_up() {
    static const CubeOrientation ru = compose(orientations::right, orientations::up);
    return ru;
}

LatticePoint scaled(const LatticePoint& p, const Integer& k) { return {p.a * k, p.b * k}; }

}  // namespace

SBNode sb_root() { return SBNode{}; }

SBNode child(const SBNode& n, Sign s) {
    SBNode c;
    c.depth = n.depth + 1;
    if (s == Sign::positive) {
        c.point = n.point + n.pos_parent;
        c.pos_parent = n.pos_parent;
        c.neg_parent = n.point;
        c.child_sign = ChildSign::positive;
    } else {
        c.point = n.point + n.neg_parent;
        c.pos_parent = n.point;
        c.neg_parent = n.neg_parent;
        c.child_sign = ChildSign::negative;
    }
    return c;
}

SBChildren children(const SBNode& n) { return {child(n, Sign::positive), child(n, Sign::negative)}; }

Located locate(const Integer& a, const Integer& b) {
    if (a < 1 || b < 1) throw std::domain_error("Stern-Brocot nodes have positive coordinates");
    if (gcd(a, b) != 1) throw std::domain_error("Stern-Brocot nodes have coprime coordinates");

    const LatticePoint target{a, b};
    Located out;
    SBNode& node = out.node;
    CubeOrientation sigma_pos = orientation_of_parent_point(kFormalPositive);
    CubeOrientation sigma_neg = orientation_of_parent_point(kFormalNegative);

    for (;;) {
        LatticePoint t = node.pos_parent + node.neg_parent;
        Integer side = det(t, target);
        if (side.is_zero()) break;
        Integer d_pos = det(node.pos_parent, target);  // < 0: target is below t+
        Integer d_neg = det(node.neg_parent, target);  // > 0: target is above t-
        if (side.sign() > 0) {
            // positive steps t + j t+ while the target stays above
            Integer k = ceil_div(d_neg, -d_pos) - 1;
            node.neg_parent = node.neg_parent + scaled(node.pos_parent, k);
            sigma_neg = compose(power(compose(sigma_pos, right_up()), (k % 12).convert_to<unsigned>()), sigma_neg);
            out.path.push_back({Sign::positive, k});
            node.child_sign = ChildSign::positive;
            node.depth += k;
        } else {
            Integer k = ceil_div(-d_pos, d_neg) - 1;
            node.pos_parent = node.pos_parent + scaled(node.neg_parent, k);
            sigma_pos = compose(sigma_pos, power(compose(right_up(), sigma_neg), (k % 12).convert_to<unsigned>()));
            out.path.push_back({Sign::negative, k});
            node.child_sign = ChildSign::negative;
            node.depth += k;
        }
    }
    node.point = target;
    out.orientation = compose(compose(sigma_pos, right_up()), sigma_neg);
    return out;
}

std::string path_string(const std::vector<SignRun>& path) {
    std::string s;
    for (const auto& run : path) s.append(run.length.convert_to<std::size_t>(), sign_char(run.sign));
    return s;
}

CubeOrientation orientation_of_parent_point(const LatticePoint& parent) {
    if (parent == kFormalPositive) return orientations::right.inverse();
    if (parent == kFormalNegative) return orientations::up.inverse();
    throw std::invalid_argument("only the root's parents carry formal orientations");
}

CubeOrientation orientation_of_node(const SBNode& n) { return locate(n.point.a, n.point.b).orientation; }

namespace {

// A word, or nothing for the formal parents (0,1) and (1,0).
struct NodeWord {
    LatticePoint point;
    std::optional<std::string> word;
};

std::string repeat(const std::string& s, const Integer& times) {
    std::string out;
    auto n = times.convert_to<std::size_t>();
    out.reserve(s.size() * n);
    for (std::size_t i = 0; i < n; ++i) out += s;
    return out;
}

// Word of the node sitting between the two parents.
std::string node_word(const NodeWord& pos, const NodeWord& neg) {
    LatticePoint t = pos.point + neg.point;
    if (pos.word && neg.word) return *pos.word + "ru" + *neg.word;
    // branches leaving the root: (1, k+1) -> u^k and (k+1, 1) -> r^k
    if (t.a == 1) return std::string((t.b - 1).convert_to<std::size_t>(), 'u');
    return std::string((t.a - 1).convert_to<std::size_t>(), 'r');
}

}  // namespace

TumbleSequence tumble_of_node(const SBNode& n) {
    Located loc = locate(n.point.a, n.point.b);
    NodeWord pos{kFormalPositive, std::nullopt};
    NodeWord neg{kFormalNegative, std::nullopt};
    for (const auto& run : loc.path) {
        LatticePoint t = pos.point + neg.point;
        std::string wt = node_word(pos, neg);
        Integer extra = run.length - 1;
        if (run.sign == Sign::positive) {
            // t + i t+ has parents t+ and t + (i-1) t+
            LatticePoint p = t + scaled(pos.point, extra);
            if (!pos.word) neg = {p, std::string((p.b - 1).convert_to<std::size_t>(), 'u')};
            else neg = {p, repeat(*pos.word + "ru", extra) + wt};
        } else {
            LatticePoint p = t + scaled(neg.point, extra);
            if (!neg.word) pos = {p, std::string((p.a - 1).convert_to<std::size_t>(), 'r')};
            else pos = {p, wt + repeat("ru" + *neg.word, extra)};
        }
    }
    return TumbleSequence(node_word(pos, neg));
}

std::optional<Sign> branch_sign(const SBNode& n) {
    switch (n.child_sign) {
        case ChildSign::positive: return Sign::negative;
        case ChildSign::negative: return Sign::positive;
        case ChildSign::root: break;
    }
    return std::nullopt;
}

std::vector<SBNode> branch(const SBNode& n, Sign s, std::size_t count) {
    std::vector<SBNode> out;
    SBNode cur = n;
    for (std::size_t i = 0; i < count; ++i) {
        cur = child(cur, s);
        out.push_back(cur);
    }
    return out;
}

std::vector<CubeOrientation> branch_orientations(const SBNode& n, Sign s, std::size_t count) {
    std::vector<CubeOrientation> out;
    for (const auto& node : branch(n, s, count)) out.push_back(orientation_of_node(node));
    return out;
}

std::size_t minimal_period(const std::vector<CubeOrientation>& seq) {
    for (std::size_t p = 1; p < seq.size(); ++p) {
        bool ok = true;
        for (std::size_t i = 0; i + p < seq.size() && ok; ++i) ok = seq[i] == seq[i + p];
        if (ok) return p;
    }
    return seq.size();
}

std::vector<SBNode> nodes_to_depth(int max_depth) {
    std::vector<SBNode> out;
    if (max_depth < 0) return out;
    std::deque<SBNode> queue{sb_root()};
    while (!queue.empty()) {
        SBNode n = queue.front();
        queue.pop_front();
        out.push_back(n);
        if (n.depth < max_depth) {
            auto [pos, neg] = children(n);
            queue.push_back(pos);
            queue.push_back(neg);
        }
    }
    return out;
}

}  // namespace tumblegeo
