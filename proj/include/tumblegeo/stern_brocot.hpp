#pragma once

// The Stern-Brocot tree on lattice points visible from the origin.
//
// Every node t carries a positive parent t+ and a negative parent t- with
// t = t+ + t-. The root is (1,1) with formal parents (0,1) and (1,0). The
// positive child is t + t+ and the negative child is t + t-. Nodes are
// computed on demand; the tree itself is never stored.

#include "tumblegeo/cube_group.hpp"
#include "tumblegeo/lattice.hpp"
#include "tumblegeo/tumble.hpp"

#include <optional>
#include <vector>

namespace tumblegeo {

enum class Sign { negative, positive };

inline char sign_char(Sign s) { return s == Sign::positive ? '+' : '-'; }

enum class ChildSign { root, negative, positive };

struct SBNode {
    LatticePoint point{1, 1};
    LatticePoint pos_parent{0, 1};
    LatticePoint neg_parent{1, 0};
    Integer depth = 0;
    ChildSign child_sign = ChildSign::root;

    bool is_root() const { return child_sign == ChildSign::root; }
    friend bool operator==(const SBNode&, const SBNode&) = default;
};

SBNode sb_root();

struct SBChildren {
    SBNode positive;
    SBNode negative;
};

SBNode child(const SBNode& n, Sign s);
SBChildren children(const SBNode& n);

/// A maximal run of same-sign steps on the way down from the root.
struct SignRun {
    Sign sign;
    Integer length;
    friend bool operator==(const SignRun&, const SignRun&) = default;
};

struct Located {
    SBNode node;
    /// Run-length encoded signs of the edges from the root to the node.
    std::vector<SignRun> path;
    /// Orientation of the node, evaluated along the way.
    CubeOrientation orientation;
};

/// Finds (a, b) in the tree by batched mediant descent: each run of equal
/// signs is one division step, so the cost is O(log(a + b)) big-integer
/// operations. Throws std::domain_error unless a, b >= 1 and gcd(a, b) = 1.
Located locate(const Integer& a, const Integer& b);

/// The path as a flat string of '+' and '-' characters.
std::string path_string(const std::vector<SignRun>& path);

/// tau(t) via tau(t+) ru tau(t-), with the closed forms u^k and r^k on the
/// two branches leaving the root.
TumbleSequence tumble_of_node(const SBNode& n);

/// sigma(t) via sigma(t+) ru sigma(t-), with sigma((0,1)) = r^-1 and
/// sigma((1,0)) = u^-1. Never builds the word.
CubeOrientation orientation_of_node(const SBNode& n);

/// The formal orientations of the root's parents.
CubeOrientation orientation_of_parent_point(const LatticePoint& parent);

/// The sign of the branch b(n): for a non-root node, the sign opposite to the
/// edge that created it. The root has both; pass the sign explicitly.
std::optional<Sign> branch_sign(const SBNode& n);

/// The first count nodes of the branch of n with the given sign: the
/// repeated same-sign children n_s, (n_s)_s, ...
std::vector<SBNode> branch(const SBNode& n, Sign s, std::size_t count);

/// Orientations along the branch.
std::vector<CubeOrientation> branch_orientations(const SBNode& n, Sign s, std::size_t count);

/// Smallest p >= 1 with seq[i + p] = seq[i] for every valid i.
std::size_t minimal_period(const std::vector<CubeOrientation>& seq);

/// All nodes of depth <= max_depth, breadth first, positive child first.
std::vector<SBNode> nodes_to_depth(int max_depth);

}  // namespace tumblegeo
