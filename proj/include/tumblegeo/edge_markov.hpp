#pragma once

// The edge-label transition system on the Stern-Brocot tree.
//
// Each tree edge is labelled (sigma(parent), sigma(child), sign). A label
// determines the labels of both child edges, so the labels form a finite
// state system. Its closure from the two root edges has 54 states over 9
// orientations; the uniform random walk on it is the 54x54 matrix A with
// A[e][f] = 1/2 when f is a child of e.

#include "tumblegeo/cube_group.hpp"
#include "tumblegeo/rational.hpp"
#include "tumblegeo/stern_brocot.hpp"

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace tumblegeo {

struct EdgeLabel {
    CubeOrientation parent;
    CubeOrientation child;
    Sign sign = Sign::negative;

    /// "(0123,0213,-)"
    std::string str() const;
    static EdgeLabel parse(const std::string& text);

    friend bool operator==(const EdgeLabel&, const EdgeLabel&) = default;
    /// Canonical order: parent, then child, then sign with - before +.
    friend auto operator<=>(const EdgeLabel&, const EdgeLabel&) = default;
};

/// The group product used by the child rule. The default is the module-wide
/// right multiplication; the alternative exists for negative-control tests.
using Product = std::function<CubeOrientation(const CubeOrientation&, const CubeOrientation&)>;

CubeOrientation right_product(const CubeOrientation& s, const CubeOrientation& t);
CubeOrientation left_product(const CubeOrientation& s, const CubeOrientation& t);

struct ChildEdges {
    EdgeLabel negative;
    EdgeLabel positive;
};

/// For an edge (sigma(s), sigma(t), sign): the child continuing the branch is
/// sigma(t) sigma(s)^-1 sigma(t); the child turning off it is
/// sigma(t) ru sigma(s) after a positive edge, sigma(t) ur sigma(s) after a
/// negative one.
ChildEdges child_edges(const EdgeLabel& e, const Product& product = right_product);

/// The two edges leaving the root: (sigma(g), sigma(g+), +), (sigma(g), sigma(g-), -).
std::array<EdgeLabel, 2> root_edges();

struct Saturation {
    std::vector<CubeOrientation> orientations;  // sorted
    std::vector<EdgeLabel> edges;               // canonical order
    /// Tree depth (of the child node) at which each edge label first occurs.
    std::map<EdgeLabel, int> first_depth;
    int last_new_depth = 0;
};

/// Breadth-first closure of the root edges under child_edges. Throws
/// std::logic_error past 24 * 24 * 2 labels.
Saturation saturate(const Product& product = right_product);

/// Dense 54x54 (in general |E| x |E|) matrix of exact rationals.
class TransitionMatrix {
    std::vector<EdgeLabel> edges_;
    std::map<EdgeLabel, std::size_t> index_;
    std::vector<Rational> entries_;

public:
    TransitionMatrix() = default;
    /// Builds A over the edge list (taken in the given order).
    TransitionMatrix(std::vector<EdgeLabel> edges, const Product& product = right_product);

    std::size_t size() const { return edges_.size(); }
    const std::vector<EdgeLabel>& edges() const { return edges_; }
    std::size_t index_of(const EdgeLabel& e) const;
    const Rational& at(std::size_t row, std::size_t col) const { return entries_[row * size() + col]; }

    std::vector<Rational> row_sums() const;
    std::vector<Rational> column_sums() const;
    /// v A for a row vector v.
    std::vector<Rational> left_multiply(const std::vector<Rational>& v) const;
    std::vector<double> left_multiply(const std::vector<double>& v) const;
    std::vector<std::vector<double>> to_double() const;
};

/// Rank over the rationals by exact Gaussian elimination.
std::size_t exact_rank(std::vector<std::vector<Rational>> m);

/// A - I as an exact matrix.
std::vector<std::vector<Rational>> minus_identity(const TransitionMatrix& a);

struct StationaryReport {
    bool rows_stochastic = false;
    bool columns_stochastic = false;
    /// The unique probability vector with pi A = pi, solved exactly.
    std::vector<Rational> stationary;
    bool stationary_is_uniform = false;
    std::size_t rank_of_a_minus_identity = 0;
    /// Modulus of the dominant eigenvalue on the complement of the stationary
    /// direction, estimated by power iteration.
    double second_eigenvalue_modulus = 0.0;
};

/// Throws std::domain_error if any column sum differs from 1.
StationaryReport stationary_analysis(const TransitionMatrix& a);

/// Total variation distance between e_i A^k and the uniform distribution,
/// maximised over the basis starts i, for k = 0..max_k.
std::vector<double> convergence_curve(const TransitionMatrix& a, int max_k);

/// Limiting proportion per vertex: the number of edge labels whose child
/// orientation ends at that vertex, over |E|.
std::map<int, Rational> limiting_vertex_frequencies();

struct DepthFrequencies {
    int depth = 0;
    std::map<int, Integer> counts;        // (2b)(2A)^(k-1) s_v, vertices 1..7
    std::map<int, Rational> frequencies;  // b A^(k-1) s_v
};

/// Exact counts and frequencies of endpoint vertices over the 2^k nodes at
/// depth k >= 1. Throws std::domain_error for k < 1.
DepthFrequencies vertex_frequencies_at_depth(int k);

/// The same in floating point, for large k.
std::map<int, double> vertex_frequencies_at_depth_float(int k);

struct VertexTally {
    Integer count = 0;
    Rational frequency;
};

struct SurveyResult {
    long long n_max = 0;
    Integer total = 0;
    std::map<int, VertexTally> by_vertex;  // every vertex 0..7 present
    double seconds = 0.0;
};

/// Endpoint vertex of the geodesic from the origin to coprime (a, b), via the
/// orientation recurrence.
int endpoint_vertex_of_point(const Integer& a, const Integer& b);

/// Endpoint vertex tally over every coprime (a, b) in [1, n_max]^2, evaluated
/// with the O(log) descent. Rows of the grid are split statically across the
/// workers and merged in order, so the result does not depend on the number
/// of workers. Throws std::domain_error for n_max < 2 or workers < 1.
SurveyResult patch_survey(long long n_max, unsigned workers);

/// Largest |frequency - limit| over vertices 1..7.
double max_abs_deviation(const SurveyResult& survey);

}  // namespace tumblegeo
