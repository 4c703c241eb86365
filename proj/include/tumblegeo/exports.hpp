#pragma once

// Text exports: JSON, CSV, DOT and SVG. Every ordering is fixed so equal
// inputs give byte-identical output.

#include "tumblegeo/edge_markov.hpp"
#include "tumblegeo/face.hpp"
#include "tumblegeo/stern_brocot.hpp"
#include "tumblegeo/tetra.hpp"

#include <string>
#include <vector>

namespace tumblegeo {

inline constexpr int kDefaultTreeDepthCap = 12;

/// Thrown when a tree export would exceed the depth cap.
class DepthCapExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

struct TreeRow {
    SBNode node;
    TumbleSequence word;
    CubeOrientation orientation;
    int vertex = 0;
};

/// Nodes to the given depth, breadth first, positive child first.
std::vector<TreeRow> tree_rows(int depth, int cap = kDefaultTreeDepthCap);

std::string tree_json(int depth, int cap = kDefaultTreeDepthCap);
std::string tree_dot(int depth, int cap = kDefaultTreeDepthCap);
std::string tree_text(int depth, int cap = kDefaultTreeDepthCap);

std::string tetra_json(const RationalPoint& p, const TetraVertexLabel& label, long long bound,
                       const std::vector<TetraGeodesic>& found);
std::string tetra_text(const std::vector<TetraGeodesic>& found);

/// edge, negative_child, positive_child
std::string child_table_csv(const Saturation& sat);
/// Edge list and the dense exact matrix with entries as "p/q" strings.
std::string matrix_json(const TransitionMatrix& a);
std::string matrix_csv(const TransitionMatrix& a);

/// vertex, count, frequency_num, frequency_den, limit_num, limit_den, abs_dev
std::string survey_csv(const SurveyResult& s);
std::string survey_json(const SurveyResult& s);
std::string survey_text(const SurveyResult& s);

/// k, total_variation
std::string convergence_csv(const std::vector<double>& curve);

std::string depth_frequencies_json(const DepthFrequencies& f);

std::string path_json(const Integer& a, const Integer& b);
std::string path_svg(const Integer& a, const Integer& b);

std::string face_json(const RegionDecomposition& d);
std::string face_svg(const RegionDecomposition& d);
std::string face_text(const RegionDecomposition& d);

}  // namespace tumblegeo
