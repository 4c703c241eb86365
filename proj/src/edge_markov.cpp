#include "tumblegeo/edge_markov.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

namespace tumblegeo {

std::string EdgeLabel::str() const {
    return "(" + parent.str() + "," + child.str() + "," + sign_char(sign) + ")";
}

EdgeLabel EdgeLabel::parse(const std::string& text) {
    // (pppp,cccc,s)
    if (text.size() != 13 || text.front() != '(' || text.back() != ')' || text[5] != ',' || text[10] != ',' ||
        (text[11] != '+' && text[11] != '-'))
        throw std::invalid_argument("malformed edge label '" + text + "'");
    return {CubeOrientation::parse(text.substr(1, 4)), CubeOrientation::parse(text.substr(6, 4)),
            text[11] == '+' ? Sign::positive : Sign::negative};
}

CubeOrientation right_product(const CubeOrientation& s, const CubeOrientation& t) { return compose(s, t); }

CubeOrientation left_product(const CubeOrientation& s, const CubeOrientation& t) { return compose(t, s); }

ChildEdges child_edges(const EdgeLabel& e, const Product& product) {
    const CubeOrientation& s = e.parent;
    const CubeOrientation& t = e.child;
    CubeOrientation along = product(product(t, s.inverse()), t);
    static const CubeOrientation ru = compose(orientations::right, orientations::up);
    static const CubeOrientation ur = compose(orientations::up, orientations::right);
    const CubeOrientation& turn_word = e.sign == Sign::positive ? ru : ur;
    CubeOrientation turn = product(product(t, turn_word), s);
    if (e.sign == Sign::positive) return {{t, turn, Sign::negative}, {t, along, Sign::positive}};
    return {{t, along, Sign::negative}, {t, turn, Sign::positive}};
}

std::array<EdgeLabel, 2> root_edges() {
    SBNode root = sb_root();
    auto [pos, neg] = children(root);
    CubeOrientation g = orientation_of_node(root);
    return {EdgeLabel{g, orientation_of_node(pos), Sign::positive}, EdgeLabel{g, orientation_of_node(neg), Sign::negative}};
}

Saturation saturate(const Product& product) {
    constexpr std::size_t kSafetyBound = 24 * 24 * 2;
    Saturation out;
    std::vector<EdgeLabel> frontier;
    for (const auto& e : root_edges()) {
        out.first_depth.emplace(e, 1);
        frontier.push_back(e);
    }
    int depth = 1;
    out.last_new_depth = 1;
    while (!frontier.empty()) {
        ++depth;
        std::vector<EdgeLabel> next;
        for (const auto& e : frontier) {
            auto kids = child_edges(e, product);
            for (const auto& c : {kids.negative, kids.positive}) {
                if (out.first_depth.emplace(c, depth).second) {
                    next.push_back(c);
                    out.last_new_depth = depth;
                }
            }
        }
        if (out.first_depth.size() > kSafetyBound)
            throw std::logic_error("edge-label closure exceeded 24*24*2 labels");
        frontier = std::move(next);
    }
    std::set<CubeOrientation> seen;
    for (const auto& [e, _] : out.first_depth) {
        out.edges.push_back(e);
        seen.insert(e.parent);
        seen.insert(e.child);
    }
    out.orientations.assign(seen.begin(), seen.end());
    return out;
}

TransitionMatrix::TransitionMatrix(std::vector<EdgeLabel> edges, const Product& product)
    : edges_(std::move(edges)), entries_(edges_.size() * edges_.size()) {
    for (std::size_t i = 0; i < edges_.size(); ++i) index_.emplace(edges_[i], i);
    const Rational half(1, 2);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        auto kids = child_edges(edges_[i], product);
        for (const auto& c : {kids.negative, kids.positive}) {
            auto it = index_.find(c);
            if (it == index_.end()) throw std::logic_error("child edge " + c.str() + " outside the state set");
            entries_[i * size() + it->second] += half;
        }
    }
}

std::size_t TransitionMatrix::index_of(const EdgeLabel& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) throw std::out_of_range("unknown edge label " + e.str());
    return it->second;
}

std::vector<Rational> TransitionMatrix::row_sums() const {
    std::vector<Rational> sums(size());
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j) sums[i] += at(i, j);
    return sums;
}

std::vector<Rational> TransitionMatrix::column_sums() const {
    std::vector<Rational> sums(size());
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j) sums[j] += at(i, j);
    return sums;
}

std::vector<Rational> TransitionMatrix::left_multiply(const std::vector<Rational>& v) const {
    std::vector<Rational> out(size());
    for (std::size_t i = 0; i < size(); ++i) {
        if (v[i].is_zero()) continue;
        for (std::size_t j = 0; j < size(); ++j)
            if (!at(i, j).is_zero()) out[j] += v[i] * at(i, j);
    }
    return out;
}

std::vector<double> TransitionMatrix::left_multiply(const std::vector<double>& v) const {
    std::vector<double> out(size(), 0.0);
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j)
            if (!at(i, j).is_zero()) out[j] += v[i] * static_cast<double>(at(i, j));
    return out;
}

std::vector<std::vector<double>> TransitionMatrix::to_double() const {
    std::vector<std::vector<double>> m(size(), std::vector<double>(size()));
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j) m[i][j] = static_cast<double>(at(i, j));
    return m;
}

namespace {

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(std::vector<std::vector<Rational>>& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size(), cols = m[0].size(), r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Rational inv = Rational(1) / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (!m[r][j].is_zero()) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t exact_rank(std::vector<std::vector<Rational>> m) { return row_reduce(m).size(); }

std::vector<std::vector<Rational>> minus_identity(const TransitionMatrix& a) {
    std::vector<std::vector<Rational>> m(a.size(), std::vector<Rational>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) m[i][j] = a.at(i, j) - Rational(i == j ? 1 : 0);
    return m;
}

StationaryReport stationary_analysis(const TransitionMatrix& a) {
    StationaryReport rep;
    const std::size_t n = a.size();
    auto is_one = [](const Rational& x) { return x == Rational(1); };
    auto cols = a.column_sums();
    rep.columns_stochastic = std::all_of(cols.begin(), cols.end(), is_one);
    if (!rep.columns_stochastic) throw std::domain_error("transition matrix is not column stochastic");
    auto rows = a.row_sums();
    rep.rows_stochastic = std::all_of(rows.begin(), rows.end(), is_one);

    auto ami = minus_identity(a);
    rep.rank_of_a_minus_identity = exact_rank(ami);

    // pi (A - I) = 0 and sum(pi) = 1, as the transposed system with RHS
    std::vector<std::vector<Rational>> sys(n + 1, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) sys[j][i] = ami[i][j];
    for (std::size_t i = 0; i < n; ++i) sys[n][i] = Rational(1);
    sys[n][n] = Rational(1);
    auto pivots = row_reduce(sys);
    if (pivots.size() == n && pivots.back() == n - 1) {
        rep.stationary.resize(n);
        for (std::size_t r = 0; r < n; ++r) rep.stationary[pivots[r]] = sys[r][n];
    }
    const Rational uniform(Integer(1), Integer(n));
    rep.stationary_is_uniform =
        !rep.stationary.empty() &&
        std::all_of(rep.stationary.begin(), rep.stationary.end(), [&](const Rational& x) { return x == uniform; });

    // power iteration on zero-sum row vectors, which A maps to zero-sum vectors
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = std::sin(1.0 + 3.7 * static_cast<double>(i));
    auto recentre_and_normalise = [&](std::vector<double>& v) {
        double mean = 0.0;
        for (double t : v) mean += t;
        mean /= static_cast<double>(n);
        double norm = 0.0;
        for (double& t : v) {
            t -= mean;
            norm += t * t;
        }
        norm = std::sqrt(norm);
        for (double& t : v) t /= norm;
        return norm;
    };
    recentre_and_normalise(x);
    constexpr int kWarmup = 100, kMeasure = 400;
    double log_growth = 0.0;
    for (int k = 0; k < kWarmup + kMeasure; ++k) {
        x = a.left_multiply(x);
        double g = recentre_and_normalise(x);
        if (k >= kWarmup) log_growth += std::log(g);
    }
    rep.second_eigenvalue_modulus = std::exp(log_growth / kMeasure);
    return rep;
}

std::vector<double> convergence_curve(const TransitionMatrix& a, int max_k) {
    const std::size_t n = a.size();
    const double uniform = 1.0 / static_cast<double>(n);
    std::vector<std::vector<double>> states(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) states[i][i] = 1.0;
    std::vector<double> curve;
    for (int k = 0; k <= max_k; ++k) {
        double worst = 0.0;
        for (auto& s : states) {
            double tv = 0.0;
            for (double p : s) tv += std::abs(p - uniform);
            worst = std::max(worst, tv / 2.0);
        }
        curve.push_back(worst);
        if (k < max_k)
            for (auto& s : states) s = a.left_multiply(s);
    }
    return curve;
}

namespace {

const Saturation& canonical_saturation() {
    static const Saturation sat = saturate();
    return sat;
}

const TransitionMatrix& canonical_matrix() {
    static const TransitionMatrix a(canonical_saturation().edges);
    return a;
}

}  // namespace

std::map<int, Rational> limiting_vertex_frequencies() {
    const auto& edges = canonical_saturation().edges;
    std::map<int, Integer> counts;
    for (int v = 1; v <= 7; ++v) counts[v] = 0;
    for (const auto& e : edges) ++counts[endpoint_vertex(e.child)];
    std::map<int, Rational> out;
    for (const auto& [v, c] : counts) out[v] = Rational(c, Integer(edges.size()));
    return out;
}

DepthFrequencies vertex_frequencies_at_depth(int k) {
    if (k < 1) throw std::domain_error("depth must be at least 1");
    const TransitionMatrix& a = canonical_matrix();
    const std::size_t n = a.size();
    // counts over edges: (2b)(2A)^(k-1); 2A is the 0/1 child relation
    std::vector<Integer> counts(n, 0);
    for (const auto& e : root_edges()) counts[a.index_of(e)] = 1;
    for (int step = 1; step < k; ++step) {
        std::vector<Integer> next(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            if (counts[i].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!a.at(i, j).is_zero()) next[j] += counts[i] * (a.at(i, j) * Rational(2)).numerator();
        }
        counts = std::move(next);
    }
    DepthFrequencies out;
    out.depth = k;
    for (int v = 1; v <= 7; ++v) out.counts[v] = 0;
    for (std::size_t i = 0; i < n; ++i) out.counts[endpoint_vertex(a.edges()[i].child)] += counts[i];
    Integer nodes = Integer(1) << k;
    for (const auto& [v, c] : out.counts) out.frequencies[v] = Rational(c, nodes);
    return out;
}

std::map<int, double> vertex_frequencies_at_depth_float(int k) {
    if (k < 1) throw std::domain_error("depth must be at least 1");
    const TransitionMatrix& a = canonical_matrix();
    std::vector<double> x(a.size(), 0.0);
    for (const auto& e : root_edges()) x[a.index_of(e)] = 0.5;
    for (int step = 1; step < k; ++step) x = a.left_multiply(x);
    std::map<int, double> out;
    for (int v = 1; v <= 7; ++v) out[v] = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) out[endpoint_vertex(a.edges()[i].child)] += x[i];
    return out;
}

int endpoint_vertex_of_point(const Integer& a, const Integer& b) { return endpoint_vertex(locate(a, b).orientation); }

SurveyResult patch_survey(long long n_max, unsigned workers) {
    if (n_max < 2) throw std::domain_error("n_max must be at least 2");
    if (workers < 1) throw std::domain_error("need at least one worker");
    auto start = std::chrono::steady_clock::now();

    using Tally = std::array<long long, 8>;
    std::vector<Tally> tallies(workers, Tally{});
    auto work = [n_max](long long row_begin, long long row_end, Tally& tally) {
        for (long long a = row_begin; a < row_end; ++a)
            for (long long b = 1; b <= n_max; ++b)
                if (std::gcd(a, b) == 1) ++tally[endpoint_vertex_of_point(a, b)];
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            long long begin = 1 + n_max * w / workers;
            long long end = 1 + n_max * (w + 1) / workers;
            pool.emplace_back(work, begin, end, std::ref(tallies[w]));
        }
    }

    SurveyResult out;
    out.n_max = n_max;
    Tally merged{};
    for (const auto& t : tallies)
        for (int v = 0; v < 8; ++v) merged[v] += t[v];
    for (int v = 0; v < 8; ++v) out.total += merged[v];
    for (int v = 0; v < 8; ++v) out.by_vertex[v] = {Integer(merged[v]), Rational(Integer(merged[v]), out.total)};
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

double max_abs_deviation(const SurveyResult& survey) {
    double worst = 0.0;
    for (const auto& [v, limit] : limiting_vertex_frequencies()) {
        double f = static_cast<double>(survey.by_vertex.at(v).frequency);
        worst = std::max(worst, std::abs(f - static_cast<double>(limit)));
    }
    return worst;
}

}  // namespace tumblegeo
