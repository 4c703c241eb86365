// One PASS/FAIL line per acceptance criterion. `acceptance --only N` runs a
// single criterion; the exit status is nonzero when any executed one fails.

#include "tumblegeo/edge_markov.hpp"
#include "tumblegeo/exports.hpp"
#include "tumblegeo/face.hpp"
#include "tumblegeo/reference_table.hpp"
#include "tumblegeo/stern_brocot.hpp"
#include "tumblegeo/tetra.hpp"
#include "tumblegeo/tumble.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

using namespace tumblegeo;

namespace {

struct Outcome {
    bool ok = false;
    std::string detail;
};

struct Criterion {
    std::string id;
    std::string title;
    double seconds_limit;
    std::function<Outcome()> run;
};

CubeOrientation ru() { return compose(orientations::right, orientations::up); }

std::vector<std::pair<long long, long long>> coprime_pairs(long long max_sum) {
    std::vector<std::pair<long long, long long>> out;
    for (long long s = 2; s <= max_sum; ++s)
        for (long long a = 1; a < s; ++a)
            if (std::gcd(a, s - a) == 1) out.emplace_back(a, s - a);
    return out;
}

CubeOrientation word_orientation(const LatticePoint& p) {
    if (p == LatticePoint{0, 1}) return orientations::right.inverse();
    if (p == LatticePoint{1, 0}) return orientations::up.inverse();
    return orientation_of(tumble_sequence(p.a, p.b).str());
}

Outcome c1_child_table() {
    std::size_t bad = 0;
    for (const auto& row : kReferenceChildTable) {
        auto kids = child_edges(EdgeLabel::parse(std::string(row.edge)));
        bad += kids.negative.str() != row.negative_child;
        bad += kids.positive.str() != row.positive_child;
    }
    return {bad == 0, std::to_string(108 - bad) + "/108 child labels match over 54 rows"};
}

Outcome c2_saturation() {
    Saturation sat = saturate();
    std::set<std::string> expected{"0123", "0213", "1032", "1230", "2301", "2310", "3012", "3120", "3201"};
    std::set<std::string> got;
    for (const auto& o : sat.orientations) got.insert(o.str());
    // labels occurring at each depth, not only new ones
    const auto roots = root_edges();
    std::set<EdgeLabel> level(roots.begin(), roots.end()), upto7 = level, upto8;
    for (int depth = 2; depth <= 8; ++depth) {
        std::set<EdgeLabel> next;
        for (const auto& e : level) {
            auto kids = child_edges(e);
            next.insert(kids.negative);
            next.insert(kids.positive);
        }
        level = std::move(next);
        if (depth <= 7) upto7.insert(level.begin(), level.end());
    }
    upto8 = upto7;
    upto8.insert(level.begin(), level.end());
    bool ok = got == expected && sat.edges.size() == 54 && upto7.size() == 54 && upto8 == upto7;
    return {ok, "|S|=" + std::to_string(got.size()) + " |E|=" + std::to_string(sat.edges.size()) +
                    " labels by depth 7: " + std::to_string(upto7.size()) + ", by depth 8: " +
                    std::to_string(upto8.size()) + ", last new at depth " + std::to_string(sat.last_new_depth)};
}

Outcome c3_stationarity() {
    TransitionMatrix a(saturate().edges);
    auto is_one = [](const Rational& x) { return x == Rational(1); };
    auto rows = a.row_sums(), cols = a.column_sums();
    bool rows_ok = std::all_of(rows.begin(), rows.end(), is_one);
    bool cols_ok = std::all_of(cols.begin(), cols.end(), is_one);
    std::vector<Rational> pi(a.size(), Rational(Integer(1), Integer(a.size())));
    bool fixed = a.left_multiply(pi) == pi;
    return {rows_ok && cols_ok && fixed, std::string("rows ") + (rows_ok ? "ok" : "bad") + ", columns " +
                                             (cols_ok ? "ok" : "bad") + ", uniform(1/54) A " +
                                             (fixed ? "= " : "!= ") + "uniform(1/54)"};
}

const std::map<int, Rational> kLimits{{1, Rational(8, 54)}, {2, Rational(8, 54)}, {3, Rational(6, 54)},
                                      {4, Rational(8, 54)}, {5, Rational(6, 54)}, {6, Rational(6, 54)},
                                      {7, Rational(12, 54)}};

Outcome c4_proportions() {
    bool limits_ok = limiting_vertex_frequencies() == kLimits;
    int first_k = -1;
    for (int k = 1; k <= 500 && first_k < 0; ++k) {
        double tv = 0.0;
        for (const auto& [v, f] : vertex_frequencies_at_depth_float(k))
            tv += std::abs(f - static_cast<double>(kLimits.at(v)));
        if (tv / 2.0 < 1e-10) first_k = k;
    }
    DepthFrequencies exact = vertex_frequencies_at_depth(30);
    double worst = 0.0;
    for (const auto& [v, f] : exact.frequencies) worst = std::max(worst, std::abs(static_cast<double>(f - kLimits.at(v))));
    std::ostringstream os;
    os << "limits " << (limits_ok ? "match" : "differ") << "; float TV < 1e-10 first at k=" << first_k
       << "; exact depth-30 max |f - limit| = " << std::scientific << std::setprecision(3) << worst
       << " (needs <= 1e-6)";
    return {limits_ok && first_k > 0 && worst <= 1e-6, os.str()};
}

Outcome c5_depth_counts() {
    bool sums_ok = true;
    for (int k = 1; k <= 20; ++k) {
        Integer total = 0;
        for (const auto& [v, c] : vertex_frequencies_at_depth(k).counts) total += c;
        sums_ok = sums_ok && total == (Integer(1) << k);
    }
    auto first = vertex_frequencies_at_depth(1).counts;
    bool first_ok = true;
    for (const auto& [v, c] : first) first_ok = first_ok && c == (v == 7 ? 2 : 0);
    return {sums_ok && first_ok, std::string("sum = 2^k for k<=20: ") + (sums_ok ? "yes" : "no") +
                                     "; k=1 counts {7:2}: " + (first_ok ? "yes" : "no")};
}

Outcome c6_no_loops() {
    auto tetra = geodesics_to_vertex(RationalPoint{}, TetraVertexLabel(0, 0), 500);
    Saturation sat = saturate();
    std::size_t forbidden = 0;
    for (const char* o : {"1320", "2130", "3210"})
        forbidden += std::count(sat.orientations.begin(), sat.orientations.end(), CubeOrientation::parse(o));
    SurveyResult s = patch_survey(1000, 8);
    bool ok = tetra.empty() && forbidden == 0 && s.by_vertex.at(0).count == 0;
    return {ok, std::to_string(tetra.size()) + " tetrahedron loops to bound 500; " + std::to_string(forbidden) +
                    " of 1320/2130/3210 in S; survey(1000) vertex-0 count " + s.by_vertex.at(0).count.str()};
}

Outcome c7_oracle_equivalence() {
    std::size_t bad = 0, seen = 0;
    for (auto [a, b] : coprime_pairs(100)) {
        ++seen;
        CubeOrientation fast = locate(a, b).orientation;
        TumbleSequence t = tumble_sequence(a, b);
        CubeOrientation by_word = orientation_of(t.str());
        CubeOrientation by_roll = CubeState::after(t.str()).diagonal_reading();
        int corner = tumble_path(t).label_at(a, b);
        if (fast != by_word || by_word != by_roll || endpoint_vertex(fast) != corner) ++bad;
    }
    return {bad == 0, std::to_string(seen - bad) + "/" + std::to_string(seen) + " points agree on all four"};
}

Outcome c8_recurrences() {
    std::size_t bad_words = 0, bad_sigma = 0, seen = 0;
    for (const auto& n : nodes_to_depth(10)) {
        ++seen;
        const auto& tp = n.pos_parent;
        const auto& tm = n.neg_parent;
        TumbleSequence t = tumble_sequence(n.point.a, n.point.b);
        bool formal_pos = tp == LatticePoint{0, 1}, formal_neg = tm == LatticePoint{1, 0};
        if (!formal_pos && !formal_neg) {
            TumbleSequence wp = tumble_sequence(tp.a, tp.b), wm = tumble_sequence(tm.a, tm.b);
            if (t != wp + TumbleSequence("ru") + wm || t != wm + TumbleSequence("ur") + wp) ++bad_words;
        } else if (formal_pos && !formal_neg) {
            // (1, k+1): u^k
            if (t != TumbleSequence(std::string(t.size(), 'u')) || n.point.a != 1) ++bad_words;
        } else if (formal_neg && !formal_pos) {
            if (t != TumbleSequence(std::string(t.size(), 'r')) || n.point.b != 1) ++bad_words;
        }
        CubeOrientation expected = compose(compose(word_orientation(tp), ru()), word_orientation(tm));
        if (orientation_of(t.str()) != expected || orientation_of_node(n) != expected) ++bad_sigma;
    }
    return {bad_words == 0 && bad_sigma == 0, std::to_string(seen) + " nodes; word failures " +
                                                  std::to_string(bad_words) + ", sigma failures " +
                                                  std::to_string(bad_sigma)};
}

Outcome c9_unimodular() {
    std::size_t bad = 0, seen = 0;
    for (const auto& n : nodes_to_depth(12)) {
        ++seen;
        if (abs(det(n.point, n.pos_parent)) != 1 || abs(det(n.point, n.neg_parent)) != 1) ++bad;
    }
    return {bad == 0, std::to_string(seen - bad) + "/" + std::to_string(seen) + " nodes unimodular"};
}

struct BranchSurvey {
    std::map<std::size_t, std::size_t> periods;
    std::string first_non_divisor;
};

BranchSurvey survey_branches() {
    BranchSurvey out;
    for (const auto& n : nodes_to_depth(8)) {
        std::vector<Sign> signs;
        if (n.is_root()) signs = {Sign::positive, Sign::negative};
        else signs = {*branch_sign(n)};
        for (Sign s : signs) {
            std::size_t p = minimal_period(branch_orientations(n, s, 24));
            ++out.periods[p];
            if (4 % p != 0 && out.first_non_divisor.empty())
                out.first_non_divisor = "b" + std::string(1, sign_char(s)) + n.point.str() + " has period " +
                                        std::to_string(p);
        }
    }
    return out;
}

std::string period_histogram(const BranchSurvey& b) {
    std::string s;
    for (const auto& [p, c] : b.periods) s += (s.empty() ? "" : ", ") + ("period " + std::to_string(p)) + ": " + std::to_string(c);
    return s;
}

Outcome c10_periods_divide_4() {
    BranchSurvey b = survey_branches();
    bool ok = b.first_non_divisor.empty();
    return {ok, period_histogram(b) + (ok ? "" : "; e.g. " + b.first_non_divisor)};
}

Outcome c10b_periods_at_most_4() {
    BranchSurvey b = survey_branches();
    bool ok = !b.periods.empty() && b.periods.rbegin()->first <= 4;
    return {ok, period_histogram(b)};
}

Outcome c11_palindromes() {
    std::size_t bad_words = 0, bad_paths = 0;
    for (auto [a, b] : coprime_pairs(200)) {
        TumbleSequence t = tumble_sequence(a, b);
        if (!is_palindrome(t) || t.count('r') != std::size_t(a - 1) || t.count('u') != std::size_t(b - 1)) ++bad_words;
        if (a + b <= 60 && !sum_to_seven_holds(tumble_path(t))) ++bad_paths;
    }
    return {bad_words == 0 && bad_paths == 0,
            "word failures " + std::to_string(bad_words) + ", sum-to-7 failures " + std::to_string(bad_paths)};
}

Outcome c12_worked_example() {
    RegionDecomposition d = decompose(5, 3);
    auto pts = [](std::initializer_list<std::pair<int, int>> xs) {
        std::vector<LatticePoint> v;
        for (auto [x, y] : xs) v.push_back({x, y});
        return v;
    };
    std::set<std::string> got_p, want_p{"(0,1)", "(1,1)", "(3,2)", "(2,1)", "(1,0)"};
    for (const auto& p : d.lattice_points) got_p.insert(p.str());
    bool lines_ok = d.lines.size() == 4 && d.lines[1].points == pts({{1, 1}, {3, 2}}) &&
                    d.lines[2].points == pts({{2, 1}}) && d.lines[0].points == pts({{0, 1}}) &&
                    d.lines[3].points == pts({{1, 0}});
    bool words_ok = d.regions.size() == 3 && d.regions[0].str() == "urrurr" && d.regions[1].str() == "rurrur" &&
                    d.regions[2].str() == "rrurur";
    bool ok = got_p == want_p && d.lattice_points.size() == 5 && lines_ok && words_ok;
    std::string words;
    for (const auto& w : d.regions) words += (words.empty() ? "" : "/") + w.str();
    return {ok, "P(5,3) " + std::string(got_p == want_p ? "matches" : "differs") + ", lines " +
                    (lines_ok ? "match" : "differ") + ", words " + words};
}

Outcome c13_face_oracle() {
    std::mt19937_64 rng(20261016);
    std::uniform_int_distribution<int> frac(1, 999);
    std::size_t checked = 0, bad = 0, targets = 0;
    for (long long n = 1; n <= 13; ++n) {
        for (long long m = 1; n + m <= 14; ++m) {
            ++targets;
            RegionDecomposition d = decompose(n, m);
            const LatticePoint q = d.target;
            for (std::size_t i = 0; i < d.regions.size(); ++i) {
                const LatticePoint &lo = d.lines[i].direction, &hi = d.lines[i + 1].direction;
                for (int k = 0; k < 100; ++k) {
                    // a direction strictly between the two bounding lines, then a point on that ray
                    Rational alpha(frac(rng), 1000);
                    Rational vx = alpha * Rational(lo.a) + (Rational(1) - alpha) * Rational(hi.a);
                    Rational vy = alpha * Rational(lo.b) + (Rational(1) - alpha) * Rational(hi.b);
                    Rational lam_lo = std::max((Rational(q.a) - Rational(1)) / vx, (Rational(q.b) - Rational(1)) / vy);
                    Rational lam_hi = std::min(Rational(q.a) / vx, Rational(q.b) / vy);
                    Rational lam = lam_lo + Rational(frac(rng), 1000) * (lam_hi - lam_lo);
                    RationalPoint p(Rational(q.a) - lam * vx, Rational(q.b) - lam * vy);
                    ++checked;
                    try {
                        if (region_of(p, d) != i || tumble_sequence_of_segment(p, q) != d.regions[i]) ++bad;
                    } catch (const std::exception&) {
                        ++bad;
                    }
                }
            }
        }
    }
    return {bad == 0, std::to_string(targets) + " targets, " + std::to_string(checked - bad) + "/" +
                          std::to_string(checked) + " sampled points agree with the segment oracle"};
}

Outcome c14_survey() {
    SurveyResult s = patch_survey(1000, 8);
    double dev = max_abs_deviation(s);
    TransitionMatrix a(saturate().edges);
    auto curve = convergence_curve(a, 200);
    std::ofstream("convergence.csv") << convergence_csv(curve);
    std::ofstream("survey_1000.csv") << survey_csv(s);
    std::ostringstream os;
    os << s.total.str() << " points, max |f - limit| = " << std::setprecision(4) << dev
       << " (tolerance 0.01); convergence curve to k=200 written, final TV " << std::scientific << curve.back();
    return {dev < 0.01 && curve.back() < 1e-10, os.str()};
}

Outcome c15_spectral() {
    TransitionMatrix a(saturate().edges);
    std::size_t rank = exact_rank(minus_identity(a));
    auto curve = convergence_curve(a, 500);
    int settled = -1;
    for (std::size_t k = 0; k < curve.size() && settled < 0; ++k)
        if (curve[k] < 1e-10) settled = static_cast<int>(k);
    std::ostringstream os;
    os << "rank(A - I) = " << rank << "; all 54 basis starts within 1e-10 of uniform from k=" << settled
       << "; second eigenvalue modulus ~ " << std::setprecision(6) << stationary_analysis(a).second_eigenvalue_modulus;
    return {rank == 53 && settled >= 0, os.str()};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria"};
    std::string only;
    app.add_option("--only", only, "Run a single criterion by id");
    CLI11_PARSE(app, argc, argv);

    const std::vector<Criterion> criteria{
        {"1", "child table reproduces all 54 reference rows", 1, c1_child_table},
        {"2", "saturation: |S| = 9, |E| = 54, stable by depth 7", 1, c2_saturation},
        {"3", "exact stochasticity and uniform stationarity", 1, c3_stationarity},
        {"4", "vertex proportions converge to the limits", 5, c4_proportions},
        {"5", "depth counts sum to 2^k", 1, c5_depth_counts},
        {"6", "no geodesic loops on tetrahedron and cube", 10, c6_no_loops},
        {"7", "fast orientation equals word, roll and path oracles", 30, c7_oracle_equivalence},
        {"8", "word and orientation recurrences to depth 10", 10, c8_recurrences},
        {"9", "unimodularity to depth 12", 5, c9_unimodular},
        {"10", "branch orientation periods divide 4", 5, c10_periods_divide_4},
        {"10b", "branch orientation periods are at most 4", 5, c10b_periods_at_most_4},
        {"11", "palindromes, letter counts and sum-to-7", 10, c11_palindromes},
        {"12", "decomposition of (5,3)", 1, c12_worked_example},
        {"13", "face regions agree with the segment oracle", 60, c13_face_oracle},
        {"14", "patch survey near the limits", 60, c14_survey},
        {"15", "rank of A - I and power iteration", 30, c15_spectral},
    };

    int failures = 0, ran = 0;
    for (const auto& c : criteria) {
        if (!only.empty() && c.id != only) continue;
        ++ran;
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_time = secs < c.seconds_limit;
        bool pass = o.ok && in_time;
        failures += !pass;
        std::cout << (pass ? "PASS " : "FAIL ") << std::setw(3) << c.id << "  " << c.title << " | " << o.detail
                  << " | " << std::fixed << std::setprecision(2) << secs << " s (limit " << c.seconds_limit << " s"
                  << (in_time ? "" : ", exceeded") << ")" << std::defaultfloat << '\n';
    }
    if (ran == 0) {
        std::cerr << "no criterion with id " << only << '\n';
        return 2;
    }
    return failures == 0 ? 0 : 1;
}
