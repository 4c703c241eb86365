#include "tumblegeo/verify.hpp"

#include "tumblegeo/reference_table.hpp"
#include "tumblegeo/tetra.hpp"
#include "tumblegeo/tumble.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <numeric>
#include <set>
#include <sstream>

namespace tumblegeo {

namespace {

Check run(const std::string& name, const std::function<std::string(bool&)>& body) {
    Check c{name, false, ""};
    try {
        c.detail = body(c.passed);
    } catch (const std::exception& e) {
        c.passed = false;
        c.detail = std::string("threw: ") + e.what();
    }
    return c;
}

const std::map<int, Rational>& expected_limits() {
    static const std::map<int, Rational> limits{{1, Rational(8, 54)}, {2, Rational(8, 54)},  {3, Rational(6, 54)},
                                                {4, Rational(8, 54)}, {5, Rational(6, 54)},  {6, Rational(6, 54)},
                                                {7, Rational(12, 54)}};
    return limits;
}

}  // namespace

std::vector<Check> run_verification(const Product& product) {
    std::vector<Check> out;

    out.push_back(run("child_table", [&](bool& ok) {
        std::size_t mismatches = 0;
        for (const auto& row : kReferenceChildTable) {
            auto kids = child_edges(EdgeLabel::parse(std::string(row.edge)), product);
            if (kids.negative.str() != row.negative_child) ++mismatches;
            if (kids.positive.str() != row.positive_child) ++mismatches;
        }
        Saturation sat = saturate(product);
        bool same_rows = sat.edges.size() == kReferenceChildTable.size();
        for (std::size_t i = 0; same_rows && i < sat.edges.size(); ++i)
            same_rows = sat.edges[i].str() == kReferenceChildTable[i].edge;
        ok = mismatches == 0 && same_rows;
        return std::to_string(mismatches) + " of 108 child labels differ; edge set " +
               (same_rows ? "matches" : "differs");
    }));

    out.push_back(run("state_counts", [&](bool& ok) {
        Saturation sat = saturate(product);
        std::set<std::string> expected{"0123", "0213", "1032", "1230", "2301", "2310", "3012", "3120", "3201"};
        std::set<std::string> got;
        for (const auto& o : sat.orientations) got.insert(o.str());
        ok = got == expected && sat.edges.size() == 54;
        return "|S| = " + std::to_string(got.size()) + ", |E| = " + std::to_string(sat.edges.size()) +
               ", last new label at depth " + std::to_string(sat.last_new_depth);
    }));

    out.push_back(run("stochastic", [&](bool& ok) {
        TransitionMatrix a(saturate(product).edges, product);
        StationaryReport rep = stationary_analysis(a);
        ok = rep.rows_stochastic && rep.columns_stochastic;
        return std::string("rows ") + (rep.rows_stochastic ? "sum to 1" : "do not sum to 1") + ", columns " +
               (rep.columns_stochastic ? "sum to 1" : "do not sum to 1");
    }));

    out.push_back(run("uniform_stationary", [&](bool& ok) {
        TransitionMatrix a(saturate(product).edges, product);
        StationaryReport rep = stationary_analysis(a);
        ok = rep.stationary_is_uniform && rep.rank_of_a_minus_identity + 1 == a.size();
        return "rank(A - I) = " + std::to_string(rep.rank_of_a_minus_identity) + " of " + std::to_string(a.size());
    }));

    out.push_back(run("vertex_proportions", [&](bool& ok) {
        auto limits = limiting_vertex_frequencies();
        auto freq = vertex_frequencies_at_depth_float(500);
        double tv = 0.0;
        for (const auto& [v, f] : freq) tv += std::abs(f - static_cast<double>(expected_limits().at(v)));
        tv /= 2.0;
        ok = limits == expected_limits() && tv < 1e-10;
        std::ostringstream os;
        os << "total variation at depth 500: " << std::scientific << std::setprecision(2) << tv;
        return os.str();
    }));

    out.push_back(run("tetra_no_loop", [&](bool& ok) {
        auto loops = geodesics_to_vertex(RationalPoint{}, TetraVertexLabel(0, 0), 500);
        ok = loops.empty();
        return std::to_string(loops.size()) + " geodesics from a vertex to a (0,0) vertex up to bound 500";
    }));

    out.push_back(run("cube_no_loop", [&](bool& ok) {
        Saturation sat = saturate(product);
        std::size_t ending_at_zero = 0;
        for (const auto& o : sat.orientations)
            if (endpoint_vertex(o) == 0) ++ending_at_zero;
        SurveyResult survey = patch_survey(200, 1);
        ok = ending_at_zero == 0 && survey.by_vertex.at(0).count == 0;
        return std::to_string(ending_at_zero) + " reachable orientations end at vertex 0; survey to 200 counts " +
               survey.by_vertex.at(0).count.str();
    }));

    out.push_back(run("palindromes", [&](bool& ok) {
        std::size_t bad = 0, seen = 0;
        for (long long s = 2; s <= 200; ++s) {
            for (long long a = 1; a < s; ++a) {
                long long b = s - a;
                if (std::gcd(a, b) != 1) continue;
                ++seen;
                TumbleSequence t = tumble_sequence(a, b);
                if (!is_palindrome(t) || t.count('r') != std::size_t(a - 1) || t.count('u') != std::size_t(b - 1)) ++bad;
            }
        }
        ok = bad == 0;
        return std::to_string(bad) + " of " + std::to_string(seen) + " words fail";
    }));

    out.push_back(run("sum_to_seven", [&](bool& ok) {
        std::size_t bad = 0, seen = 0;
        for (long long s = 2; s <= 60; ++s) {
            for (long long a = 1; a < s; ++a) {
                long long b = s - a;
                if (std::gcd(a, b) != 1) continue;
                ++seen;
                if (!sum_to_seven_holds(tumble_path(tumble_sequence(a, b)))) ++bad;
            }
        }
        ok = bad == 0;
        return std::to_string(bad) + " of " + std::to_string(seen) + " paths fail";
    }));

    return out;
}

bool all_passed(const std::vector<Check>& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::string verification_json(const std::vector<Check>& checks) {
    nlohmann::ordered_json j;
    j["passed"] = all_passed(checks);
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return j.dump(2) + "\n";
}

}  // namespace tumblegeo
