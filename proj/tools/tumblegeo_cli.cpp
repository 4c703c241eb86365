#include "tumblegeo/edge_markov.hpp"
#include "tumblegeo/exports.hpp"
#include "tumblegeo/face.hpp"
#include "tumblegeo/tetra.hpp"
#include "tumblegeo/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

using namespace tumblegeo;

namespace {

struct Output {
    std::string format = "text";
    std::string path;

    void write(const std::string& text) const {
        if (path.empty() || path == "-") {
            std::cout << text;
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open " + path + " for writing");
        f << text;
    }
};

void add_output(CLI::App* cmd, Output& out, const std::vector<std::string>& formats) {
    cmd->add_option("--format", out.format, "Output format")->check(CLI::IsMember(formats))->capture_default_str();
    cmd->add_option("--out", out.path, "Write to this file instead of stdout");
}

unsigned default_workers() {
    if (const char* env = std::getenv("TUMBLEGEO_WORKERS")) {
        try {
            int n = std::stoi(env);
            if (n >= 1) return static_cast<unsigned>(n);
        } catch (const std::exception&) {
        }
        std::cerr << "ignoring TUMBLEGEO_WORKERS=" << env << '\n';
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Geodesics on the regular tetrahedron and cube"};
    app.require_subcommand(1);

    // tetra
    Output tetra_out;
    std::string label_text, start_text = "0,0";
    long long bound = 10;
    bool all_directions = false;
    auto* tetra = app.add_subcommand("tetra", "Geodesics from a point of a face to tetrahedron vertices with a label");
    tetra->add_option("--label", label_text, "Vertex label: 0,0 0,1 1,0 or 1,1")->required();
    tetra->add_option("--bound", bound, "Largest a + b (|a| + |b| with --all-directions)")->capture_default_str();
    tetra->add_option("--start", start_text, "Start point x,y in the unit cell, e.g. 1/3,1/5")->capture_default_str();
    tetra->add_flag("--all-directions", all_directions, "Search every direction, not only the first quadrant");
    add_output(tetra, tetra_out, {"text", "json"});

    // tree
    Output tree_out;
    int tree_depth = 4, tree_cap = kDefaultTreeDepthCap;
    auto* tree = app.add_subcommand("tree", "Stern-Brocot tree with words, orientations and endpoint vertices");
    tree->add_option("--depth", tree_depth, "Depth of the export")->capture_default_str();
    tree->add_option("--max-depth", tree_cap, "Refuse exports deeper than this")->capture_default_str();
    add_output(tree, tree_out, {"text", "json", "dot"});

    // verify
    Output verify_out;
    verify_out.format = "json";
    auto* verify = app.add_subcommand("verify", "Run the self-check battery; nonzero exit on any failure");
    add_output(verify, verify_out, {"text", "json"});

    // survey
    Output survey_out;
    long long n_max = 1000;
    unsigned workers = default_workers();
    auto* survey = app.add_subcommand("survey", "Endpoint vertex frequencies over [1, n]^2");
    survey->add_option("--n-max", n_max, "Side of the square patch")->capture_default_str();
    survey->add_option("--workers", workers, "Worker threads (default: TUMBLEGEO_WORKERS or all cores)")
        ->check(CLI::PositiveNumber);
    add_output(survey, survey_out, {"text", "json", "csv"});

    // face
    Output face_out;
    long long face_n = 0, face_m = 0;
    auto* face = app.add_subcommand("face", "Regions of the unit square by tumble sequence to (n, m)");
    face->add_option("n", face_n, "Target x")->required()->check(CLI::PositiveNumber);
    face->add_option("m", face_m, "Target y")->required()->check(CLI::PositiveNumber);
    add_output(face, face_out, {"text", "json", "svg"});

    // matrix
    Output matrix_out;
    matrix_out.format = "json";
    int curve_k = -1, depth_k = -1;
    auto* matrix = app.add_subcommand("matrix", "The edge-label transition matrix and derived data");
    matrix->add_option("--convergence", curve_k, "Instead: total variation to uniform for k = 0..K (csv)");
    matrix->add_option("--depth", depth_k, "Instead: exact vertex counts at this tree depth (json)");
    add_output(matrix, matrix_out, {"json", "csv", "table"});

    // path
    Output path_out;
    path_out.format = "json";
    std::string path_a, path_b;
    auto* path = app.add_subcommand("path", "Tumble word and tumble path to a coprime (a, b)");
    path->add_option("a", path_a, "Target x")->required();
    path->add_option("b", path_b, "Target y")->required();
    add_output(path, path_out, {"json", "svg", "text"});

    CLI11_PARSE(app, argc, argv);

    try {
        if (*tetra) {
            auto label = TetraVertexLabel::parse(label_text);
            auto start = RationalPoint::parse(start_text);
            auto found = all_directions ? geodesics_to_vertex_all_directions(start, label, bound)
                                        : geodesics_to_vertex(start, label, bound);
            tetra_out.write(tetra_out.format == "json" ? tetra_json(start, label, bound, found) : tetra_text(found));
        } else if (*tree) {
            std::string text = tree_out.format == "json"  ? tree_json(tree_depth, tree_cap)
                               : tree_out.format == "dot" ? tree_dot(tree_depth, tree_cap)
                                                          : tree_text(tree_depth, tree_cap);
            tree_out.write(text);
        } else if (*verify) {
            auto checks = run_verification();
            if (verify_out.format == "json") {
                verify_out.write(verification_json(checks));
            } else {
                std::string text;
                for (const auto& c : checks) text += (c.passed ? "PASS " : "FAIL ") + c.name + ": " + c.detail + "\n";
                verify_out.write(text);
            }
            return all_passed(checks) ? 0 : 1;
        } else if (*survey) {
            SurveyResult s = patch_survey(n_max, workers);
            std::string text = survey_out.format == "json"  ? survey_json(s)
                               : survey_out.format == "csv" ? survey_csv(s)
                                                            : survey_text(s);
            survey_out.write(text);
            double rate = s.seconds > 0 ? s.total.convert_to<double>() / s.seconds : 0.0;
            std::cerr << "wall " << s.seconds << " s, " << static_cast<long long>(rate) << " points/s, " << workers
                      << " workers\n";
        } else if (*face) {
            auto d = decompose(face_n, face_m);
            face_out.write(face_out.format == "json"  ? face_json(d)
                           : face_out.format == "svg" ? face_svg(d)
                                                      : face_text(d));
        } else if (*matrix) {
            Saturation sat = saturate();
            TransitionMatrix a(sat.edges);
            if (curve_k >= 0)
                matrix_out.write(convergence_csv(convergence_curve(a, curve_k)));
            else if (depth_k >= 0)
                matrix_out.write(depth_frequencies_json(vertex_frequencies_at_depth(depth_k)));
            else if (matrix_out.format == "table")
                matrix_out.write(child_table_csv(sat));
            else
                matrix_out.write(matrix_out.format == "csv" ? matrix_csv(a) : matrix_json(a));
        } else if (*path) {
            Integer a(path_a), b(path_b);
            if (path_out.format == "svg") {
                path_out.write(path_svg(a, b));
            } else if (path_out.format == "text") {
                auto t = tumble_sequence(a, b);
                auto o = orientation_of(t.str());
                path_out.write((t.empty() ? "-" : t.str()) + " " + o.str() + " " + std::to_string(endpoint_vertex(o)) + "\n");
            } else {
                path_out.write(path_json(a, b));
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
