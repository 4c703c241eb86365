#include "tumblegeo/exports.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>

namespace tumblegeo {

using nlohmann::ordered_json;

namespace {

ordered_json point_json(const LatticePoint& p) { return ordered_json::array({p.a.str(), p.b.str()}); }

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string fixed(double x, int digits = 6) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << x;
    return os.str();
}

}  // namespace

std::vector<TreeRow> tree_rows(int depth, int cap) {
    if (depth < 0) throw std::domain_error("depth must be nonnegative");
    if (depth > cap) throw DepthCapExceeded("depth " + std::to_string(depth) + " exceeds the cap " + std::to_string(cap));
    std::vector<TreeRow> rows;
    for (const auto& n : nodes_to_depth(depth)) {
        CubeOrientation o = orientation_of_node(n);
        rows.push_back({n, tumble_of_node(n), o, endpoint_vertex(o)});
    }
    return rows;
}

std::string tree_json(int depth, int cap) {
    ordered_json nodes = ordered_json::array();
    for (const auto& r : tree_rows(depth, cap)) {
        nodes.push_back({{"point", point_json(r.node.point)},
                         {"depth", r.node.depth.str()},
                         {"positive_parent", point_json(r.node.pos_parent)},
                         {"negative_parent", point_json(r.node.neg_parent)},
                         {"word", r.word.str()},
                         {"orientation", r.orientation.str()},
                         {"vertex", r.vertex}});
    }
    return dump({{"depth", depth}, {"nodes", nodes}});
}

std::string tree_dot(int depth, int cap) {
    std::ostringstream os;
    os << "digraph stern_brocot {\n  node [shape=box, fontname=monospace];\n";
    auto id = [](const LatticePoint& p) { return "\"" + p.a.str() + "_" + p.b.str() + "\""; };
    auto rows = tree_rows(depth, cap);
    for (const auto& r : rows) {
        os << "  " << id(r.node.point) << " [label=\"" << r.node.point.str() << "\\n"
           << (r.word.empty() ? "-" : r.word.str()) << "\\n" << r.orientation.str() << " v" << r.vertex << "\"];\n";
    }
    for (const auto& r : rows) {
        if (r.node.is_root()) continue;
        // the parent is whichever structural parent was the previous node
        const LatticePoint& parent =
            r.node.child_sign == ChildSign::positive ? r.node.neg_parent : r.node.pos_parent;
        os << "  " << id(parent) << " -> " << id(r.node.point) << " [label=\""
           << (r.node.child_sign == ChildSign::positive ? '+' : '-') << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

std::string tree_text(int depth, int cap) {
    std::ostringstream os;
    for (const auto& r : tree_rows(depth, cap))
        os << r.node.depth.str() << ' ' << r.node.point.str() << ' ' << (r.word.empty() ? "-" : r.word.str()) << ' '
           << r.orientation.str() << ' ' << r.vertex << '\n';
    return os.str();
}

std::string tetra_json(const RationalPoint& p, const TetraVertexLabel& label, long long bound,
                       const std::vector<TetraGeodesic>& found) {
    ordered_json list = ordered_json::array();
    for (const auto& g : found) {
        list.push_back({{"target", point_json(g.target)},
                        {"du", g.du.str()},
                        {"dv", g.dv.str()},
                        {"tangent_over_sqrt3", g.tangent_over_sqrt3().str()},
                        {"angle_degrees", g.angle_degrees()}});
    }
    return dump({{"start", {p.x.str(), p.y.str()}},
                 {"label", label.str()},
                 {"bound", bound},
                 {"count", found.size()},
                 {"geodesics", list}});
}

std::string tetra_text(const std::vector<TetraGeodesic>& found) {
    std::ostringstream os;
    os << found.size() << " geodesics\n";
    for (const auto& g : found)
        os << g.target.str() << " tan/sqrt3=" << g.tangent_over_sqrt3().str() << " angle=" << fixed(g.angle_degrees())
           << '\n';
    return os.str();
}

std::string child_table_csv(const Saturation& sat) {
    std::ostringstream os;
    os << "edge,negative_child,positive_child\n";
    for (const auto& e : sat.edges) {
        auto kids = child_edges(e);
        os << '"' << e.str() << "\",\"" << kids.negative.str() << "\",\"" << kids.positive.str() << "\"\n";
    }
    return os.str();
}

std::string matrix_json(const TransitionMatrix& a) {
    ordered_json edges = ordered_json::array();
    for (const auto& e : a.edges()) edges.push_back(e.str());
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < a.size(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < a.size(); ++j) row.push_back(a.at(i, j).str());
        rows.push_back(row);
    }
    return dump({{"size", a.size()}, {"edges", edges}, {"entries", rows}});
}

std::string matrix_csv(const TransitionMatrix& a) {
    std::ostringstream os;
    os << "edge";
    for (const auto& e : a.edges()) os << ",\"" << e.str() << '"';
    os << '\n';
    for (std::size_t i = 0; i < a.size(); ++i) {
        os << '"' << a.edges()[i].str() << '"';
        for (std::size_t j = 0; j < a.size(); ++j) os << ',' << a.at(i, j).str();
        os << '\n';
    }
    return os.str();
}

namespace {

struct SurveyLine {
    int vertex;
    const VertexTally* tally;
    Rational limit;
    double deviation;
};

std::vector<SurveyLine> survey_lines(const SurveyResult& s) {
    auto limits = limiting_vertex_frequencies();
    std::vector<SurveyLine> out;
    for (const auto& [v, t] : s.by_vertex) {
        Rational limit = limits.count(v) ? limits.at(v) : Rational(0);
        out.push_back({v, &t, limit, std::abs(static_cast<double>(t.frequency - limit))});
    }
    return out;
}

}  // namespace

std::string survey_csv(const SurveyResult& s) {
    std::ostringstream os;
    os << "vertex,count,frequency_num,frequency_den,limit_num,limit_den,abs_dev\n";
    for (const auto& l : survey_lines(s))
        os << l.vertex << ',' << l.tally->count.str() << ',' << l.tally->frequency.numerator().str() << ','
           << l.tally->frequency.denominator().str() << ',' << l.limit.numerator().str() << ','
           << l.limit.denominator().str() << ',' << std::setprecision(10) << std::scientific << l.deviation << '\n';
    return os.str();
}

std::string survey_json(const SurveyResult& s) {
    ordered_json vertices = ordered_json::array();
    for (const auto& l : survey_lines(s)) {
        vertices.push_back({{"vertex", l.vertex},
                            {"count", l.tally->count.str()},
                            {"frequency", l.tally->frequency.str()},
                            {"limit", l.limit.str()},
                            {"abs_dev", l.deviation}});
    }
    return dump({{"n_max", s.n_max},
                 {"total", s.total.str()},
                 {"max_abs_dev", max_abs_deviation(s)},
                 {"vertices", vertices}});
}

std::string survey_text(const SurveyResult& s) {
    std::ostringstream os;
    os << "n_max " << s.n_max << ", " << s.total.str() << " coprime points\n";
    for (const auto& l : survey_lines(s))
        os << "vertex " << l.vertex << ": " << l.tally->count.str() << " (" << fixed(static_cast<double>(l.tally->frequency))
           << ", limit " << l.limit.str() << ")\n";
    os << "max abs deviation " << fixed(max_abs_deviation(s)) << '\n';
    return os.str();
}

std::string convergence_csv(const std::vector<double>& curve) {
    std::ostringstream os;
    os << "k,total_variation\n" << std::setprecision(10) << std::scientific;
    for (std::size_t k = 0; k < curve.size(); ++k) os << k << ',' << curve[k] << '\n';
    return os.str();
}

std::string depth_frequencies_json(const DepthFrequencies& f) {
    ordered_json vertices = ordered_json::array();
    for (const auto& [v, c] : f.counts)
        vertices.push_back({{"vertex", v}, {"count", c.str()}, {"frequency", f.frequencies.at(v).str()}});
    return dump({{"depth", f.depth}, {"vertices", vertices}});
}

std::string path_json(const Integer& a, const Integer& b) {
    TumbleSequence t = tumble_sequence(a, b);
    TumblePath path = tumble_path(t);
    CubeOrientation o = orientation_of(t.str());
    ordered_json squares = ordered_json::array();
    for (const auto& c : path.squares) squares.push_back({c.x, c.y});
    ordered_json corners = ordered_json::array();
    for (const auto& [c, label] : path.corner_labels) corners.push_back({{"x", c.x}, {"y", c.y}, {"label", label}});
    return dump({{"target", {a.str(), b.str()}},
                 {"word", t.str()},
                 {"orientation", o.str()},
                 {"vertex", endpoint_vertex(o)},
                 {"squares", squares},
                 {"corners", corners}});
}

std::string path_svg(const Integer& a, const Integer& b) {
    TumbleSequence t = tumble_sequence(a, b);
    TumblePath path = tumble_path(t);
    const int unit = 40, pad = 20;
    const auto w = a.convert_to<long long>(), h = b.convert_to<long long>();
    auto sx = [&](long long x) { return pad + unit * x; };
    auto sy = [&](long long y) { return pad + unit * (h - y); };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 2 * pad + unit * w << "\" height=\""
       << 2 * pad + unit * h << "\" data-word=\"" << t.str() << "\">\n";
    for (const auto& c : path.squares)
        os << "  <rect x=\"" << sx(c.x) << "\" y=\"" << sy(c.y + 1) << "\" width=\"" << unit << "\" height=\"" << unit
           << "\" fill=\"#dde7f3\" stroke=\"#333\" data-cell=\"" << c.x << ',' << c.y << "\"/>\n";
    os << "  <line x1=\"" << sx(0) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(w) << "\" y2=\"" << sy(h)
       << "\" stroke=\"#c0392b\" stroke-width=\"2\"/>\n";
    for (const auto& [c, label] : path.corner_labels)
        os << "  <text x=\"" << sx(c.x) + 3 << "\" y=\"" << sy(c.y) - 3 << "\" font-size=\"11\" data-corner=\"" << c.x
           << ',' << c.y << "\">" << label << "</text>\n";
    os << "</svg>\n";
    return os.str();
}

std::string face_json(const RegionDecomposition& d) {
    ordered_json lines = ordered_json::array();
    for (const auto& l : d.lines) {
        ordered_json pts = ordered_json::array();
        for (const auto& p : l.points) pts.push_back(point_json(p));
        lines.push_back({{"direction", point_json(l.direction)}, {"points", pts}});
    }
    ordered_json regions = ordered_json::array();
    for (std::size_t i = 0; i < d.regions.size(); ++i) regions.push_back({{"index", i}, {"word", d.regions[i].str()}});
    ordered_json pts = ordered_json::array();
    for (const auto& p : d.lattice_points) pts.push_back(point_json(p));
    return dump({{"target", point_json(d.target)}, {"lattice_points", pts}, {"lines", lines}, {"regions", regions}});
}

std::string face_svg(const RegionDecomposition& d) {
    const double unit = 60.0, pad = 30.0;
    const double n = d.target.a.convert_to<double>(), m = d.target.b.convert_to<double>();
    auto sx = [&](double x) { return fixed(pad + unit * x, 2); };
    auto sy = [&](double y) { return fixed(pad + unit * (m - y), 2); };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(2 * pad + unit * n, 0) << "\" height=\""
       << fixed(2 * pad + unit * m + 20.0 * static_cast<double>(d.regions.size()), 0) << "\">\n";
    os << "  <rect x=\"" << sx(0) << "\" y=\"" << sy(1) << "\" width=\"" << unit << "\" height=\"" << unit
       << "\" fill=\"#eeeeee\" stroke=\"#333\"/>\n";
    os << "  <polygon points=\"" << sx(0) << ',' << sy(0) << ' ' << sx(1) << ',' << sy(0) << ' ' << sx(n) << ','
       << sy(m) << ' ' << sx(0) << ',' << sy(1) << "\" fill=\"none\" stroke=\"#999\"/>\n";
    for (std::size_t i = 0; i < d.lines.size(); ++i) {
        // from the target through the farthest point of the line
        const LatticePoint& far = d.lines[i].points.front();
        os << "  <line x1=\"" << sx(n) << "\" y1=\"" << sy(m) << "\" x2=\"" << sx(far.a.convert_to<double>())
           << "\" y2=\"" << sy(far.b.convert_to<double>()) << "\" stroke=\"#2c3e50\" data-line=\"" << i
           << "\" data-direction=\"" << d.lines[i].direction.a.str() << ',' << d.lines[i].direction.b.str() << "\"/>\n";
        for (const auto& p : d.lines[i].points)
            os << "  <circle cx=\"" << sx(p.a.convert_to<double>()) << "\" cy=\"" << sy(p.b.convert_to<double>())
               << "\" r=\"3\" data-point=\"" << p.a.str() << ',' << p.b.str() << "\"/>\n";
    }
    for (std::size_t i = 0; i < d.regions.size(); ++i)
        os << "  <text x=\"" << pad << "\" y=\"" << fixed(2 * pad + unit * m + 20.0 * static_cast<double>(i), 0)
           << "\" font-size=\"13\" data-region=\"" << i << "\">z" << i << ": "
           << (d.regions[i].empty() ? "(empty)" : d.regions[i].str()) << "</text>\n";
    os << "</svg>\n";
    return os.str();
}

std::string face_text(const RegionDecomposition& d) {
    std::ostringstream os;
    os << "target " << d.target.str() << ", " << d.regions.size() << " regions\n";
    for (std::size_t i = 0; i < d.lines.size(); ++i) {
        os << "line " << i << ':';
        for (const auto& p : d.lines[i].points) os << ' ' << p.str();
        os << '\n';
    }
    for (std::size_t i = 0; i < d.regions.size(); ++i)
        os << "region " << i << ": " << (d.regions[i].empty() ? "-" : d.regions[i].str()) << '\n';
    return os.str();
}

}  // namespace tumblegeo
