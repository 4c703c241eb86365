#include "tumblegeo/edge_markov.hpp"
#include "tumblegeo/exports.hpp"
#include "tumblegeo/face.hpp"
#include "tumblegeo/stern_brocot.hpp"
#include "tumblegeo/tetra.hpp"
#include "tumblegeo/tumble.hpp"
#include "tumblegeo/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace tumblegeo;

namespace {

// Python ints of any size travel as decimal strings.
Integer to_integer(const py::int_& v) { return Integer(py::str(v).cast<std::string>()); }
py::int_ to_py(const Integer& v) { return py::int_(py::reinterpret_steal<py::object>(PyLong_FromString(v.str().c_str(), nullptr, 10))); }

py::tuple point(const LatticePoint& p) { return py::make_tuple(to_py(p.a), to_py(p.b)); }

py::object fraction(const Rational& r) {
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls(to_py(r.numerator()), to_py(r.denominator()));
}

RationalPoint start_point(const py::object& x, const py::object& y) {
    auto as_rational = [](const py::object& v) {
        py::object f = py::module_::import("fractions").attr("Fraction")(v);
        return Rational(to_integer(f.attr("numerator")), to_integer(f.attr("denominator")));
    };
    return {as_rational(x), as_rational(y)};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Geodesics on the regular tetrahedron and cube";

    py::register_exception<VertexHit>(m, "VertexHit", PyExc_ValueError);
    py::register_exception<OnBoundary>(m, "OnBoundary", PyExc_ValueError);

    m.def("tumble_sequence", [](const py::int_& a, const py::int_& b) {
        return tumble_sequence(to_integer(a), to_integer(b)).str();
    }, py::arg("a"), py::arg("b"));

    m.def("tumble_sequence_of_segment", [](const py::object& x, const py::object& y, const py::int_& a, const py::int_& b) {
        return tumble_sequence_of_segment(start_point(x, y), {to_integer(a), to_integer(b)}).str();
    }, py::arg("x"), py::arg("y"), py::arg("a"), py::arg("b"));

    m.def("orientation_of", [](const std::string& word) { return orientation_of(word).str(); }, py::arg("word"));
    m.def("compose", [](const std::string& s, const std::string& t) {
        return compose(CubeOrientation::parse(s), CubeOrientation::parse(t)).str();
    });
    m.def("endpoint_vertex", [](const std::string& o) { return endpoint_vertex(CubeOrientation::parse(o)); });

    m.def("locate", [](const py::int_& a, const py::int_& b) {
        Located l = locate(to_integer(a), to_integer(b));
        py::dict d;
        d["path"] = path_string(l.path);
        d["depth"] = to_py(l.node.depth);
        d["positive_parent"] = point(l.node.pos_parent);
        d["negative_parent"] = point(l.node.neg_parent);
        d["orientation"] = l.orientation.str();
        d["vertex"] = endpoint_vertex(l.orientation);
        return d;
    }, py::arg("a"), py::arg("b"));

    m.def("visible_from", [](const py::object& x, const py::object& y, const py::int_& a, const py::int_& b) {
        return visible_from(start_point(x, y), {to_integer(a), to_integer(b)});
    });

    m.def("tetra_geodesics", [](const std::string& label, long long bound, const py::object& x, const py::object& y) {
        py::list out;
        for (const auto& g : geodesics_to_vertex(start_point(x, y), TetraVertexLabel::parse(label), bound))
            out.append(py::make_tuple(point(g.target), fraction(g.tangent_over_sqrt3()), g.angle_degrees()));
        return out;
    }, py::arg("label"), py::arg("bound"), py::arg("x") = 0, py::arg("y") = 0);

    m.def("edge_labels", [] {
        std::vector<std::string> out;
        for (const auto& e : saturate().edges) out.push_back(e.str());
        return out;
    });
    m.def("child_edges", [](const std::string& edge) {
        auto kids = child_edges(EdgeLabel::parse(edge));
        return py::make_tuple(kids.negative.str(), kids.positive.str());
    });
    m.def("limiting_vertex_frequencies", [] {
        py::dict d;
        for (const auto& [v, f] : limiting_vertex_frequencies()) d[py::int_(v)] = fraction(f);
        return d;
    });
    m.def("vertex_frequencies_at_depth", [](int k) {
        py::dict d;
        for (const auto& [v, f] : vertex_frequencies_at_depth(k).frequencies) d[py::int_(v)] = fraction(f);
        return d;
    }, py::arg("k"));
    m.def("patch_survey", [](long long n_max, unsigned workers) {
        SurveyResult s;
        {
            py::gil_scoped_release release;
            s = patch_survey(n_max, workers);
        }
        py::dict counts;
        for (const auto& [v, t] : s.by_vertex) counts[py::int_(v)] = to_py(t.count);
        return counts;
    }, py::arg("n_max"), py::arg("workers") = 1);

    m.def("decompose", [](long long n, long long m_) {
        RegionDecomposition d = decompose(n, m_);
        py::list lines;
        for (const auto& l : d.lines) {
            py::list pts;
            for (const auto& p : l.points) pts.append(point(p));
            lines.append(pts);
        }
        std::vector<std::string> words;
        for (const auto& w : d.regions) words.push_back(w.str());
        py::dict out;
        out["lines"] = lines;
        out["regions"] = words;
        return out;
    }, py::arg("n"), py::arg("m"));
    m.def("region_of", [](const py::object& x, const py::object& y, long long n, long long m_) {
        return region_of(start_point(x, y), n, m_);
    });

    m.def("verify", [] {
        py::list out;
        for (const auto& c : run_verification()) out.append(py::make_tuple(c.name, c.passed, c.detail));
        return out;
    });
    m.def("tree_json", [](int depth) { return tree_json(depth); }, py::arg("depth"));
}
