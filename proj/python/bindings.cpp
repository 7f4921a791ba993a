#include "chordgenus/boundary_walk.hpp"
#include "chordgenus/bounds.hpp"
#include "chordgenus/error.hpp"
#include "chordgenus/plugs.hpp"
#include "chordgenus/procedure.hpp"
#include "chordgenus/report_io.hpp"
#include "chordgenus/stats.hpp"

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace chordgenus;

namespace {

using Pairs = std::vector<std::pair<std::int64_t, std::int64_t>>;

py::object fraction(const Rational& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(r.numerator(), r.denominator());
}

py::object big_int(const boost::multiprecision::cpp_int& v) {
  return py::module_::import("builtins").attr("int")(v.str());
}

Pairs pairs_of(const PartialDiagram& d) {
  Pairs out;
  for (const auto& c : d.chords()) out.emplace_back(c.tail.label(), c.head.label());
  return out;
}

py::tuple edge_tuple(EdgeRef e) {
  return py::make_tuple(e.start.label(), e.sign == Sign::Positive ? 1 : -1);
}

py::list edge_list(const std::vector<EdgeRef>& edges) {
  py::list out;
  for (auto e : edges) out.append(edge_tuple(e));
  return out;
}

py::dict estimate(const Estimate& e) {
  py::dict d;
  d["value"] = e.value;
  d["se"] = e.se;
  return d;
}

py::list report_rows(const BoundReport& report) {
  py::list rows;
  for (const auto& c : report.checks) {
    py::dict r;
    r["check"] = c.name;
    r["k"] = c.k;
    r["measured"] = c.measured;
    r["bound"] = c.bound;
    r["se"] = c.se;
    r["slack"] = c.slack;
    r["status"] = std::string(to_string(c.status));
    rows.append(r);
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Genus of oriented chord diagrams";
  m.attr("__version__") = std::string(kToolVersion);
  py::register_exception<ChordError>(m, "ChordError", PyExc_ValueError);

  py::class_<PartialDiagram>(m, "PartialDiagram")
      .def(py::init([](std::uint32_t n, const Pairs& chords) { return make_partial(n, chords); }),
           py::arg("n"), py::arg("chords"))
      .def_static("parse", &parse_diagram, py::arg("text"))
      .def_property_readonly("n", &PartialDiagram::order)
      .def_property_readonly("chords", &pairs_of)
      .def_property_readonly("is_full", &PartialDiagram::is_full)
      .def_property_readonly("vacant_dots",
                             [](const PartialDiagram& d) {
                               std::vector<std::uint32_t> out;
                               for (Dot v : d.vacant_dots()) out.push_back(v.label());
                               return out;
                             })
      .def("__eq__", [](const PartialDiagram& a, const PartialDiagram& b) { return a == b; })
      .def("__str__", &format_diagram)
      .def("__repr__", [](const PartialDiagram& d) { return "PartialDiagram('" + format_diagram(d) + "')"; });

  m.def("boundary_count", [](const PartialDiagram& d) { return boundary_count(Diagram(d)); });
  m.def("genus", [](const PartialDiagram& d) { return genus(Diagram(d)); });
  m.def("gluing_oracle_d", [](const PartialDiagram& d) { return gluing_oracle_d(Diagram(d)); });
  m.def("diagram_count", [](std::uint32_t n) { return big_int(diagram_count(n)); });
  m.def("edge_order", [](std::uint32_t n) { return edge_list(edge_order(n)); });

  m.def("decompose", [](const PartialDiagram& d) {
    const auto w = decompose(d);
    py::list loops, segments;
    for (const auto& l : w.loops) {
      py::dict x;
      x["edges"] = edge_list(l.edges);
      x["size"] = l.size;
      loops.append(x);
    }
    for (const auto& s : w.segments) {
      py::dict x;
      x["edges"] = edge_list(s.edges);
      x["start_dot"] = s.start_dot.label();
      x["end_dot"] = s.end_dot.label();
      segments.append(x);
    }
    py::dict out;
    out["loops"] = loops;
    out["segments"] = segments;
    return out;
  });

  m.def("find_plugs", [](const PartialDiagram& d) {
    py::list out;
    for (const auto& p : find_plugs(d)) {
      py::dict x;
      x["entrance"] = p.entrance.label();
      x["sign"] = p.sign == Sign::Positive ? 1 : -1;
      x["edges"] = edge_list(p.segment.edges);
      out.append(x);
    }
    return out;
  });

  m.def(
      "run_procedure",
      [](std::uint32_t n, std::uint64_t seed) {
        const RunResult r = [&] {
          py::gil_scoped_release release;
          return run_procedure(n, seed);
        }();
        py::list closures;
        for (const auto& c : r.closures) closures.append(py::make_tuple(c.step, c.loop_size, c.edge_count));
        return py::make_tuple(PartialDiagram(r.diagram), closures);
      },
      py::arg("n"), py::arg("seed"));

  m.def("enumerate_diagrams", [](std::uint32_t n, const std::function<void(const PartialDiagram&)>& visit) {
    return enumerate_diagrams(n, [&](const Diagram& d) { visit(d); });
  });

  m.def(
      "exact_stats",
      [](std::uint32_t n, unsigned threads) {
        const ExactStats s = [&] {
          py::gil_scoped_release release;
          return exact_stats(n, threads);
        }();
        py::dict out, hist, loops;
        for (const auto& [g, c] : s.genus_histogram) hist[py::int_(g)] = c;
        for (const auto& [k, l] : s.loops_by_size) loops[py::int_(k)] = fraction(l);
        out["n"] = s.n;
        out["count"] = big_int(s.count);
        out["d_mean"] = fraction(s.d_mean);
        out["genus_mean"] = fraction(s.genus_mean());
        out["genus_histogram"] = hist;
        out["loops_by_size"] = loops;
        out["bounds"] = report_rows(bound_report(s));
        return out;
      },
      py::arg("n"), py::arg("threads") = 1);

  m.def(
      "mc_stats",
      [](std::uint32_t n, std::uint64_t samples, std::uint64_t seed, unsigned threads) {
        const McStats s = [&] {
          py::gil_scoped_release release;
          return mc_stats(n, samples, seed, threads);
        }();
        py::dict out;
        out["n"] = s.n;
        out["samples"] = s.samples;
        out["seed"] = s.seed;
        out["d_mean"] = s.d_mean;
        out["d_stddev"] = s.d_stddev;
        out["ci99"] = py::make_tuple(s.ci99_lo, s.ci99_hi);
        py::list rows;
        for (const auto& r : s.rows) {
          py::dict x;
          x["k"] = r.k;
          x["L"] = estimate(r.loops);
          x["P"] = estimate(r.edge_share);
          rows.append(x);
        }
        out["rows"] = rows;
        out["bounds"] = report_rows(bound_report(s));
        out["csv"] = write_csv(s);
        return out;
      },
      py::arg("n"), py::arg("samples"), py::arg("seed"), py::arg("threads") = 0);

  m.def(
      "plug_mc_stats",
      [](std::uint32_t n, std::uint32_t k_max, std::uint64_t runs, std::uint64_t seed, unsigned threads) {
        const PlugStats s = [&] {
          py::gil_scoped_release release;
          return plug_mc_stats(n, k_max, runs, seed, threads);
        }();
        py::list rows;
        for (const auto& r : s.rows) {
          py::dict x;
          x["k"] = r.k;
          x["plugs"] = estimate(r.plugs);
          x["Gp"] = estimate(r.positive_completed);
          x["Gm"] = estimate(r.negative_completed);
          x["Hp"] = estimate(r.positive_entrance);
          x["Hm"] = estimate(r.negative_entrance);
          rows.append(x);
        }
        py::dict out;
        out["n"] = s.n;
        out["runs"] = s.runs;
        out["rows"] = rows;
        out["bounds"] = report_rows(bound_report(s));
        return out;
      },
      py::arg("n"), py::arg("k_max"), py::arg("runs"), py::arg("seed"), py::arg("threads") = 0);
}
