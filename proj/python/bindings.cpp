#include "wagon/colouring.hpp"
#include "wagon/errors.hpp"
#include "wagon/exact.hpp"
#include "wagon/fixtures.hpp"
#include "wagon/harness.hpp"
#include "wagon/io.hpp"
#include "wagon/partition.hpp"
#include "wagon/recognition.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/functional.h>
#include <pybind11/stl.h>

#include <fstream>
#include <sstream>

namespace py = pybind11;
using namespace wagon;

namespace {

Graph graph_from_edges(int n, const std::vector<Edge>& edges,
    const std::vector<std::string>& labels)
{
    return Graph(n, edges, labels);
}

std::string graph_repr(const Graph& g)
{
    std::ostringstream out;
    out << "Graph(n=" << g.vertex_count() << ", m=" << g.edge_count() << ")";
    return out.str();
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "graph-class recognition, clique-anchored partitions and certified colourings";

    py::register_exception<input_error>(m, "InputError", PyExc_ValueError);
    py::register_exception<capability_error>(m, "CapabilityError", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<>())
        .def(py::init<int>(), py::arg("n"))
        .def(py::init(&graph_from_edges), py::arg("n"), py::arg("edges"),
            py::arg("labels") = std::vector<std::string>{})
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("m", &Graph::edge_count)
        .def("adjacent", &Graph::adjacent)
        .def("degree", &Graph::degree)
        .def("neighbours", [](const Graph& g, int v) { return g.neighbours(v).to_vector(); })
        .def("edges", [](const Graph& g) { return g.edges(); })
        .def("label", [](const Graph& g, int v) { return g.display_name(v); })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", &graph_repr);

    m.def("induced_subgraph",
        [](const Graph& g, const std::vector<int>& s) {
            return induced_subgraph(g, std::span<const int>(s));
        },
        py::arg("g"), py::arg("vertices"));
    m.def("complement", &complement, py::arg("g"));
    m.def("multiply_vertex", &multiply_vertex, py::arg("g"), py::arg("v"), py::arg("k"));

    m.def("fixture", &fixture, py::arg("name"));
    m.def("fixture_names", &fixture_names);
    m.def("fig5_blow_up", &fig5_blow_up, py::arg("k"));

    py::class_<PatternId>(m, "PatternId")
        .def_static("hole", &PatternId::hole, py::arg("k"))
        .def_static("antihole", &PatternId::antihole, py::arg("k"))
        .def_property_readonly("name", &PatternId::name)
        .def_property_readonly("size", &PatternId::vertex_count)
        .def("__repr__", [](const PatternId& p) { return "PatternId(" + p.name() + ")"; });

    py::enum_<PatternKind>(m, "PatternKind")
        .value("P2", PatternKind::P2)
        .value("P3", PatternKind::P3)
        .value("P4", PatternKind::P4)
        .value("TwoK2", PatternKind::TwoK2)
        .value("P3uP2", PatternKind::P3uP2)
        .value("P4uP2", PatternKind::P4uP2)
        .value("Diamond", PatternKind::Diamond)
        .value("C5", PatternKind::C5);

    m.def("pattern", [](PatternKind k) { return PatternId(k); }, py::arg("kind"));

    py::class_<Witness>(m, "Witness")
        .def_readonly("pattern", &Witness::pattern)
        .def_readonly("vertices", &Witness::vertices)
        .def("__repr__", [](const Witness& w) {
            std::string s = "Witness(" + w.pattern.name() + ", [";
            for (std::size_t i = 0; i < w.vertices.size(); ++i)
                s += (i ? "," : "") + std::to_string(w.vertices[i]);
            return s + "])";
        });

    m.def("find_induced", &find_induced, py::arg("g"), py::arg("pattern"));
    m.def("witness_valid", &witness_valid, py::arg("g"), py::arg("witness"));

    py::enum_<GraphClass>(m, "GraphClass")
        .value("P3P2Free", GraphClass::P3P2Free)
        .value("P4P2Free", GraphClass::P4P2Free)
        .value("TwoK2Free", GraphClass::TwoK2Free)
        .value("P3P2DiamondFree", GraphClass::P3P2DiamondFree)
        .value("TwoK2DiamondFree", GraphClass::TwoK2DiamondFree);

    m.def("parse_class", &parse_class, py::arg("name"));
    m.def("class_name", &class_name, py::arg("cls"));

    py::class_<ClassMembershipReport>(m, "ClassMembershipReport")
        .def_readonly("cls", &ClassMembershipReport::cls)
        .def_readonly("member", &ClassMembershipReport::member)
        .def_readonly("witness", &ClassMembershipReport::witness);

    m.def("check_class", &check_class, py::arg("g"), py::arg("cls"));

    py::enum_<PerfectnessMode>(m, "PerfectnessMode")
        .value("SubgraphSweep", PerfectnessMode::SubgraphSweep)
        .value("HoleSearch", PerfectnessMode::HoleSearch);

    py::class_<PerfectnessReport>(m, "PerfectnessReport")
        .def_readonly("perfect", &PerfectnessReport::perfect)
        .def_readonly("witness", &PerfectnessReport::witness);

    m.def("is_perfect_small", &is_perfect_small, py::arg("g"), py::arg("mode"));

    m.def("max_clique_exact", &max_clique_exact, py::arg("g"));
    m.def("clique_number", &clique_number, py::arg("g"));

    py::class_<Colouring>(m, "Colouring")
        .def(py::init<>())
        .def_readwrite("assignment", &Colouring::assignment)
        .def_readonly("colours_used", &Colouring::colours_used)
        .def("finalize", &Colouring::finalize);

    py::class_<ColouringCheck>(m, "ColouringCheck")
        .def_readonly("proper", &ColouringCheck::proper)
        .def_readonly("offending_edge", &ColouringCheck::offending_edge);

    m.def("verify_colouring", &verify_colouring, py::arg("g"), py::arg("colouring"));

    py::class_<ExactChromatic>(m, "ExactChromatic")
        .def_readonly("chi", &ExactChromatic::chi)
        .def_readonly("colouring", &ExactChromatic::colouring);

    m.def("chromatic_number_exact", &chromatic_number_exact, py::arg("g"));

    py::class_<WagonPartition>(m, "WagonPartition")
        .def_readonly("clique", &WagonPartition::clique)
        .def_property_readonly("omega", &WagonPartition::omega)
        .def("c", [](const WagonPartition& p, int i, int j) { return p.c(i, j); }, py::arg("i"),
            py::arg("j"))
        .def("i_set", &WagonPartition::i_set, py::arg("a"))
        .def("to_text", &WagonPartition::to_text, py::arg("g"));

    m.def("build_partition", &build_partition, py::arg("g"), py::arg("ordered_clique"));

    py::class_<PartitionViolation>(m, "PartitionViolation")
        .def_readonly("what", &PartitionViolation::what)
        .def_readonly("vertices", &PartitionViolation::vertices);

    m.def("validate_partition", &validate_partition, py::arg("g"), py::arg("partition"));

    py::class_<ClaimReport>(m, "ClaimReport")
        .def_readonly("claim", &ClaimReport::claim)
        .def_readonly("applicable", &ClaimReport::applicable)
        .def_readonly("holds", &ClaimReport::holds)
        .def_readonly("witness", &ClaimReport::witness)
        .def_readonly("note", &ClaimReport::note);

    py::class_<ClaimsReport>(m, "ClaimsReport")
        .def_readonly("partition_violation", &ClaimsReport::partition_violation)
        .def_readonly("claims", &ClaimsReport::claims);

    m.def("check_claims", &check_claims, py::arg("g"), py::arg("partition"), py::arg("cls"));

    py::class_<BoundSpec>(m, "BoundSpec")
        .def_readonly("cls", &BoundSpec::cls)
        .def_readonly("omega", &BoundSpec::omega)
        .def_readonly("bound", &BoundSpec::bound)
        .def_readonly("perfect", &BoundSpec::perfect);

    m.def("bound_for_class", &bound_for_class, py::arg("cls"), py::arg("omega"));
    m.def("colour_disjoint_cliques", &colour_disjoint_cliques, py::arg("g"));
    m.def("colour_cograph", &colour_cograph, py::arg("g"));
    m.def("colour_p3p2", &colour_p3p2, py::arg("g"));
    m.def("colour_p4p2", &colour_p4p2, py::arg("g"));

    py::class_<TracedColouring>(m, "TracedColouring")
        .def_readonly("colouring", &TracedColouring::colouring)
        .def_readonly("case_trace", &TracedColouring::case_trace);

    m.def("colour_p3p2_diamond", &colour_p3p2_diamond, py::arg("g"));
    m.def("colour_2k2_diamond", &colour_2k2_diamond, py::arg("g"));

    m.def("read_graph", [](const std::string& path) { return load_graph_or_fixture(path); },
        py::arg("path_or_fixture"));
    m.def("write_dimacs", [](const Graph& g, const std::string& path) {
        std::ofstream out(path);
        if (!out)
            throw input_error("cannot write '" + path + "'");
        write_dimacs(out, g);
    });
    m.def("to_dot", [](const Graph& g, const Colouring* col) {
        std::ostringstream out;
        write_dot(out, g, col);
        return out.str();
    }, py::arg("g"), py::arg("colouring") = nullptr);

    py::enum_<SweepMode>(m, "SweepMode")
        .value("EnumerateAll", SweepMode::EnumerateAll)
        .value("RandomSample", SweepMode::RandomSample);

    py::enum_<FaultInjection>(m, "FaultInjection")
        .value("None_", FaultInjection::None)
        .value("Colouring", FaultInjection::Colouring)
        .value("Partition", FaultInjection::Partition);

    py::class_<SweepConfig>(m, "SweepConfig")
        .def(py::init<>())
        .def_readwrite("cls", &SweepConfig::cls)
        .def_readwrite("n_min", &SweepConfig::n_min)
        .def_readwrite("n_max", &SweepConfig::n_max)
        .def_readwrite("mode", &SweepConfig::mode)
        .def_readwrite("sample_count", &SweepConfig::sample_count)
        .def_readwrite("seed", &SweepConfig::seed)
        .def_readwrite("inject", &SweepConfig::inject);

    py::class_<SweepFailure>(m, "SweepFailure")
        .def_readonly("instance", &SweepFailure::instance)
        .def_readonly("property", &SweepFailure::property)
        .def_readonly("witness", &SweepFailure::witness)
        .def_readonly("graph", &SweepFailure::graph);

    py::class_<SweepReport>(m, "SweepReport")
        .def_readonly("instances_tested", &SweepReport::instances_tested)
        .def_readonly("failures", &SweepReport::failures)
        .def("passed", &SweepReport::passed)
        .def("records", &SweepReport::to_records)
        .def("summary", &SweepReport::summary);

    m.def("generate_class_instances", &generate_class_instances, py::arg("config"));
    m.def("run_suite", &run_suite, py::arg("config"),
        py::call_guard<py::gil_scoped_release>());
    m.def("enumerate_graphs", &enumerate_graphs, py::arg("n"), py::arg("keep"));
    m.def("canonical_code", &canonical_code, py::arg("g"));
}
