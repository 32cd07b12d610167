// wagon: recognition, partitioning and constructive colouring for some
// hereditary graph classes, plus the sweep harness behind their bounds.

#include "wagon/colouring.hpp"
#include "wagon/errors.hpp"
#include "wagon/exact.hpp"
#include "wagon/fixtures.hpp"
#include "wagon/harness.hpp"
#include "wagon/io.hpp"
#include "wagon/partition.hpp"
#include "wagon/recognition.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace wagon;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitUsage = 2;

GraphClass class_from_flag(const std::string& flag)
{
    auto c = parse_class(flag);
    if (!c)
        throw input_error("unknown class '" + flag
            + "' (choose from p3p2, p4p2, 2k2, p3p2diamond, 2k2diamond)");
    return *c;
}

void emit(const std::string& out_path, const std::string& text)
{
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out)
        throw input_error("cannot write '" + out_path + "'");
    out << text;
}

int cmd_recognize(const std::string& input, const std::string& cls_flag)
{
    Graph g = load_graph_or_fixture(input);
    GraphClass cls = class_from_flag(cls_flag);
    auto rep = check_class(g, cls);
    std::cout << "class=" << class_name(cls) << " n=" << g.vertex_count()
              << " m=" << g.edge_count() << " member=" << (rep.member ? "true" : "false") << '\n';
    if (rep.witness)
        std::cout << "witness: induced " << describe(g, *rep.witness) << '\n';
    return rep.member ? kExitOk : kExitPropertyFailure;
}

int cmd_partition(const std::string& input, const std::string& cls_flag, const std::string& out)
{
    Graph g = load_graph_or_fixture(input);
    auto clique = max_clique_exact(g);
    auto p = build_partition(g, clique);
    std::ostringstream text;
    text << p.to_text(g);
    if (!cls_flag.empty()) {
        GraphClass cls = class_from_flag(cls_flag);
        auto member = check_class(g, cls);
        if (!member.member) {
            std::cout << text.str();
            std::cout << "class=" << class_name(cls) << " member=false, witness: induced "
                      << describe(g, *member.witness) << '\n';
            return kExitPropertyFailure;
        }
        auto claims = check_claims(g, p, cls);
        if (claims.partition_violation) {
            text << "partition INVALID: " << claims.partition_violation->what << '\n';
            emit(out, text.str());
            return kExitPropertyFailure;
        }
        bool all_hold = true;
        for (const auto& c : claims.claims) {
            text << "claim " << c.claim << ": ";
            if (!c.applicable)
                text << "not applicable";
            else if (c.holds)
                text << "holds";
            else {
                all_hold = false;
                text << "VIOLATED";
                if (c.witness) {
                    text << " witness=";
                    for (int v : *c.witness)
                        text << ' ' << g.display_name(v);
                }
            }
            if (!c.note.empty())
                text << " (" << c.note << ")";
            text << '\n';
        }
        emit(out, text.str());
        return all_hold ? kExitOk : kExitPropertyFailure;
    }
    emit(out, text.str());
    return kExitOk;
}

int cmd_colour(const std::string& input, const std::string& method, const std::string& format,
    const std::string& out)
{
    Graph g = load_graph_or_fixture(input);
    Colouring col;
    std::string trace;
    std::string cls_label = "-";
    int bound = -1;
    int omega = static_cast<int>(max_clique_exact(g).size());

    if (method == "exact") {
        col = chromatic_number_exact(g).colouring;
        trace = "exact";
    } else if (method == "p3p2") {
        col = colour_p3p2(g);
        cls_label = class_name(GraphClass::P3P2Free);
        bound = bound_for_class(GraphClass::P3P2Free, std::max(omega, 1)).bound;
    } else if (method == "p4p2") {
        col = colour_p4p2(g);
        cls_label = class_name(GraphClass::P4P2Free);
        bound = bound_for_class(GraphClass::P4P2Free, std::max(omega, 1)).bound;
    } else if (method == "p3p2diamond") {
        auto traced = colour_p3p2_diamond(g);
        col = std::move(traced.colouring);
        trace = traced.case_trace;
        cls_label = class_name(GraphClass::P3P2DiamondFree);
        bound = bound_for_class(GraphClass::P3P2DiamondFree, std::max(omega, 1)).bound;
    } else if (method == "2k2diamond") {
        auto traced = colour_2k2_diamond(g);
        col = std::move(traced.colouring);
        trace = traced.case_trace;
        cls_label = class_name(GraphClass::TwoK2DiamondFree);
        bound = bound_for_class(GraphClass::TwoK2DiamondFree, std::max(omega, 1)).bound;
    } else {
        throw input_error("unknown method '" + method
            + "' (choose from p3p2, p4p2, p3p2diamond, 2k2diamond, exact)");
    }

    std::ostringstream text;
    if (format == "dot") {
        write_dot(text, g, &col);
    } else if (format == "records") {
        for (int v = 0; v < g.vertex_count(); ++v)
            text << "colour v=" << v << " c=" << col.assignment[v] << '\n';
        text << "summary class=" << cls_label << " omega=" << omega << " bound=";
        if (bound >= 0)
            text << bound;
        else
            text << '-';
        text << " colours_used=" << col.colours_used << " case=\"" << trace << "\"\n";
    } else if (format == "text") {
        write_colouring(text, col);
        text << "# class=" << cls_label << " omega=" << omega << " bound=";
        if (bound >= 0)
            text << bound;
        else
            text << '-';
        text << " colours_used=" << col.colours_used << '\n';
        if (!trace.empty())
            text << "# case: " << trace << '\n';
    } else {
        throw input_error("unknown format '" + format + "' (text, records, dot)");
    }
    emit(out, text.str());
    return kExitOk;
}

int cmd_chi(const std::string& input)
{
    Graph g = load_graph_or_fixture(input);
    auto res = chromatic_number_exact(g);
    std::cout << "chi=" << res.chi << '\n';
    return kExitOk;
}

int cmd_verify(const std::string& graph_input, const std::string& colour_path)
{
    Graph g = load_graph_or_fixture(graph_input);
    std::ifstream in(colour_path);
    if (!in)
        throw input_error("cannot open colouring file '" + colour_path + "'");
    Colouring col = read_colouring(in, g.vertex_count());
    auto check = verify_colouring(g, col);
    if (check.proper) {
        std::cout << "proper=true colours_used=" << col.colours_used << '\n';
        return kExitOk;
    }
    std::cout << "proper=false offending_edge=" << check.offending_edge->first << '-'
              << check.offending_edge->second << '\n';
    return kExitPropertyFailure;
}

int cmd_fixture(const std::string& name, const std::string& format, const std::string& out)
{
    Graph g = fixture(name);
    std::ostringstream text;
    if (format == "dimacs")
        write_dimacs(text, g);
    else if (format == "edges")
        write_edge_list(text, g);
    else if (format == "dot")
        write_dot(text, g);
    else
        throw input_error("unknown format '" + format + "' (dimacs, edges, dot)");
    emit(out, text.str());
    return kExitOk;
}

SweepConfig make_config(const std::string& cls_flag, int n_min, int n_max,
    const std::string& mode, int samples, std::uint64_t seed, const std::string& inject)
{
    SweepConfig cfg;
    cfg.cls = class_from_flag(cls_flag);
    cfg.n_min = n_min;
    cfg.n_max = n_max;
    if (mode == "enumerate")
        cfg.mode = SweepMode::EnumerateAll;
    else if (mode == "random")
        cfg.mode = SweepMode::RandomSample;
    else
        throw input_error("unknown mode '" + mode + "' (enumerate, random)");
    cfg.sample_count = samples;
    cfg.seed = seed;
    if (inject == "none")
        cfg.inject = FaultInjection::None;
    else if (inject == "colouring")
        cfg.inject = FaultInjection::Colouring;
    else if (inject == "partition")
        cfg.inject = FaultInjection::Partition;
    else
        throw input_error("unknown injection '" + inject + "' (none, colouring, partition)");
    return cfg;
}

int cmd_gen(const SweepConfig& cfg, const std::string& out)
{
    auto instances = generate_class_instances(cfg);
    std::ostringstream text;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const Graph& g = instances[i];
        text << "# graph " << i << " n=" << g.vertex_count() << " m=" << g.edge_count() << '\n';
        for (auto [u, v] : g.edges())
            text << u << ' ' << v << '\n';
        text << '\n';
    }
    emit(out, text.str());
    std::cerr << instances.size() << " instance(s) generated\n";
    return kExitOk;
}

int cmd_suite(const SweepConfig& cfg, const std::string& format, const std::string& out)
{
    auto rep = run_suite(cfg);
    if (format == "records")
        emit(out, rep.to_records());
    else if (format == "text")
        emit(out, rep.summary());
    else
        throw input_error("unknown format '" + format + "' (text, records)");
    return rep.passed() ? kExitOk : kExitPropertyFailure;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"graph-class recognition, clique-anchored partitions and certified colourings"};
    app.require_subcommand(1);

    std::string input, cls_flag, method, out, colour_file, fixture_name;
    std::string colour_format = "text", fixture_format = "dimacs", suite_format = "text";
    std::string gen_mode = "random", suite_mode = "enumerate", inject = "none";
    int n_min = 1, n_max = 8, samples = 100;
    std::uint64_t seed = 1;

    auto* recognize = app.add_subcommand("recognize", "test membership in a hereditary class");
    recognize->add_option("input", input, "graph file or fixture tag")->required();
    recognize->add_option("--class", cls_flag, "class tag")->required();

    auto* partition = app.add_subcommand("partition", "clique-anchored vertex partition");
    partition->add_option("input", input, "graph file or fixture tag")->required();
    partition->add_option("--class", cls_flag, "also check the structural claims for this class");
    partition->add_option("--out", out, "write to file instead of stdout");

    auto* colour = app.add_subcommand("colour", "colour a graph");
    colour->add_option("input", input, "graph file or fixture tag")->required();
    colour->add_option("--method", method, "p3p2 | p4p2 | p3p2diamond | 2k2diamond | exact")
        ->required();
    colour->add_option("--format", colour_format, "text | records | dot");
    colour->add_option("--out", out, "write to file instead of stdout");

    auto* chi = app.add_subcommand("chi", "exact chromatic number");
    chi->add_option("input", input, "graph file or fixture tag")->required();

    auto* verify = app.add_subcommand("verify", "check a colouring file against a graph");
    verify->add_option("input", input, "graph file or fixture tag")->required();
    verify->add_option("colouring", colour_file, "colouring file ('v colour' lines)")->required();

    auto* fix = app.add_subcommand("fixture", "write a named fixture graph");
    fix->add_option("name", fixture_name, "fixture tag")->required();
    fix->add_option("--format", fixture_format, "dimacs | edges | dot");
    fix->add_option("--out", out, "write to file instead of stdout");

    auto* gen = app.add_subcommand("gen", "generate class instances");
    gen->add_option("--class", cls_flag, "class tag")->required();
    gen->add_option("--n-min", n_min, "least vertex count");
    gen->add_option("--n-max", n_max, "greatest vertex count");
    gen->add_option("--mode", gen_mode, "enumerate | random (default random)");
    gen->add_option("--samples", samples, "random mode: total instances");
    gen->add_option("--seed", seed, "random mode seed");
    gen->add_option("--out", out, "write to file instead of stdout");

    auto* suite = app.add_subcommand("suite", "run the property sweep");
    suite->add_option("--class", cls_flag, "class tag")->required();
    suite->add_option("--n-min", n_min, "least vertex count");
    suite->add_option("--n-max", n_max, "greatest vertex count");
    suite->add_option("--mode", suite_mode, "enumerate | random (default enumerate)");
    suite->add_option("--samples", samples, "random mode: total instances");
    suite->add_option("--seed", seed, "random mode seed");
    suite->add_option("--inject", inject, "none | colouring | partition (negative controls)");
    suite->add_option("--format", suite_format, "text | records");
    suite->add_option("--out", out, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (recognize->parsed())
            return cmd_recognize(input, cls_flag);
        if (partition->parsed())
            return cmd_partition(input, cls_flag, out);
        if (colour->parsed())
            return cmd_colour(input, method, colour_format, out);
        if (chi->parsed())
            return cmd_chi(input);
        if (verify->parsed())
            return cmd_verify(input, colour_file);
        if (fix->parsed())
            return cmd_fixture(fixture_name, fixture_format, out);
        if (gen->parsed())
            return cmd_gen(make_config(cls_flag, n_min, n_max, gen_mode, samples, seed, inject), out);
        if (suite->parsed())
            return cmd_suite(
                make_config(cls_flag, n_min, n_max, suite_mode, samples, seed, inject), suite_format, out);
    } catch (const class_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitPropertyFailure;
    } catch (const capability_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
