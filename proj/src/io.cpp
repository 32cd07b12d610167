#include "wagon/io.hpp"

#include "wagon/errors.hpp"
#include "wagon/fixtures.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace wagon {

namespace {

[[noreturn]] void fail_line(int line, const std::string& what)
{
    throw input_error("line " + std::to_string(line) + ": " + what);
}

} // namespace

Graph read_dimacs(std::istream& in)
{
    int n = -1;
    long m_declared = -1;
    std::vector<Edge> edges;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag))
            continue; // blank
        if (tag == "c")
            continue;
        if (tag == "p") {
            std::string fmt;
            if (!(ls >> fmt >> n >> m_declared) || n < 0 || m_declared < 0)
                fail_line(lineno, "expected 'p edge <n> <m>'");
            continue;
        }
        if (tag == "e") {
            if (n < 0)
                fail_line(lineno, "edge before the problem line");
            int u, v;
            if (!(ls >> u >> v))
                fail_line(lineno, "expected 'e <u> <v>'");
            if (u < 1 || u > n || v < 1 || v > n)
                fail_line(lineno, "endpoint out of range 1.." + std::to_string(n));
            if (u == v)
                fail_line(lineno, "self-loop at vertex " + std::to_string(u));
            edges.emplace_back(u - 1, v - 1);
            continue;
        }
        fail_line(lineno, "unknown line type '" + tag + "'");
    }
    if (n < 0)
        throw input_error("missing 'p edge <n> <m>' line");
    return Graph(n, edges);
}

void write_dimacs(std::ostream& out, const Graph& g)
{
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << "e " << (u + 1) << ' ' << (v + 1) << '\n';
}

Graph read_edge_list(std::istream& in)
{
    std::vector<Edge> edges;
    int max_id = -1;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        int u, v;
        if (!(ls >> u))
            continue; // blank or comment-only
        if (!(ls >> v))
            fail_line(lineno, "expected 'u v'");
        std::string extra;
        if (ls >> extra)
            fail_line(lineno, "trailing token '" + extra + "'");
        if (u < 0 || v < 0)
            fail_line(lineno, "negative vertex id");
        if (u == v)
            fail_line(lineno, "self-loop at vertex " + std::to_string(u));
        edges.emplace_back(u, v);
        max_id = std::max({max_id, u, v});
    }
    return Graph(max_id + 1, edges);
}

void write_edge_list(std::ostream& out, const Graph& g)
{
    out << "# n " << g.vertex_count() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

Graph read_graph_auto(std::istream& in)
{
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();
    std::istringstream first_pass(text);
    std::string line;
    while (std::getline(first_pass, line)) {
        auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos)
            continue;
        std::istringstream fresh(text);
        if (line[pos] == 'p' || line[pos] == 'c')
            return read_dimacs(fresh);
        return read_edge_list(fresh);
    }
    throw input_error("empty graph file");
}

Graph load_graph_or_fixture(const std::string& path_or_fixture)
{
    std::filesystem::path path(path_or_fixture);
    if (std::filesystem::exists(path)) {
        std::ifstream in(path);
        if (!in)
            throw input_error("cannot open '" + path_or_fixture + "'");
        return read_graph_auto(in);
    }
    for (const auto& name : fixture_names())
        if (name == path_or_fixture)
            return fixture(name);
    throw input_error("'" + path_or_fixture + "' is neither a readable file nor a fixture tag");
}

void write_dot(std::ostream& out, const Graph& g, const Colouring* col)
{
    static const char* wheel[] = {"lightblue", "lightsalmon", "palegreen", "gold", "plum",
        "lightgrey", "khaki", "aquamarine", "pink", "wheat", "lavender", "beige"};
    out << "graph g {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v << " [label=\"" << g.display_name(v) << "\"";
        if (col) {
            int c = col->assignment[v];
            out << " style=filled fillcolor=\"" << wheel[(c - 1) % 12] << "\" xlabel=\"c" << c
                << "\"";
        }
        out << "];\n";
    }
    for (auto [u, v] : g.edges())
        out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
}

Colouring read_colouring(std::istream& in, int vertex_count)
{
    Colouring col;
    col.assignment.assign(vertex_count, 0);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        int v, c;
        if (!(ls >> v))
            continue;
        if (!(ls >> c))
            fail_line(lineno, "expected 'vertex colour'");
        if (v < 0 || v >= vertex_count)
            fail_line(lineno, "vertex " + std::to_string(v) + " out of range");
        if (c < 1)
            fail_line(lineno, "colours are positive integers");
        col.assignment[v] = c;
    }
    for (int v = 0; v < vertex_count; ++v)
        if (col.assignment[v] == 0)
            throw input_error("partial colouring: vertex " + std::to_string(v) + " has no colour");
    col.finalize();
    return col;
}

void write_colouring(std::ostream& out, const Colouring& col)
{
    for (std::size_t v = 0; v < col.assignment.size(); ++v)
        out << v << ' ' << col.assignment[v] << '\n';
}

} // namespace wagon
