#include "wagon/fixtures.hpp"

#include "wagon/errors.hpp"

namespace wagon {

namespace {

Graph mycielski_grotzsch()
{
    // v1..v5 -> 0..4, u1..u5 -> 5..9, w -> 10
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);            // outer cycle
        edges.emplace_back(5 + i, (i + 1) % 5);        // u_i ~ v_{i+1}
        edges.emplace_back(5 + i, (i + 4) % 5);        // u_i ~ v_{i-1}
        edges.emplace_back(10, 5 + i);                 // apex
    }
    std::vector<std::string> labels
        = {"v1", "v2", "v3", "v4", "v5", "u1", "u2", "u3", "u4", "u5", "w"};
    return Graph(11, edges, std::move(labels));
}

Graph fig3_w3x4()
{
    // 0,1,2: the triangle; 3..6: row N1 (attached to 0); 7..10: row N2
    // (attached to 1). Row, vertical and crossing matchings as drawn.
    std::vector<Edge> edges = {{0, 1}, {1, 2}, {0, 2}};
    for (int p = 0; p < 4; ++p) {
        edges.emplace_back(0, 3 + p);
        edges.emplace_back(1, 7 + p);
        edges.emplace_back(3 + p, 7 + p); // vertical matching
    }
    edges.emplace_back(3, 4);
    edges.emplace_back(5, 6);
    edges.emplace_back(7, 8);
    edges.emplace_back(9, 10);
    // crossing matching: N1 positions 0,1,2,3 -> N2 positions 2,3,1,0
    edges.emplace_back(3, 9);
    edges.emplace_back(4, 10);
    edges.emplace_back(5, 8);
    edges.emplace_back(6, 7);
    std::vector<std::string> labels
        = {"1", "2", "3", "n1a", "n1b", "n1c", "n1d", "n2a", "n2b", "n2c", "n2d"};
    return Graph(11, edges, std::move(labels));
}

Graph fig5_base()
{
    // 0=BL, 1=L, 2=T, 3=R, 4=BR, 5=c
    std::vector<Edge> edges
        = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 0}, {5, 4}, {5, 2}};
    std::vector<std::string> labels = {"BL", "L", "T", "R", "BR", "c"};
    return Graph(6, edges, std::move(labels));
}

} // namespace

Graph fixture(const std::string& name)
{
    if (name == "mycielski_grotzsch")
        return mycielski_grotzsch();
    if (name == "fig3_w3x4")
        return fig3_w3x4();
    if (name == "fig5_base")
        return fig5_base();
    std::string known;
    for (const auto& f : fixture_names())
        known += (known.empty() ? "" : ", ") + f;
    throw input_error("unknown fixture '" + name + "' (known: " + known + ")");
}

std::vector<std::string> fixture_names()
{
    return {"mycielski_grotzsch", "fig3_w3x4", "fig5_base"};
}

Graph fig5_blow_up(int k)
{
    Graph g = fixture("fig5_base");
    for (int v : {1, 2, 3}) // L, T, R
        g = multiply_vertex(g, v, k);
    return g;
}

} // namespace wagon
