#include "wagon/exact.hpp"

#include "wagon/errors.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace wagon {

namespace {

// Tomita-style max-clique search: candidates are greedily colour-sorted and
// branched in reverse colour order, pruning when |R| + colour <= best.
struct CliqueSearch {
    const Graph& g;
    int best = 0;
    int stop_at; // early exit once best >= stop_at (decision mode); INT_MAX otherwise

    CliqueSearch(const Graph& graph, int stop = std::numeric_limits<int>::max())
        : g(graph), stop_at(stop)
    {
    }

    void colour_sort(const Bitset& p, std::vector<int>& order, std::vector<int>& colour) const
    {
        order.clear();
        colour.clear();
        std::vector<Bitset> classes;
        p.for_each([&](int v) {
            std::size_t c = 0;
            while (c < classes.size() && classes[c].intersects(g.neighbours(v)))
                ++c;
            if (c == classes.size())
                classes.emplace_back(g.vertex_count());
            classes[c].set(v);
        });
        for (std::size_t c = 0; c < classes.size(); ++c)
            classes[c].for_each([&](int v) {
                order.push_back(v);
                colour.push_back(static_cast<int>(c) + 1);
            });
    }

    void expand(int rsize, Bitset p)
    {
        if (best >= stop_at)
            return;
        if (p.none()) {
            best = std::max(best, rsize);
            return;
        }
        std::vector<int> order, colour;
        colour_sort(p, order, colour);
        for (int idx = static_cast<int>(order.size()) - 1; idx >= 0; --idx) {
            if (rsize + colour[idx] <= best)
                return;
            int v = order[idx];
            Bitset next = p;
            next &= g.neighbours(v);
            expand(rsize + 1, next);
            if (best >= stop_at)
                return;
            p.reset(v);
        }
    }
};

Bitset full_set(int n)
{
    Bitset b(n);
    for (int v = 0; v < n; ++v)
        b.set(v);
    return b;
}

} // namespace

int clique_number(const Graph& g)
{
    if (g.vertex_count() == 0)
        return 0;
    CliqueSearch s(g);
    s.expand(0, full_set(g.vertex_count()));
    return s.best;
}

bool has_clique_of_size(const Graph& g, const Bitset& cand, int k)
{
    if (k <= 0)
        return true;
    CliqueSearch s(g, k);
    s.best = k - 1; // only improvements beyond k-1 are interesting
    s.expand(0, cand);
    return s.best >= k;
}

std::vector<int> max_clique_exact(const Graph& g)
{
    int n = g.vertex_count();
    if (n == 0)
        return {};
    int omega = clique_number(g);
    std::vector<int> clique;
    Bitset cand = full_set(n);
    int need = omega;
    for (int v = 0; v < n && need > 0; ++v) {
        if (!cand.test(v))
            continue;
        Bitset next = cand;
        next &= g.neighbours(v);
        if (need == 1 || has_clique_of_size(g, next, need - 1)) {
            clique.push_back(v);
            cand = next;
            --need;
        }
    }
    return clique;
}

void Colouring::finalize()
{
    std::set<int> distinct(assignment.begin(), assignment.end());
    colours_used = static_cast<int>(distinct.size());
}

ColouringCheck verify_colouring(const Graph& g, const Colouring& col)
{
    if (static_cast<int>(col.assignment.size()) != g.vertex_count())
        throw input_error("colouring must assign a colour to every vertex (got "
            + std::to_string(col.assignment.size()) + " of " + std::to_string(g.vertex_count())
            + ")");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (col.assignment[v] < 1)
            throw input_error("vertex " + std::to_string(v) + " has no valid colour");
    for (auto [u, v] : g.edges())
        if (col.assignment[u] == col.assignment[v])
            return {false, Edge{u, v}};
    return {true, std::nullopt};
}

Colouring dsatur_colouring(const Graph& g)
{
    int n = g.vertex_count();
    Colouring out;
    out.assignment.assign(n, 0);
    std::vector<std::set<int>> neighbour_colours(n);
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (out.assignment[v] != 0)
                continue;
            if (pick < 0)
                pick = v;
            else {
                auto sat = [&](int x) { return static_cast<int>(neighbour_colours[x].size()); };
                if (sat(v) > sat(pick) || (sat(v) == sat(pick) && g.degree(v) > g.degree(pick)))
                    pick = v;
            }
        }
        int colour = 1;
        while (neighbour_colours[pick].count(colour))
            ++colour;
        out.assignment[pick] = colour;
        g.neighbours(pick).for_each([&](int u) { neighbour_colours[u].insert(colour); });
    }
    out.finalize();
    return out;
}

namespace {

// Branch and bound over colour classes. Vertices are ordered with a maximum
// clique first (forcing distinct classes immediately), the rest by degree.
struct ChromaticSearch {
    const Graph& g;
    std::vector<int> order;
    int lb;
    int best;
    std::vector<int> best_assign; // order-indexed
    std::vector<int> assign;      // order-indexed class numbers, 1-based
    std::vector<Bitset> class_conflicts;

    explicit ChromaticSearch(const Graph& graph) : g(graph) {}

    bool run_to(int i, int used)
    {
        if (used >= best)
            return false;
        if (i == static_cast<int>(order.size())) {
            best = used;
            best_assign = assign;
            return best == lb;
        }
        int v = order[i];
        for (int c = 0; c < used; ++c) {
            if (class_conflicts[c].test(v))
                continue;
            assign[i] = c + 1;
            Bitset saved = class_conflicts[c];
            class_conflicts[c] |= g.neighbours(v);
            bool done = run_to(i + 1, used);
            class_conflicts[c] = saved;
            if (done)
                return true;
        }
        if (used + 1 < best) {
            assign[i] = used + 1;
            if (static_cast<int>(class_conflicts.size()) <= used)
                class_conflicts.emplace_back(g.vertex_count());
            Bitset saved = class_conflicts[used];
            class_conflicts[used] = g.neighbours(v);
            bool done = run_to(i + 1, used + 1);
            class_conflicts[used] = saved;
            if (done)
                return true;
        }
        return false;
    }
};

} // namespace

ExactChromatic chromatic_number_exact(const Graph& g)
{
    int n = g.vertex_count();
    if (n > kExactChromaticLimit)
        throw capability_error("chromatic_number_exact supports at most "
            + std::to_string(kExactChromaticLimit) + " vertices (got " + std::to_string(n) + ")");
    if (n == 0)
        return {0, {}};

    std::vector<int> clique = max_clique_exact(g);
    Colouring ub = dsatur_colouring(g);

    ChromaticSearch search(g);
    search.lb = static_cast<int>(clique.size());
    search.best = ub.colours_used + 1; // sentinel; any full assignment below this wins

    std::vector<char> in_clique(n, 0);
    for (int v : clique)
        in_clique[v] = 1;
    search.order = clique;
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
        if (!in_clique[v])
            rest.push_back(v);
    std::stable_sort(rest.begin(), rest.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    search.order.insert(search.order.end(), rest.begin(), rest.end());
    search.assign.assign(n, 0);

    search.run_to(0, 0);

    ExactChromatic out;
    if (search.best > ub.colours_used) {
        // DSATUR was already optimal
        out.chi = ub.colours_used;
        out.colouring = std::move(ub);
        return out;
    }
    out.chi = search.best;
    out.colouring.assignment.assign(n, 0);
    for (int i = 0; i < n; ++i)
        out.colouring.assignment[search.order[i]] = search.best_assign[i];
    out.colouring.finalize();
    return out;
}

} // namespace wagon
