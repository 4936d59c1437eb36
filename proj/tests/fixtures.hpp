// SPDX-License-Identifier: Apache-2.0
// Shared graphs and oracles for the unit, property and acceptance tests.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cutspec/edge_set.hpp"
#include "cutspec/graph.hpp"

namespace fixtures {

using cutspec::EdgeSet;
using cutspec::Graph;
using EdgeList = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

inline Graph make(std::size_t n, const EdgeList& edges) { return Graph::from_edges(n, edges); }

inline Graph from_adjacency(const std::vector<std::vector<std::uint32_t>>& adj)
{
    return Graph::from_adjacency(adj.size(), adj);
}

inline EdgeSet set_of(const Graph& g, std::initializer_list<std::uint32_t> ids) { return EdgeSet::of(g.m(), ids); }

// Six vertices, eleven edges; the running example for both spectra.
inline Graph g2()
{
    return make(6, {{1, 2}, {1, 4}, {1, 6}, {2, 3}, {2, 4}, {2, 6}, {3, 4}, {3, 5}, {3, 6}, {4, 5}, {5, 6}});
}

// Seven vertices; hub 7 joined to everything, plus a few rim chords.
inline Graph g6()
{
    return make(7, {{1, 6}, {5, 6}, {6, 7}, {5, 7}, {1, 7}, {2, 7}, {3, 7}, {4, 7}, {4, 5}, {3, 4}, {2, 3}, {1, 2}, {1, 4}});
}

// Endpoints of the thirteen edges of g6() in the numbering used by the
// worked example, which lists edges in a hand-picked order.
inline const EdgeList& g6_reference_edges()
{
    static const EdgeList e{{1, 6}, {5, 6}, {6, 7}, {5, 7}, {1, 7}, {2, 7}, {3, 7},
                            {4, 7}, {4, 5}, {3, 4}, {2, 3}, {1, 2}, {1, 4}};
    return e;
}

inline EdgeSet g6_reference_set(const Graph& g, std::initializer_list<std::uint32_t> reference_ids)
{
    EdgeSet s(g.m());
    for (auto r : reference_ids) {
        const auto& [a, b] = g6_reference_edges()[r - 1];
        s.insert(g.edge_id(a, b));
    }
    return s;
}

inline Graph g8() { return make(5, {{1, 2}, {1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 4}, {4, 5}}); }

inline Graph petersen()
{
    return from_adjacency({{2, 5, 6}, {1, 3, 7}, {2, 4, 8}, {3, 5, 9}, {1, 4, 10},
                           {1, 8, 9}, {2, 9, 10}, {3, 6, 10}, {4, 6, 7}, {5, 7, 8}});
}

inline Graph complete(std::size_t n)
{
    EdgeList e;
    for (std::uint32_t a = 1; a <= n; ++a)
        for (std::uint32_t b = a + 1; b <= n; ++b)
            e.emplace_back(a, b);
    return make(n, e);
}

inline Graph cycle(std::size_t n)
{
    EdgeList e;
    for (std::uint32_t a = 1; a <= n; ++a)
        e.emplace_back(a, a % n + 1);
    return make(n, e);
}

// K5 with some canonical edge ids deleted.
inline Graph k5_without(std::initializer_list<std::uint32_t> ids)
{
    const auto k5 = complete(5);
    EdgeList e;
    for (std::uint32_t i = 1; i <= k5.m(); ++i)
        if (std::find(ids.begin(), ids.end(), i) == ids.end()) {
            const auto& ed = k5.edge(static_cast<cutspec::EdgeId>(i));
            e.emplace_back(cutspec::raw(ed.u), cutspec::raw(ed.v));
        }
    return make(5, e);
}

inline Graph example_ten()
{
    return from_adjacency({{2, 6, 7, 10}, {1, 3, 5, 7}, {2, 4, 5, 9}, {3, 5, 6, 7, 9}, {2, 3, 4, 6, 8, 10},
                           {1, 4, 5, 7, 9}, {1, 2, 4, 6, 8}, {5, 7, 9, 10}, {3, 4, 6, 8, 10}, {1, 5, 8, 9}});
}

inline Graph example_twelve()
{
    return from_adjacency({{2, 3, 4, 5, 6, 7, 8, 9, 10, 12},
                           {1, 3, 4, 7, 8, 12},
                           {1, 2, 4, 6, 7, 8, 10},
                           {1, 2, 3, 6, 11},
                           {1, 8, 9},
                           {1, 3, 4, 7, 9, 12},
                           {1, 2, 3, 6, 8, 9, 11, 12},
                           {1, 2, 3, 5, 7, 10, 11},
                           {1, 5, 6, 7, 10},
                           {1, 3, 8, 9, 12},
                           {4, 7, 8},
                           {1, 2, 6, 7, 10}});
}

inline Graph g15()
{
    return make(16, {{1, 2},   {1, 6},   {1, 7},   {2, 3},   {2, 7},   {2, 9},   {3, 4},   {3, 7},
                     {3, 8},   {3, 14},  {4, 5},   {4, 8},   {5, 6},   {5, 7},   {5, 8},   {6, 7},
                     {9, 10},  {9, 14},  {9, 15},  {9, 16},  {10, 11}, {10, 15}, {11, 12}, {11, 15},
                     {11, 16}, {12, 13}, {12, 16}, {13, 14}, {13, 16}, {14, 16}});
}

inline Graph g16()
{
    return make(16, {{1, 2},   {1, 7},   {1, 8},   {1, 12},  {2, 3},   {2, 4},   {2, 8},   {2, 13},
                     {3, 4},   {3, 5},   {4, 5},   {5, 6},   {5, 8},   {6, 7},   {6, 8},   {7, 8},
                     {9, 10},  {9, 14},  {9, 15},  {9, 16},  {10, 11}, {10, 16}, {11, 12}, {11, 16},
                     {12, 13}, {12, 16}, {13, 14}, {13, 15}, {13, 16}, {14, 15}});
}

inline Graph g17() { return make(6, {{1, 2}, {1, 4}, {1, 6}, {2, 3}, {2, 5}, {3, 4}, {3, 5}, {3, 6}, {4, 5}, {5, 6}}); }

inline Graph g18()
{
    return make(6, {{1, 2}, {1, 3}, {1, 5}, {1, 6}, {2, 4}, {2, 5}, {2, 6}, {3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6}});
}

inline Graph g20()
{
    return make(12, {{1, 7},  {1, 9},  {1, 10}, {1, 11}, {2, 8},  {2, 9},  {2, 10}, {2, 12},
                     {3, 6},  {3, 7},  {3, 8},  {3, 9},  {3, 10}, {4, 6},  {4, 7},  {4, 10},
                     {4, 11}, {4, 12}, {5, 6},  {5, 8},  {5, 9},  {5, 11}, {5, 12}});
}

inline Graph g23()
{
    return make(10, {{1, 2}, {1, 3}, {1, 5}, {2, 3}, {2, 4}, {3, 4}, {4, 5}, {4, 6},
                     {5, 7}, {6, 7}, {6, 8}, {6, 9}, {7, 10}, {8, 9}, {8, 10}, {9, 10}});
}

inline Graph prism() { return make(6, {{1, 2}, {1, 4}, {1, 6}, {2, 3}, {2, 6}, {3, 4}, {3, 5}, {4, 5}, {5, 6}}); }

inline Graph g28()
{
    return make(8, {{1, 2}, {1, 3}, {1, 6}, {2, 3}, {2, 4}, {2, 7}, {2, 8}, {3, 4},
                    {3, 6}, {4, 5}, {5, 6}, {5, 7}, {6, 7}, {6, 8}, {7, 8}});
}

inline Graph lattice()
{
    return make(16, {{1, 2},   {1, 3},   {1, 4},   {1, 5},   {1, 9},   {1, 13},  {2, 3},   {2, 4},
                     {2, 6},   {2, 10},  {2, 14},  {3, 4},   {3, 7},   {3, 11},  {3, 15},  {4, 8},
                     {4, 12},  {4, 16},  {5, 6},   {5, 7},   {5, 8},   {5, 9},   {5, 13},  {6, 7},
                     {6, 8},   {6, 10},  {6, 14},  {7, 8},   {7, 11},  {7, 15},  {8, 12},  {8, 16},
                     {9, 10},  {9, 11},  {9, 12},  {9, 13},  {10, 11}, {10, 12}, {10, 14}, {11, 12},
                     {11, 15}, {12, 16}, {13, 14}, {13, 15}, {13, 16}, {14, 15}, {14, 16}, {15, 16}});
}

inline Graph shrikhande()
{
    return make(16, {{1, 2},   {1, 4},   {1, 5},   {1, 6},   {1, 13},  {1, 16},  {2, 3},   {2, 6},
                     {2, 7},   {2, 13},  {2, 14},  {3, 4},   {3, 7},   {3, 8},   {3, 14},  {3, 15},
                     {4, 5},   {4, 8},   {4, 15},  {4, 16},  {5, 6},   {5, 8},   {5, 9},   {5, 10},
                     {6, 7},   {6, 10},  {6, 11},  {7, 8},   {7, 11},  {7, 12},  {8, 9},   {8, 12},
                     {9, 10},  {9, 12},  {9, 13},  {9, 14},  {10, 11}, {10, 14}, {10, 15}, {11, 12},
                     {11, 15}, {11, 16}, {12, 13}, {12, 16}, {13, 14}, {13, 16}, {14, 15}, {15, 16}});
}

// Line graph of the cube and a cospectral mate.
inline Graph cube_line()
{
    return make(12, {{1, 2}, {1, 4},  {1, 5},   {1, 9},   {2, 7},  {2, 9},   {2, 11}, {3, 4},
                     {3, 8}, {3, 10}, {3, 12},  {4, 5},   {4, 8},  {5, 10},  {5, 11}, {6, 7},
                     {6, 8}, {6, 9},  {6, 12},  {7, 11},  {7, 12}, {8, 9},   {10, 11}, {10, 12}});
}

inline Graph cube_line_mate()
{
    return make(12, {{1, 7},  {1, 8},  {1, 10}, {1, 12}, {2, 3},  {2, 6},   {2, 7},   {2, 9},
                     {3, 5},  {3, 7},  {3, 9},  {4, 5},  {4, 6},  {4, 8},   {4, 11},  {5, 6},
                     {5, 10}, {6, 10}, {7, 12}, {8, 9},  {8, 11}, {9, 11},  {10, 12}, {11, 12}});
}

inline Graph tree_a() { return make(7, {{1, 2}, {2, 3}, {2, 4}, {4, 5}, {5, 6}, {5, 7}}); }
inline Graph tree_b() { return make(7, {{1, 2}, {2, 3}, {2, 4}, {4, 5}, {4, 6}, {6, 7}}); }

// Two labelings of the prism.
inline Graph prism_a() { return make(6, {{1, 2}, {1, 4}, {1, 6}, {2, 5}, {2, 6}, {3, 4}, {3, 5}, {3, 6}, {4, 5}}); }
inline Graph prism_b() { return make(6, {{1, 2}, {1, 3}, {1, 5}, {2, 4}, {2, 6}, {3, 4}, {3, 5}, {4, 6}, {5, 6}}); }

inline Graph bipartite(std::initializer_list<std::uint32_t> left, std::size_t n)
{
    EdgeList e;
    for (std::uint32_t a = 1; a <= n; ++a)
        for (std::uint32_t b = a + 1; b <= n; ++b) {
            const bool la = std::find(left.begin(), left.end(), a) != left.end();
            const bool lb = std::find(left.begin(), left.end(), b) != left.end();
            if (la != lb)
                e.emplace_back(a, b);
        }
    return make(n, e);
}

inline Graph k33_a() { return bipartite({1, 2, 3}, 6); }
inline Graph k33_b() { return bipartite({1, 3, 5}, 6); }
inline Graph k44_a() { return bipartite({1, 2, 3, 4}, 8); }
inline Graph k44_b() { return bipartite({1, 3, 5, 7}, 8); }
inline Graph k44_c() { return bipartite({1, 2, 7, 8}, 8); }

// Three labelings of one 4-regular graph on eight vertices.
inline Graph quartic_a()
{
    return make(8, {{1, 2}, {1, 5}, {1, 6}, {1, 7}, {2, 3}, {2, 5}, {2, 6}, {3, 4},
                    {3, 7}, {3, 8}, {4, 5}, {4, 7}, {4, 8}, {5, 6}, {6, 8}, {7, 8}});
}
inline Graph quartic_b()
{
    return make(8, {{1, 3}, {1, 4}, {1, 5}, {1, 8}, {2, 4}, {2, 5}, {2, 6}, {2, 7},
                    {3, 4}, {3, 6}, {3, 8}, {4, 8}, {5, 6}, {5, 7}, {6, 7}, {7, 8}});
}
inline Graph quartic_c()
{
    return make(8, {{1, 2}, {1, 3}, {1, 4}, {1, 7}, {2, 4}, {2, 7}, {2, 8}, {3, 5},
                    {3, 6}, {3, 8}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {5, 8}, {6, 8}});
}

struct Named {
    std::string name;
    Graph graph;
};

// Every biconnected fixture, for sweeps.
inline std::vector<Named> biconnected_fixtures()
{
    return {{"g2", g2()},
            {"g6", g6()},
            {"g8", g8()},
            {"petersen", petersen()},
            {"k4", complete(4)},
            {"k5", complete(5)},
            {"k5-e10", k5_without({10})},
            {"k5-e10-e2", k5_without({10, 2})},
            {"k5-e10-e2-e7", k5_without({10, 2, 7})},
            {"example-ten", example_ten()},
            {"example-twelve", example_twelve()},
            {"g15", g15()},
            {"g16", g16()},
            {"g17", g17()},
            {"g18", g18()},
            {"g20", g20()},
            {"g23", g23()},
            {"prism", prism()},
            {"g28", g28()},
            {"lattice", lattice()},
            {"shrikhande", shrikhande()},
            {"cube-line", cube_line()},
            {"cube-line-mate", cube_line_mate()},
            {"prism-a", prism_a()},
            {"prism-b", prism_b()},
            {"k33-a", k33_a()},
            {"k33-b", k33_b()},
            {"k44-a", k44_a()},
            {"quartic-a", quartic_a()},
            {"quartic-b", quartic_b()}};
}

// Random biconnected graph on n vertices: a cycle grown by random ears, then
// extra chords until m edges.
inline Graph random_biconnected(std::mt19937_64& rng, std::size_t n, std::size_t extra_chords)
{
    std::uniform_int_distribution<std::size_t> first(3, std::max<std::size_t>(3, n / 2));
    const std::size_t start = std::min(first(rng), n);
    std::set<std::pair<std::uint32_t, std::uint32_t>> edges;
    const auto add = [&](std::uint32_t a, std::uint32_t b) { edges.emplace(std::min(a, b), std::max(a, b)); };
    for (std::uint32_t v = 1; v <= start; ++v)
        add(v, static_cast<std::uint32_t>(v % start + 1));
    std::uint32_t placed = static_cast<std::uint32_t>(start);
    while (placed < n) {
        std::uniform_int_distribution<std::uint32_t> pick(1, placed);
        const std::uint32_t a = pick(rng);
        std::uint32_t b = pick(rng);
        while (b == a)
            b = pick(rng);
        std::uniform_int_distribution<std::size_t> len(1, std::min<std::size_t>(3, n - placed));
        const std::size_t inner = len(rng);
        std::uint32_t prev = a;
        for (std::size_t k = 0; k < inner; ++k) {
            add(prev, ++placed);
            prev = placed;
        }
        add(prev, b);
    }
    std::uniform_int_distribution<std::uint32_t> any(1, static_cast<std::uint32_t>(n));
    for (std::size_t tries = 0; tries < extra_chords * 10 && extra_chords > 0; ++tries) {
        const auto a = any(rng);
        const auto b = any(rng);
        if (a == b || edges.contains({std::min(a, b), std::max(a, b)}))
            continue;
        add(a, b);
        if (--extra_chords == 0)
            break;
    }
    return make(n, EdgeList(edges.begin(), edges.end()));
}

inline std::vector<std::uint32_t> random_permutation(std::mt19937_64& rng, std::size_t n)
{
    std::vector<std::uint32_t> p(n);
    for (std::size_t i = 0; i < n; ++i)
        p[i] = static_cast<std::uint32_t>(i + 1);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

// Every simple cycle with at most max_length edges, by depth-first search
// from the smallest vertex of each cycle.
inline std::vector<EdgeSet> simple_cycles(const Graph& g, std::size_t max_length)
{
    using cutspec::VertexId;
    std::set<std::vector<cutspec::EdgeId>> seen;
    std::vector<EdgeSet> out;
    std::vector<bool> on_path(g.n(), false);
    std::vector<cutspec::EdgeId> path;
    std::function<void(VertexId, VertexId)> walk = [&](VertexId root, VertexId v) {
        const auto nb = g.neighbors(v);
        const auto inc = g.incident_edges(v);
        for (std::size_t k = 0; k < nb.size(); ++k) {
            const auto w = nb[k];
            if (w == root && path.size() >= 2) {
                path.push_back(inc[k]);
                auto key = path;
                std::sort(key.begin(), key.end());
                if (seen.insert(key).second)
                    out.push_back(EdgeSet::of(g.m(), key));
                path.pop_back();
                continue;
            }
            if (w < root || on_path[cutspec::index_of(w)] || path.size() + 1 >= max_length)
                continue;
            on_path[cutspec::index_of(w)] = true;
            path.push_back(inc[k]);
            walk(root, w);
            path.pop_back();
            on_path[cutspec::index_of(w)] = false;
        }
    };
    for (std::size_t r = 0; r < g.n(); ++r) {
        const auto root = cutspec::vertex_at(r);
        on_path[r] = true;
        walk(root, root);
        on_path[r] = false;
    }
    return out;
}

}  // namespace fixtures
