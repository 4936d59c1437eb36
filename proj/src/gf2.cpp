// SPDX-License-Identifier: Apache-2.0
#include "cutspec/gf2.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>

#include "cutspec/error.hpp"

namespace cutspec {

namespace {

std::optional<std::size_t> lowest(const EdgeSet& v)
{
    const auto w = v.words();
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] != 0)
            return i * 64 + static_cast<std::size_t>(std::countr_zero(w[i]));
    return std::nullopt;
}

bool has_bit(const EdgeSet& v, std::size_t i) { return (v.words()[i / 64] >> (i % 64)) & 1U; }

}  // namespace

EdgeSet Gf2Eliminator::reduce(EdgeSet v) const
{
    if (v.width() != width_)
        throw Error(ErrorKind::LengthMismatch, "vector width differs from eliminator width");
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (has_bit(v, pivots_[i]))
            v ^= rows_[i];
    return v;
}

bool Gf2Eliminator::insert(const EdgeSet& v)
{
    EdgeSet r = reduce(v);
    const auto p = lowest(r);
    if (!p)
        return false;
    for (auto& row : rows_)
        if (has_bit(row, *p))
            row ^= r;
    const auto pos = static_cast<std::size_t>(
        std::lower_bound(pivots_.begin(), pivots_.end(), *p) - pivots_.begin());
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(r));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), *p);
    return true;
}

bool Gf2Eliminator::in_span(const EdgeSet& v) const { return reduce(v).empty(); }

std::size_t gf2_rank(std::span<const EdgeSet> vectors)
{
    if (vectors.empty())
        return 0;
    Gf2Eliminator e(vectors.front().width());
    for (const auto& v : vectors)
        e.insert(v);
    return e.rank();
}

namespace {

SpanningTreeDecomposition complete(const Graph& g, EdgeSet tree)
{
    return {tree, EdgeSet::full(g.m()) ^ tree};
}

}  // namespace

SpanningTreeDecomposition spanning_tree(const Graph& g)
{
    if (!g.is_connected())
        throw Error(ErrorKind::DisconnectedGraph, "spanning tree of a disconnected graph");
    EdgeSet tree(g.m());
    std::vector<bool> seen(g.n(), false);
    std::deque<VertexId> queue{VertexId{1}};
    seen[0] = true;
    while (!queue.empty()) {
        const auto x = queue.front();
        queue.pop_front();
        const auto nb = g.neighbors(x);
        const auto inc = g.incident_edges(x);
        for (std::size_t k = 0; k < nb.size(); ++k) {
            if (seen[index_of(nb[k])])
                continue;
            seen[index_of(nb[k])] = true;
            tree.insert(inc[k]);
            queue.push_back(nb[k]);
        }
    }
    return complete(g, tree);
}

namespace {

struct DisjointSets {
    std::vector<std::size_t> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x)
    {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent[a] = b;
        return true;
    }
};

}  // namespace

SpanningTreeDecomposition random_spanning_tree(const Graph& g, std::uint64_t seed)
{
    if (!g.is_connected())
        throw Error(ErrorKind::DisconnectedGraph, "spanning tree of a disconnected graph");
    std::vector<std::size_t> order(g.m());
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
    DisjointSets ds(g.n());
    EdgeSet tree(g.m());
    for (auto i : order) {
        const auto& e = g.edge(edge_at(i));
        if (ds.unite(index_of(e.u), index_of(e.v)))
            tree.insert(edge_at(i));
    }
    return complete(g, tree);
}

SpanningTreeDecomposition decomposition_from_tree(const Graph& g, const EdgeSet& tree_edges)
{
    if (tree_edges.width() != g.m())
        throw Error(ErrorKind::LengthMismatch, "tree edge set width differs from m");
    if (tree_edges.count() + 1 != g.n())
        throw Error(ErrorKind::NotATree, "tree must have n-1 edges");
    DisjointSets ds(g.n());
    tree_edges.for_each([&](EdgeId e) {
        const auto& ed = g.edge(e);
        if (!ds.unite(index_of(ed.u), index_of(ed.v)))
            throw Error(ErrorKind::NotATree, "tree edges contain a cycle");
    });
    return complete(g, tree_edges);
}

namespace {

// Parent pointers of the tree rooted at vertex 1.
struct RootedTree {
    std::vector<std::optional<VertexId>> parent;
    std::vector<std::optional<EdgeId>> parent_edge;
    std::vector<std::size_t> depth;
};

RootedTree root_tree(const Graph& g, const EdgeSet& tree)
{
    RootedTree rt{std::vector<std::optional<VertexId>>(g.n()),
                  std::vector<std::optional<EdgeId>>(g.n()), std::vector<std::size_t>(g.n(), 0)};
    std::vector<bool> seen(g.n(), false);
    std::deque<VertexId> queue{VertexId{1}};
    seen[0] = true;
    while (!queue.empty()) {
        const auto x = queue.front();
        queue.pop_front();
        const auto nb = g.neighbors(x);
        const auto inc = g.incident_edges(x);
        for (std::size_t k = 0; k < nb.size(); ++k) {
            const auto y = index_of(nb[k]);
            if (seen[y] || !tree.contains(inc[k]))
                continue;
            seen[y] = true;
            rt.parent[y] = x;
            rt.parent_edge[y] = inc[k];
            rt.depth[y] = rt.depth[index_of(x)] + 1;
            queue.push_back(nb[k]);
        }
    }
    return rt;
}

}  // namespace

std::vector<EdgeSet> fundamental_cycles(const Graph& g, const SpanningTreeDecomposition& t)
{
    const auto rt = root_tree(g, t.tree_edges);
    std::vector<EdgeSet> out;
    t.chords.for_each([&](EdgeId chord) {
        EdgeSet c(g.m());
        c.insert(chord);
        auto a = g.edge(chord).u;
        auto b = g.edge(chord).v;
        while (a != b) {
            if (rt.depth[index_of(a)] < rt.depth[index_of(b)])
                std::swap(a, b);
            c.insert(*rt.parent_edge[index_of(a)]);
            a = *rt.parent[index_of(a)];
        }
        out.push_back(std::move(c));
    });
    return out;
}

std::vector<EdgeSet> fundamental_cuts(const Graph& g, const SpanningTreeDecomposition& t)
{
    const auto rt = root_tree(g, t.tree_edges);
    std::vector<EdgeSet> out;
    t.tree_edges.for_each([&](EdgeId branch) {
        // Side of the cut: the subtree hanging below the branch.
        const auto& e = g.edge(branch);
        const VertexId child = rt.parent_edge[index_of(e.u)] == branch ? e.u : e.v;
        std::vector<bool> below(g.n(), false);
        for (std::size_t v = 0; v < g.n(); ++v) {
            auto x = vertex_at(v);
            while (true) {
                if (x == child) {
                    below[v] = true;
                    break;
                }
                if (!rt.parent[index_of(x)])
                    break;
                x = *rt.parent[index_of(x)];
            }
        }
        EdgeSet cut(g.m());
        for (std::size_t i = 0; i < g.m(); ++i) {
            const auto& ed = g.edge(edge_at(i));
            if (below[index_of(ed.u)] != below[index_of(ed.v)])
                cut.insert(edge_at(i));
        }
        out.push_back(std::move(cut));
    });
    return out;
}

bool is_quasicycle(const Graph& g, const EdgeSet& s)
{
    if (s.width() != g.m())
        throw Error(ErrorKind::LengthMismatch, "edge set width differs from m");
    std::vector<std::uint8_t> parity(g.n(), 0);
    s.for_each([&](EdgeId e) {
        parity[index_of(g.edge(e).u)] ^= 1;
        parity[index_of(g.edge(e).v)] ^= 1;
    });
    return std::all_of(parity.begin(), parity.end(), [](auto p) { return p == 0; });
}

bool even_intersection(const EdgeSet& c, const EdgeSet& s) { return overlap_count(c, s) % 2 == 0; }

std::size_t cycle_cut_intersection_dimension(const Graph& g)
{
    const auto t = spanning_tree(g);
    const auto cycles = fundamental_cycles(g, t);
    const auto cuts = fundamental_cuts(g, t);
    Gf2Eliminator both(g.m());
    for (const auto& c : cycles)
        both.insert(c);
    for (const auto& s : cuts)
        both.insert(s);
    return gf2_rank(cycles) + gf2_rank(cuts) - both.rank();
}

}  // namespace cutspec
