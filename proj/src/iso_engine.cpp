// SPDX-License-Identifier: Apache-2.0
#include "cutspec/iso_engine.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "cutspec/cycle_spectrum.hpp"
#include "cutspec/error.hpp"
#include "cutspec/line_graph.hpp"

namespace cutspec {

std::string_view to_string(InvariantMode mode)
{
    switch (mode) {
    case InvariantMode::Nonseparable: return "nonseparable";
    case InvariantMode::Tree: return "tree";
    case InvariantMode::CutOnly: return "cut-only";
    }
    return "?";
}

std::string_view to_string(Outcome o)
{
    switch (o) {
    case Outcome::NotIsomorphic: return "NotIsomorphic";
    case Outcome::IndistinguishableByInvariants: return "IndistinguishableByInvariants";
    case Outcome::ConfirmedIsomorphic: return "ConfirmedIsomorphic";
    }
    return "?";
}

std::string_view to_string(Component c)
{
    switch (c) {
    case Component::VertexCount: return "vertex-count";
    case Component::EdgeCount: return "edge-count";
    case Component::DegreeSequence: return "degree-sequence";
    case Component::Mode: return "mode";
    case Component::LevelCount: return "level-count";
    case Component::CutLevel: return "cut-level";
    case Component::CutTotal: return "cut-total";
    case Component::CycleSpectrum: return "cycle-spectrum";
    case Component::LineInvariant: return "line-invariant";
    }
    return "?";
}

std::string IntegralInvariant::rle() const
{
    std::string out = cut.total.rle();
    if (cycle)
        out += " & " + cycle->rle();
    if (line)
        out += " & " + line->rle();
    return out;
}

namespace {

InvariantMode mode_of(const Graph& g)
{
    if (is_biconnected(g))
        return InvariantMode::Nonseparable;
    if (g.is_tree())
        return InvariantMode::Tree;
    return InvariantMode::CutOnly;
}

Spectrum cut_spectrum_for(const Graph& g, InvariantMode mode, std::optional<std::size_t> cap)
{
    switch (mode) {
    case InvariantMode::Nonseparable: return build_cut_spectrum(g, cap);
    case InvariantMode::Tree: return iterate_spectrum(base_edge_cuts(g), std::nullopt);
    case InvariantMode::CutOnly: break;
    }
    return iterate_spectrum(base_edge_cuts(g), cap);
}

}  // namespace

IntegralInvariant integral_invariant(const Graph& g, const InvariantOptions& options)
{
    IntegralInvariant out;
    out.mode = mode_of(g);
    out.cut = cut_invariant_of(g, cut_spectrum_for(g, out.mode, options.level_cap));
    if (out.mode != InvariantMode::Nonseparable)
        return out;
    const auto cycles = isometric_cycles(g, options.wave);
    out.cycle = cycle_invariant_of(g, build_cycle_spectrum(g, cycles).spectrum);
    if (options.with_line_invariant)
        out.line = line_invariant_of(g, isometric_cycles(line_graph(g).graph, options.wave));
    return out;
}

CutInvariant tree_invariant(const Graph& t)
{
    if (!t.is_tree())
        throw Error(ErrorKind::NotATree, "graph with n = " + std::to_string(t.n()) + ", m = " +
                                             std::to_string(t.m()) + " is not a tree");
    return cut_invariant_of(t, iterate_spectrum(base_edge_cuts(t), std::nullopt));
}

Graph relabel(const Graph& g, std::span<const std::uint32_t> perm)
{
    if (perm.size() != g.n())
        throw Error(ErrorKind::NotAPermutation,
                    "permutation of length " + std::to_string(perm.size()) + " for n = " + std::to_string(g.n()));
    std::vector<bool> hit(g.n(), false);
    for (auto p : perm) {
        if (p == 0 || p > g.n() || hit[p - 1])
            throw Error(ErrorKind::NotAPermutation, "value " + std::to_string(p) + " repeated or out of range");
        hit[p - 1] = true;
    }
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (const auto& e : g.edges())
        edges.emplace_back(perm[index_of(e.u)], perm[index_of(e.v)]);
    return Graph::from_edges(g.n(), edges);
}

bool is_isomorphism(const Graph& g, const Graph& h, const Bijection& map)
{
    if (g.n() != h.n() || g.m() != h.m() || map.size() != g.n())
        return false;
    std::vector<bool> hit(h.n(), false);
    for (auto v : map) {
        if (raw(v) == 0 || raw(v) > h.n() || hit[index_of(v)])
            return false;
        hit[index_of(v)] = true;
    }
    return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
        return h.edge_between(map[index_of(e.u)], map[index_of(e.v)]).has_value();
    });
}

namespace {

// Backtracking matcher from g onto h. Vertices of g are placed in an order
// where each one (after the first in its component) has a placed neighbour.
class Matcher {
public:
    Matcher(const Graph& g, const Graph& h) : g_(g), h_(h), adj_h_(h.n() * h.n(), false)
    {
        for (const auto& e : h.edges()) {
            adj_h_[index_of(e.u) * h.n() + index_of(e.v)] = true;
            adj_h_[index_of(e.v) * h.n() + index_of(e.u)] = true;
        }
        std::vector<bool> placed(g.n(), false);
        while (order_.size() < g.n()) {
            std::size_t root = 0;
            for (std::size_t v = 0; v < g.n(); ++v)
                if (!placed[v] && (placed[root] || g.degree(vertex_at(v)) > g.degree(vertex_at(root))))
                    root = v;
            placed[root] = true;
            order_.push_back(root);
            for (std::size_t k = order_.size() - 1; k < order_.size(); ++k)
                for (auto y : g.neighbors(vertex_at(order_[k])))
                    if (!placed[index_of(y)]) {
                        placed[index_of(y)] = true;
                        order_.push_back(index_of(y));
                    }
        }
    }

    // Calls visit for every isomorphism (optionally with one forced pair)
    // until visit returns false.
    void run(std::optional<std::pair<std::size_t, std::size_t>> forced,
             const std::function<bool(const Bijection&)>& visit)
    {
        forced_ = forced;
        map_.assign(g_.n(), 0);
        used_.assign(h_.n(), false);
        stop_ = false;
        extend(0, visit);
    }

private:
    void extend(std::size_t depth, const std::function<bool(const Bijection&)>& visit)
    {
        if (stop_)
            return;
        if (depth == order_.size()) {
            Bijection b(g_.n());
            for (std::size_t v = 0; v < g_.n(); ++v)
                b[v] = vertex_at(map_[v]);
            stop_ = !visit(b);
            return;
        }
        const std::size_t v = order_[depth];
        for (std::size_t w = 0; w < h_.n() && !stop_; ++w) {
            if (used_[w] || g_.degree(vertex_at(v)) != h_.degree(vertex_at(w)))
                continue;
            if (forced_ && (forced_->first == v) != (forced_->second == w))
                continue;
            if (!consistent(depth, v, w))
                continue;
            used_[w] = true;
            map_[v] = w;
            extend(depth + 1, visit);
            used_[w] = false;
        }
    }

    bool consistent(std::size_t depth, std::size_t v, std::size_t w) const
    {
        for (std::size_t k = 0; k < depth; ++k) {
            const std::size_t u = order_[k];
            const bool in_g = g_.edge_between(vertex_at(u), vertex_at(v)).has_value();
            if (in_g != adj_h_[map_[u] * h_.n() + w])
                return false;
        }
        return true;
    }

    const Graph& g_;
    const Graph& h_;
    std::vector<bool> adj_h_;
    std::vector<std::size_t> order_;
    std::vector<std::size_t> map_;
    std::vector<bool> used_;
    std::optional<std::pair<std::size_t, std::size_t>> forced_;
    bool stop_ = false;
};

std::vector<std::size_t> sorted_degrees(const Graph& g)
{
    auto d = g.degrees();
    std::sort(d.begin(), d.end());
    return d;
}

void check_limit(const Graph& g, std::size_t limit)
{
    if (g.n() > limit)
        throw Error(ErrorKind::LimitExceeded,
                    "n = " + std::to_string(g.n()) + " exceeds brute-force limit " + std::to_string(limit));
}

}  // namespace

std::optional<Bijection> brute_force_isomorphism(const Graph& g, const Graph& h, std::size_t limit)
{
    check_limit(g, limit);
    check_limit(h, limit);
    if (g.n() != h.n() || g.m() != h.m() || sorted_degrees(g) != sorted_degrees(h))
        return std::nullopt;
    std::optional<Bijection> found;
    Matcher(g, h).run(std::nullopt, [&](const Bijection& b) {
        found = b;
        return false;
    });
    return found;
}

std::vector<std::vector<VertexId>> automorphism_orbits(const Graph& g, std::size_t limit)
{
    check_limit(g, limit);
    std::vector<std::size_t> parent(g.n());
    std::iota(parent.begin(), parent.end(), 0);
    const auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    Matcher matcher(g, g);
    for (std::size_t v = 0; v < g.n(); ++v)
        for (std::size_t w = v + 1; w < g.n(); ++w) {
            if (find(v) == find(w) || g.degree(vertex_at(v)) != g.degree(vertex_at(w)))
                continue;
            matcher.run(std::make_pair(v, w), [&](const Bijection& b) {
                for (std::size_t x = 0; x < g.n(); ++x) {
                    const auto a = find(x);
                    const auto c = find(index_of(b[x]));
                    if (a != c)
                        parent[a] = c;
                }
                return false;
            });
        }
    std::map<std::size_t, std::vector<VertexId>> groups;
    for (std::size_t v = 0; v < g.n(); ++v)
        groups[find(v)].push_back(vertex_at(v));
    std::vector<std::vector<VertexId>> out;
    for (auto& [root, members] : groups)
        out.push_back(std::move(members));
    std::sort(out.begin(), out.end());
    return out;
}

OrbitPartition vertex_orbit_partition(const Graph& g, const InvariantOptions& options)
{
    const auto mode = mode_of(g);
    const auto weights = spectrum_edge_weights(cut_spectrum_for(g, mode, options.level_cap));
    Cortege paired = weights.per_level.front();
    if (weights.per_level.size() > 1)
        for (std::size_t i = 0; i < g.m(); ++i)
            paired[i] += weights.per_level[1][i];

    std::vector<Cortege> layers{vertex_weights(g, paired), vertex_weights(g, weights.total)};
    if (mode == InvariantMode::Nonseparable) {
        const auto cycles = isometric_cycles(g, options.wave);
        const auto cw = spectrum_edge_weights(build_cycle_spectrum(g, cycles).spectrum);
        layers.push_back(vertex_weights(g, cw.total));
        if (options.with_line_invariant) {
            Cortege lw(g.m(), 0);
            for (const auto& lc : isometric_cycles(line_graph(g).graph, options.wave))
                for (auto v : lc.vertices())
                    ++lw[index_of(v)];
            layers.push_back(vertex_weights(g, lw));
        }
    }

    std::map<std::vector<std::uint64_t>, std::vector<VertexId>> groups;
    for (std::size_t v = 0; v < g.n(); ++v) {
        std::vector<std::uint64_t> sig;
        for (const auto& layer : layers)
            sig.push_back(layer[v]);
        groups[sig].push_back(vertex_at(v));
    }
    OrbitPartition out;
    for (auto& [sig, members] : groups)
        out.classes.push_back({std::move(members), sig});
    std::sort(out.classes.begin(), out.classes.end(),
              [](const VertexClass& a, const VertexClass& b) { return a.vertices.front() < b.vertices.front(); });
    return out;
}

namespace {

std::string bare(std::string rle) { return rle.substr(1, rle.size() - 2); }

std::optional<Witness> differ(Component component, std::optional<std::size_t> level, std::string_view name,
                              const Invariant& a, const Invariant& b)
{
    if (a.edge_part != b.edge_part)
        return Witness{component, level,
                       std::string(name) + " edge weights differ: " + bare(a.edge_rle()) + " vs " + bare(b.edge_rle())};
    if (a.vertex_part != b.vertex_part)
        return Witness{component, level,
                       std::string(name) + " vertex weights differ: " + bare(a.vertex_rle()) + " vs " +
                           bare(b.vertex_rle())};
    return std::nullopt;
}

std::optional<Witness> first_difference(const IntegralInvariant& a, const IntegralInvariant& b)
{
    const auto count = [](Component c, std::string_view what, std::size_t x, std::size_t y) {
        return Witness{c, std::nullopt, std::string(what) + " differ: " + std::to_string(x) + " vs " + std::to_string(y)};
    };
    if (a.mode != b.mode)
        return Witness{Component::Mode, std::nullopt,
                       "graph kinds differ: " + std::string(to_string(a.mode)) + " vs " + std::string(to_string(b.mode))};
    if (a.level_count() != b.level_count())
        return count(Component::LevelCount, "IS level counts", a.level_count(), b.level_count());
    if (auto w = differ(Component::CutTotal, std::nullopt, "IS", a.cut.total, b.cut.total))
        return w;
    for (std::size_t l = 0; l < a.cut.per_level.size(); ++l)
        if (auto w = differ(Component::CutLevel, l, "IS level " + std::to_string(l), a.cut.per_level[l],
                            b.cut.per_level[l]))
            return w;
    if (a.cycle && b.cycle)
        if (auto w = differ(Component::CycleSpectrum, std::nullopt, "IC", *a.cycle, *b.cycle))
            return w;
    if (a.line && b.line)
        if (auto w = differ(Component::LineInvariant, std::nullopt, "IL", *a.line, *b.line))
            return w;
    return std::nullopt;
}

}  // namespace

Verdict compare_graphs(const Graph& g, const Graph& h, const CompareOptions& options)
{
    Verdict v;
    const auto reject = [&](Component c, std::string detail) {
        v.outcome = Outcome::NotIsomorphic;
        v.witness = Witness{c, std::nullopt, std::move(detail)};
        return v;
    };
    if (g.n() != h.n())
        return reject(Component::VertexCount,
                      "vertex counts differ: " + std::to_string(g.n()) + " vs " + std::to_string(h.n()));
    if (g.m() != h.m())
        return reject(Component::EdgeCount,
                      "edge counts differ: " + std::to_string(g.m()) + " vs " + std::to_string(h.m()));
    if (sorted_degrees(g) != sorted_degrees(h))
        return reject(Component::DegreeSequence, "degree multisets differ");

    v.first = integral_invariant(g, options.invariants);
    v.second = integral_invariant(h, options.invariants);
    if (auto w = first_difference(v.first, v.second)) {
        v.outcome = Outcome::NotIsomorphic;
        v.witness = std::move(w);
        return v;
    }
    v.outcome = Outcome::IndistinguishableByInvariants;
    if (g.n() <= options.brute_force_limit) {
        v.bijection = brute_force_isomorphism(g, h, options.brute_force_limit);
        if (v.bijection && is_isomorphism(g, h, *v.bijection))
            v.outcome = Outcome::ConfirmedIsomorphic;
    }
    return v;
}

}  // namespace cutspec
