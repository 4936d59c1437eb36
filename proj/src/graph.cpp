// SPDX-License-Identifier: Apache-2.0
#include "cutspec/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

#include "cutspec/error.hpp"

namespace cutspec {

namespace {

using Pair = std::pair<std::uint32_t, std::uint32_t>;

std::string vname(std::uint32_t v) { return "v" + std::to_string(v); }

}  // namespace

Graph Graph::from_adjacency(std::size_t n, const std::vector<std::vector<std::uint32_t>>& adjacency)
{
    if (adjacency.size() != n)
        throw Error(ErrorKind::VertexOutOfRange,
                    "expected " + std::to_string(n) + " neighbour lists, got " +
                        std::to_string(adjacency.size()));

    std::vector<std::set<std::uint32_t>> sets(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto v = static_cast<std::uint32_t>(i + 1);
        for (auto w : adjacency[i]) {
            if (w < 1 || w > n)
                throw Error(ErrorKind::VertexOutOfRange, vname(w) + " in list of " + vname(v));
            if (w == v)
                throw Error(ErrorKind::LoopFound, "loop at " + vname(v));
            if (!sets[i].insert(w).second)
                throw Error(ErrorKind::DuplicateNeighbor, vname(w) + " repeated in list of " + vname(v));
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        const auto v = static_cast<std::uint32_t>(i + 1);
        for (auto w : sets[i])
            if (!sets[w - 1].contains(v))
                throw Error(ErrorKind::AsymmetricAdjacency,
                            vname(w) + " listed by " + vname(v) + " but not the reverse");
    }

    Graph g;
    g.adjacency_.resize(n);
    g.incident_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto v = static_cast<std::uint32_t>(i + 1);
        for (auto w : sets[i])
            if (v < w)
                g.edges_.push_back({static_cast<VertexId>(v), static_cast<VertexId>(w)});
    }
    // The scan above already yields lexicographic order.
    for (std::size_t k = 0; k < g.edges_.size(); ++k) {
        const auto [u, v] = g.edges_[k];
        g.adjacency_[index_of(u)].push_back(v);
        g.adjacency_[index_of(v)].push_back(u);
        g.incident_[index_of(u)].push_back(edge_at(k));
        g.incident_[index_of(v)].push_back(edge_at(k));
    }
    // Neighbours below v arrive first (ordered by their own id), then those
    // above it, so both lists are already sorted and parallel.
    return g;
}

Graph Graph::from_edges(std::size_t n, std::span<const Pair> edges)
{
    std::vector<std::vector<std::uint32_t>> adj(n);
    std::set<Pair> seen;
    for (auto [a, b] : edges) {
        if (a < 1 || a > n || b < 1 || b > n)
            throw Error(ErrorKind::VertexOutOfRange,
                        "edge (" + std::to_string(a) + "," + std::to_string(b) + ") with n=" +
                            std::to_string(n));
        if (a == b)
            throw Error(ErrorKind::LoopFound, "loop at " + vname(a));
        const Pair key{std::min(a, b), std::max(a, b)};
        if (!seen.insert(key).second)
            throw Error(ErrorKind::DuplicateEdge,
                        "edge (" + std::to_string(key.first) + "," + std::to_string(key.second) +
                            ") given twice");
        adj[a - 1].push_back(b);
        adj[b - 1].push_back(a);
    }
    return from_adjacency(n, adj);
}

Graph Graph::from_edges(std::size_t n, std::initializer_list<Pair> edges)
{
    return from_edges(n, std::span<const Pair>(edges.begin(), edges.size()));
}

void Graph::check_vertex(VertexId v) const
{
    if (raw(v) < 1 || raw(v) > n())
        throw Error(ErrorKind::VertexOutOfRange, vname(raw(v)) + " with n=" + std::to_string(n()));
}

const Edge& Graph::edge(EdgeId e) const
{
    if (raw(e) < 1 || raw(e) > m())
        throw Error(ErrorKind::LengthMismatch, "edge id " + std::to_string(raw(e)));
    return edges_[index_of(e)];
}

std::span<const VertexId> Graph::neighbors(VertexId v) const
{
    check_vertex(v);
    return adjacency_[index_of(v)];
}

std::span<const EdgeId> Graph::incident_edges(VertexId v) const
{
    check_vertex(v);
    return incident_[index_of(v)];
}

std::vector<std::size_t> Graph::degrees() const
{
    std::vector<std::size_t> out;
    out.reserve(n());
    for (const auto& a : adjacency_)
        out.push_back(a.size());
    return out;
}

std::optional<EdgeId> Graph::edge_between(VertexId a, VertexId b) const
{
    const auto nb = neighbors(a);
    const auto it = std::lower_bound(nb.begin(), nb.end(), b);
    if (it == nb.end() || *it != b)
        return std::nullopt;
    return incident_[index_of(a)][static_cast<std::size_t>(it - nb.begin())];
}

EdgeId Graph::edge_id(std::uint32_t a, std::uint32_t b) const
{
    auto e = edge_between(static_cast<VertexId>(a), static_cast<VertexId>(b));
    if (!e)
        throw Error(ErrorKind::VertexOutOfRange,
                    "no edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
    return *e;
}

EdgeSet Graph::central_cut(VertexId v) const
{
    EdgeSet s(m());
    for (auto e : incident_edges(v))
        s.insert(e);
    return s;
}

bool Graph::is_connected() const
{
    if (n() == 0)
        return false;
    const auto d = bfs_distances(*this, VertexId{1});
    return std::all_of(d.begin(), d.end(), [](const auto& x) { return x.has_value(); });
}

std::vector<std::optional<std::uint32_t>> bfs_distances(const Graph& g, VertexId source)
{
    std::vector<std::optional<std::uint32_t>> d(g.n());
    d[index_of(source)] = 0;
    std::deque<VertexId> queue{source};
    while (!queue.empty()) {
        const auto x = queue.front();
        queue.pop_front();
        for (auto y : g.neighbors(x)) {
            if (!d[index_of(y)]) {
                d[index_of(y)] = *d[index_of(x)] + 1;
                queue.push_back(y);
            }
        }
    }
    return d;
}

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.n()), d_(g.n() * g.n(), 0)
{
    for (std::size_t s = 0; s < n_; ++s) {
        const auto row = bfs_distances(g, vertex_at(s));
        for (std::size_t t = 0; t < n_; ++t) {
            if (!row[t])
                throw Error(ErrorKind::DisconnectedGraph,
                            vname(static_cast<std::uint32_t>(s + 1)) + " cannot reach " +
                                vname(static_cast<std::uint32_t>(t + 1)));
            d_[s * n_ + t] = *row[t];
        }
    }
}

DistanceMatrix all_pairs_distances(const Graph& g) { return DistanceMatrix(g); }

namespace {

struct LowLink {
    std::vector<VertexId> articulation;
    std::vector<EdgeId> bridges;
};

LowLink lowlink(const Graph& g)
{
    const std::size_t n = g.n();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<bool> is_cut(n, false);
    LowLink out;
    int timer = 0;

    std::function<void(std::size_t, std::optional<EdgeId>)> dfs = [&](std::size_t v,
                                                                        std::optional<EdgeId> via) {
        disc[v] = low[v] = timer++;
        int children = 0;
        const auto nb = g.neighbors(vertex_at(v));
        const auto inc = g.incident_edges(vertex_at(v));
        for (std::size_t k = 0; k < nb.size(); ++k) {
            const auto w = index_of(nb[k]);
            if (via && inc[k] == *via)
                continue;
            if (disc[w] >= 0) {
                low[v] = std::min(low[v], disc[w]);
                continue;
            }
            ++children;
            dfs(w, inc[k]);
            low[v] = std::min(low[v], low[w]);
            if (low[w] > disc[v])
                out.bridges.push_back(inc[k]);
            if (via && low[w] >= disc[v])
                is_cut[v] = true;
        }
        if (!via && children > 1)
            is_cut[v] = true;
    };
    if (n > 0)
        dfs(0, std::nullopt);
    for (std::size_t v = 0; v < n; ++v)
        if (is_cut[v])
            out.articulation.push_back(vertex_at(v));
    std::sort(out.bridges.begin(), out.bridges.end());
    return out;
}

}  // namespace

NonseparableReport is_nonseparable(const Graph& g)
{
    NonseparableReport r;
    r.note = "checks connectivity, articulation points, bridges and minimum degree 3; "
             "3-connectivity is not tested";
    if (g.n() < 3) {
        r.issue = SeparabilityIssue::TooSmall;
        r.detail = "fewer than three vertices";
        return r;
    }
    if (!g.is_connected()) {
        r.issue = SeparabilityIssue::Disconnected;
        r.detail = "graph is disconnected";
        return r;
    }
    const auto ll = lowlink(g);
    if (!ll.articulation.empty()) {
        r.issue = SeparabilityIssue::ArticulationPoint;
        r.detail = "articulation point " + vname(raw(ll.articulation.front()));
        return r;
    }
    if (!ll.bridges.empty()) {
        r.issue = SeparabilityIssue::Bridge;
        r.detail = "bridge e" + std::to_string(raw(ll.bridges.front()));
        return r;
    }
    for (std::size_t v = 0; v < g.n(); ++v) {
        if (g.degree(vertex_at(v)) < 3) {
            r.issue = SeparabilityIssue::LowDegree;
            r.detail = vname(static_cast<std::uint32_t>(v + 1)) + " has degree " +
                       std::to_string(g.degree(vertex_at(v)));
            return r;
        }
    }
    r.nonseparable = true;
    return r;
}

bool is_biconnected(const Graph& g)
{
    return g.n() >= 3 && g.is_connected() && lowlink(g).articulation.empty();
}

void require_biconnected(const Graph& g, const char* where)
{
    if (!is_biconnected(g))
        throw Error(ErrorKind::NotNonseparable,
                    std::string(where) + " needs a 2-connected graph: " + is_nonseparable(g).detail);
}

// ---- core reduction -------------------------------------------------------

namespace {

class Multigraph {
public:
    explicit Multigraph(const RawGraph& raw) : alive_(raw.n, true), loops_(raw.n, 0)
    {
        for (auto [a, b] : raw.edges) {
            if (a < 1 || a > raw.n || b < 1 || b > raw.n)
                throw Error(ErrorKind::VertexOutOfRange, "raw edge endpoint out of range");
            if (a == b)
                ++loops_[a - 1];
            else
                ++mult_[key(a - 1, b - 1)];
        }
    }

    [[nodiscard]] std::size_t size() const { return alive_.size(); }
    [[nodiscard]] bool alive(std::size_t v) const { return alive_[v]; }

    bool drop_loops()
    {
        bool changed = false;
        for (auto& l : loops_) {
            changed |= l != 0;
            l = 0;
        }
        return changed;
    }

    bool collapse_parallels()
    {
        bool changed = false;
        for (auto& [k, c] : mult_) {
            changed |= c > 1;
            c = 1;
        }
        return changed;
    }

    bool drop_pendants(const std::vector<std::size_t>& scan)
    {
        bool changed = false;
        for (auto v : scan) {
            if (!alive_[v] || degree(v) != 1)
                continue;
            for (auto it = mult_.begin(); it != mult_.end(); ++it) {
                if (it->first.first == v || it->first.second == v) {
                    mult_.erase(it);
                    break;
                }
            }
            alive_[v] = false;
            changed = true;
        }
        return changed;
    }

    bool suppress_degree_two(const std::vector<std::size_t>& scan)
    {
        bool changed = false;
        for (auto v : scan) {
            if (!alive_[v] || loops_[v] != 0 || degree(v) != 2)
                continue;
            const auto nb = neighbours(v);
            if (nb.size() != 2)
                continue;  // a doubled edge, left for the parallel rule
            const auto [a, b] = std::pair{nb[0], nb[1]};
            if (mult_.contains(key(a, b)))
                continue;
            mult_.erase(key(v, a));
            mult_.erase(key(v, b));
            mult_[key(a, b)] = 1;
            alive_[v] = false;
            changed = true;
        }
        return changed;
    }

    [[nodiscard]] std::size_t degree(std::size_t v) const
    {
        std::size_t d = 2 * loops_[v];
        for (const auto& [k, c] : mult_)
            if (k.first == v || k.second == v)
                d += static_cast<std::size_t>(c);
        return d;
    }

    [[nodiscard]] std::vector<std::size_t> neighbours(std::size_t v) const
    {
        std::vector<std::size_t> out;
        for (const auto& [k, c] : mult_) {
            if (c == 0)
                continue;
            if (k.first == v)
                out.push_back(k.second);
            else if (k.second == v)
                out.push_back(k.first);
        }
        return out;
    }

    [[nodiscard]] const std::map<std::pair<std::size_t, std::size_t>, int>& edges() const
    {
        return mult_;
    }

private:
    static std::pair<std::size_t, std::size_t> key(std::size_t a, std::size_t b)
    {
        return {std::min(a, b), std::max(a, b)};
    }

    std::vector<bool> alive_;
    std::vector<int> loops_;
    std::map<std::pair<std::size_t, std::size_t>, int> mult_;
};

}  // namespace

Core reduce_to_core(const RawGraph& raw, const ReductionOptions& options)
{
    Multigraph mg(raw);
    std::vector<std::size_t> scan(raw.n);
    for (std::size_t i = 0; i < raw.n; ++i)
        scan[i] = options.reverse_scan ? raw.n - 1 - i : i;

    for (bool changed = true; changed;) {
        changed = false;
        for (auto rule : options.rules) {
            switch (rule) {
            case ReductionRule::Loops: changed |= mg.drop_loops(); break;
            case ReductionRule::Parallels: changed |= mg.collapse_parallels(); break;
            case ReductionRule::Pendants: changed |= mg.drop_pendants(scan); break;
            case ReductionRule::Suppression: changed |= mg.suppress_degree_two(scan); break;
            }
        }
    }

    // Components over surviving edges.
    std::vector<int> comp(raw.n, -1);
    std::vector<std::vector<std::size_t>> members;
    std::vector<std::vector<std::size_t>> adj(raw.n);
    for (const auto& [k, c] : mg.edges()) {
        adj[k.first].push_back(k.second);
        adj[k.second].push_back(k.first);
    }
    for (std::size_t s = 0; s < raw.n; ++s) {
        if (comp[s] >= 0 || adj[s].empty())
            continue;
        const int id = static_cast<int>(members.size());
        members.emplace_back();
        std::deque<std::size_t> q{s};
        comp[s] = id;
        while (!q.empty()) {
            auto x = q.front();
            q.pop_front();
            members.back().push_back(x);
            for (auto y : adj[x])
                if (comp[y] < 0) {
                    comp[y] = id;
                    q.push_back(y);
                }
        }
    }
    if (members.empty())
        throw Error(ErrorKind::EmptyCore, "reduction removed every edge");

    auto edge_count = [&](int id) {
        std::size_t c = 0;
        for (const auto& [k, mult] : mg.edges())
            c += comp[k.first] == id ? 1 : 0;
        return c;
    };
    int best = 0;
    for (int id = 1; id < static_cast<int>(members.size()); ++id) {
        const auto a = members[static_cast<std::size_t>(id)].size();
        const auto b = members[static_cast<std::size_t>(best)].size();
        if (a > b || (a == b && edge_count(id) > edge_count(best)))
            best = id;
    }

    auto verts = members[static_cast<std::size_t>(best)];
    std::sort(verts.begin(), verts.end());
    std::vector<std::uint32_t> renumber(raw.n, 0);
    for (std::size_t i = 0; i < verts.size(); ++i)
        renumber[verts[i]] = static_cast<std::uint32_t>(i + 1);
    std::vector<Pair> edges;
    for (const auto& [k, c] : mg.edges())
        if (comp[k.first] == best)
            edges.emplace_back(renumber[k.first], renumber[k.second]);

    Core core{Graph::from_edges(verts.size(), edges), {}, false};
    for (auto v : verts)
        core.original.push_back(vertex_at(v));
    const auto deg = core.graph.degrees();
    core.meets_degree_floor = std::all_of(deg.begin(), deg.end(), [](auto d) { return d >= 3; });
    return core;
}

}  // namespace cutspec
