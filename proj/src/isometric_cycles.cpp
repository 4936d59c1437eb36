// SPDX-License-Identifier: Apache-2.0
#include "cutspec/isometric_cycles.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_set>

#include "cutspec/error.hpp"

namespace cutspec {

Cycle Cycle::from_edges(const Graph& g, EdgeSet edges)
{
    if (edges.width() != g.m())
        throw Error(ErrorKind::LengthMismatch, "cycle width differs from m");
    if (edges.count() < 3)
        throw Error(ErrorKind::NotACycle, edges.to_string() + " has fewer than three edges");
    std::vector<std::vector<VertexId>> local(g.n());
    edges.for_each([&](EdgeId e) {
        const auto& ed = g.edge(e);
        local[index_of(ed.u)].push_back(ed.v);
        local[index_of(ed.v)].push_back(ed.u);
    });
    Cycle c;
    for (std::size_t v = 0; v < g.n(); ++v) {
        if (local[v].empty())
            continue;
        if (local[v].size() != 2)
            throw Error(ErrorKind::NotACycle,
                        edges.to_string() + " has local degree " + std::to_string(local[v].size()) + " at v" +
                            std::to_string(v + 1));
        c.vertices_.push_back(vertex_at(v));
    }
    const VertexId start = c.vertices_.front();
    auto nb = local[index_of(start)];
    std::sort(nb.begin(), nb.end());
    VertexId prev = start;
    VertexId cur = nb.front();
    c.walk_.push_back(start);
    while (cur != start) {
        c.walk_.push_back(cur);
        const auto& two = local[index_of(cur)];
        const VertexId next = two[0] == prev ? two[1] : two[0];
        prev = cur;
        cur = next;
    }
    if (c.walk_.size() != c.vertices_.size())
        throw Error(ErrorKind::NotACycle, edges.to_string() + " is a union of disjoint cycles");
    c.edges_ = std::move(edges);
    return c;
}

CycleSet::CycleSet(std::vector<Cycle> cycles) : cycles_(std::move(cycles))
{
    std::sort(cycles_.begin(), cycles_.end(),
              [](const Cycle& a, const Cycle& b) { return lex_less(a.edges(), b.edges()); });
    cycles_.erase(std::unique(cycles_.begin(), cycles_.end()), cycles_.end());
}

bool CycleSet::contains(const EdgeSet& edges) const
{
    const auto it = std::lower_bound(cycles_.begin(), cycles_.end(), edges,
                                     [](const Cycle& c, const EdgeSet& e) { return lex_less(c.edges(), e); });
    return it != cycles_.end() && it->edges() == edges;
}

std::vector<EdgeSet> CycleSet::edge_sets() const
{
    std::vector<EdgeSet> out;
    out.reserve(cycles_.size());
    for (const auto& c : cycles_)
        out.push_back(c.edges());
    return out;
}

std::vector<std::uint32_t> wave_labels(const Graph& g, VertexId s, VertexId t)
{
    if (!g.edge_between(s, t))
        throw Error(ErrorKind::VertexOutOfRange, "wave labels need adjacent s and t");
    std::vector<std::uint32_t> label(g.n(), 0);
    label[index_of(s)] = 1;
    label[index_of(t)] = 2;
    std::deque<VertexId> queue{t};
    while (!queue.empty()) {
        const auto x = queue.front();
        queue.pop_front();
        for (auto y : g.neighbors(x)) {
            if (label[index_of(y)] != 0)
                continue;
            label[index_of(y)] = label[index_of(x)] + 1;
            queue.push_back(y);
        }
    }
    return label;
}

std::vector<EdgeSet> wave_candidates(const Graph& g, VertexId s, VertexId t, const WaveOptions& options)
{
    const auto label = wave_labels(g, s, t);
    const EdgeId closing = *g.edge_between(s, t);
    std::unordered_set<EdgeSet, EdgeSetHash> found;

    const auto lower = [&](VertexId v) {
        std::vector<std::pair<VertexId, EdgeId>> out;
        const auto nb = g.neighbors(v);
        const auto inc = g.incident_edges(v);
        for (std::size_t k = 0; k < nb.size(); ++k)
            if (nb[k] != s && label[index_of(nb[k])] + 1 == label[index_of(v)])
                out.emplace_back(nb[k], inc[k]);
        return out;
    };

    const auto s_nb = g.neighbors(s);
    const auto s_inc = g.incident_edges(s);
    for (std::size_t k = 0; k < s_nb.size(); ++k) {
        const VertexId x = s_nb[k];
        if (x == t || label[index_of(x)] <= 2)
            continue;
        // Odometer over the per-wave choices of a lower neighbour.
        struct Frame {
            std::vector<std::pair<VertexId, EdgeId>> choices;
            std::size_t next = 0;
        };
        EdgeSet path(g.m());
        path.insert(closing);
        path.insert(s_inc[k]);
        std::vector<Frame> stack;
        stack.push_back({lower(x), 0});
        std::vector<EdgeId> taken;
        while (!stack.empty()) {
            auto& top = stack.back();
            if (top.next == top.choices.size()) {
                stack.pop_back();
                if (!taken.empty()) {
                    path.erase(taken.back());
                    taken.pop_back();
                }
                continue;
            }
            const auto [y, e] = top.choices[top.next++];
            path.insert(e);
            taken.push_back(e);
            if (y == t) {
                found.insert(path);
                if (found.size() > options.candidate_limit)
                    throw Error(ErrorKind::CandidateOverflow,
                                "more than " + std::to_string(options.candidate_limit) + " candidates for edge " +
                                    std::to_string(raw(closing)));
                path.erase(e);
                taken.pop_back();
                continue;
            }
            stack.push_back({lower(y), 0});
        }
    }
    return {found.begin(), found.end()};
}

std::vector<Cycle> cycles_through_edge(const Graph& g, EdgeId e, const WaveOptions& options)
{
    const auto& ed = g.edge(e);
    const auto forward = wave_candidates(g, ed.u, ed.v, options);
    const auto backward = wave_candidates(g, ed.v, ed.u, options);
    const std::unordered_set<EdgeSet, EdgeSetHash> back(backward.begin(), backward.end());
    std::vector<Cycle> out;
    for (const auto& c : forward)
        if (back.contains(c))
            out.push_back(Cycle::from_edges(g, c));
    std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) { return lex_less(a.edges(), b.edges()); });
    return out;
}

CycleSet isometric_cycles(const Graph& g, const WaveOptions& options)
{
    require_biconnected(g, "isometric_cycles");
    std::unordered_set<EdgeSet, EdgeSetHash> seen;
    std::vector<Cycle> all;
    for (std::size_t i = 0; i < g.m(); ++i)
        for (auto& c : cycles_through_edge(g, edge_at(i), options))
            if (seen.insert(c.edges()).second)
                all.push_back(std::move(c));
    return CycleSet(std::move(all));
}

bool is_isometric(const Graph& g, const EdgeSet& cycle, const DistanceMatrix& distances)
{
    const auto c = Cycle::from_edges(g, cycle);
    const auto& w = c.walk();
    const std::size_t len = w.size();
    for (std::size_t i = 0; i < len; ++i)
        for (std::size_t j = i + 1; j < len; ++j) {
            const auto along = static_cast<std::uint32_t>(std::min(j - i, len - (j - i)));
            if (distances(w[i], w[j]) != along)
                return false;
        }
    return true;
}

bool is_isometric(const Graph& g, const EdgeSet& cycle) { return is_isometric(g, cycle, DistanceMatrix(g)); }

CycleCounts cycle_count_invariants(const Graph& g, const CycleSet& cs)
{
    CycleCounts out{std::vector<std::uint64_t>(g.m(), 0), std::vector<std::uint64_t>(g.n(), 0), {}};
    std::map<std::size_t, std::uint64_t> lengths;
    for (const auto& c : cs) {
        c.edges().for_each([&](EdgeId e) { ++out.per_edge[index_of(e)]; });
        for (auto v : c.vertices())
            ++out.per_vertex[index_of(v)];
        ++lengths[c.length()];
    }
    for (const auto& [len, count] : lengths)
        out.by_length.emplace_back(count, len);
    return out;
}

std::string length_histogram(const CycleCounts& counts)
{
    std::string out = "(";
    for (std::size_t i = 0; i < counts.by_length.size(); ++i) {
        if (i > 0)
            out += ", ";
        out += std::to_string(counts.by_length[i].first) + "×" + std::to_string(counts.by_length[i].second);
    }
    return out + ")";
}

}  // namespace cutspec
