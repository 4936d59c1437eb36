// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cutspec/edge_set.hpp"
#include "cutspec/ids.hpp"

namespace cutspec {

struct Edge {
    VertexId u;  // u < v
    VertexId v;
    friend bool operator==(const Edge&, const Edge&) = default;
};

// Immutable simple undirected graph. Edges are numbered in lexicographic
// order of their (smaller, larger) endpoint pairs, which is the same as
// scanning vertices 1..n and their sorted neighbour lists.
class Graph {
public:
    // adjacency[i] lists the neighbours of vertex i+1.
    static Graph from_adjacency(std::size_t n, const std::vector<std::vector<std::uint32_t>>& adjacency);
    // Each pair is added in both directions; duplicates raise DuplicateEdge.
    static Graph from_edges(std::size_t n, std::span<const std::pair<std::uint32_t, std::uint32_t>> edges);
    static Graph from_edges(std::size_t n, std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> edges);

    [[nodiscard]] std::size_t n() const noexcept { return adjacency_.size(); }
    [[nodiscard]] std::size_t m() const noexcept { return edges_.size(); }

    [[nodiscard]] const Edge& edge(EdgeId e) const;
    [[nodiscard]] std::span<const Edge> edges() const noexcept { return edges_; }
    [[nodiscard]] std::span<const VertexId> neighbors(VertexId v) const;
    // Parallel to neighbors(v): incident_edges(v)[k] joins v and neighbors(v)[k].
    [[nodiscard]] std::span<const EdgeId> incident_edges(VertexId v) const;
    [[nodiscard]] std::size_t degree(VertexId v) const { return neighbors(v).size(); }
    [[nodiscard]] std::vector<std::size_t> degrees() const;
    [[nodiscard]] std::optional<EdgeId> edge_between(VertexId a, VertexId b) const;
    [[nodiscard]] EdgeId edge_id(std::uint32_t a, std::uint32_t b) const;  // throws if absent

    [[nodiscard]] EdgeSet empty_set() const { return EdgeSet(m()); }
    [[nodiscard]] EdgeSet central_cut(VertexId v) const;
    [[nodiscard]] bool is_connected() const;
    [[nodiscard]] bool is_tree() const { return n() >= 1 && m() + 1 == n() && is_connected(); }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    Graph() = default;
    void check_vertex(VertexId v) const;

    std::vector<Edge> edges_;
    std::vector<std::vector<VertexId>> adjacency_;
    std::vector<std::vector<EdgeId>> incident_;
};

class DistanceMatrix {
public:
    explicit DistanceMatrix(const Graph& g);  // throws DisconnectedGraph

    [[nodiscard]] std::size_t n() const noexcept { return n_; }
    [[nodiscard]] std::uint32_t operator()(VertexId a, VertexId b) const
    {
        return d_[index_of(a) * n_ + index_of(b)];
    }

private:
    std::size_t n_;
    std::vector<std::uint32_t> d_;
};

DistanceMatrix all_pairs_distances(const Graph& g);

// Hop distances from one source; unreachable vertices get nullopt.
std::vector<std::optional<std::uint32_t>> bfs_distances(const Graph& g, VertexId source);

enum class SeparabilityIssue {
    None,
    TooSmall,
    Disconnected,
    ArticulationPoint,
    Bridge,
    LowDegree,
};

struct NonseparableReport {
    bool nonseparable = false;
    SeparabilityIssue issue = SeparabilityIssue::None;
    std::string detail;
    // The listed checks amount to 2-connectivity plus a degree floor, which
    // is weaker than 3-connectivity; this is stated in every report.
    std::string note;
};

NonseparableReport is_nonseparable(const Graph& g);

// Connected, at least three vertices, no articulation point. This is what the
// spectrum and cycle algorithms need; it does not demand min degree 3.
bool is_biconnected(const Graph& g);
void require_biconnected(const Graph& g, const char* where);

// Loops and parallel edges allowed.
struct RawGraph {
    std::size_t n = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
};

struct Core {
    Graph graph;
    std::vector<VertexId> original;  // original[i] is the source vertex of core vertex i+1
    bool meets_degree_floor = false;
};

enum class ReductionRule { Loops, Parallels, Pendants, Suppression };

struct ReductionOptions {
    std::array<ReductionRule, 4> rules{ReductionRule::Loops, ReductionRule::Parallels,
                                       ReductionRule::Pendants, ReductionRule::Suppression};
    bool reverse_scan = false;  // visit vertices n..1 instead of 1..n
};

// Loops, then parallels, then pendants, then degree-2 suppression, repeated to
// a fixpoint. A degree-2 vertex is only suppressed when its two neighbours are
// not already adjacent, so a bare cycle ends as a triangle instead of
// vanishing. Works per component and keeps the largest core.
Core reduce_to_core(const RawGraph& raw, const ReductionOptions& options = {});

}  // namespace cutspec
