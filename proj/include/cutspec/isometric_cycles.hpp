// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cutspec/edge_set.hpp"
#include "cutspec/graph.hpp"

namespace cutspec {

// A simple cycle of a particular graph.
class Cycle {
public:
    // Throws NotACycle unless the edges form one simple cycle.
    static Cycle from_edges(const Graph& g, EdgeSet edges);

    [[nodiscard]] const EdgeSet& edges() const noexcept { return edges_; }
    [[nodiscard]] const std::vector<VertexId>& vertices() const noexcept { return vertices_; }  // sorted
    // Vertices in walking order, starting from the smallest and moving
    // towards its smaller neighbour on the cycle.
    [[nodiscard]] const std::vector<VertexId>& walk() const noexcept { return walk_; }
    [[nodiscard]] std::size_t length() const noexcept { return walk_.size(); }

    friend bool operator==(const Cycle& a, const Cycle& b) { return a.edges_ == b.edges_; }

private:
    Cycle() = default;

    EdgeSet edges_{0};
    std::vector<VertexId> vertices_;
    std::vector<VertexId> walk_;
};

// Deduplicated cycles ordered lexicographically by their sorted edge ids.
class CycleSet {
public:
    CycleSet() = default;
    explicit CycleSet(std::vector<Cycle> cycles);

    [[nodiscard]] std::size_t size() const noexcept { return cycles_.size(); }
    [[nodiscard]] bool empty() const noexcept { return cycles_.empty(); }
    [[nodiscard]] const Cycle& operator[](std::size_t i) const { return cycles_.at(i); }
    [[nodiscard]] auto begin() const noexcept { return cycles_.begin(); }
    [[nodiscard]] auto end() const noexcept { return cycles_.end(); }
    [[nodiscard]] bool contains(const EdgeSet& edges) const;
    [[nodiscard]] std::vector<EdgeSet> edge_sets() const;

private:
    std::vector<Cycle> cycles_;
};

struct WaveOptions {
    std::size_t candidate_limit = 1'000'000;  // per edge and direction
};

// label[v-1]: s gets 1, t gets 2, then breadth-first waves 3, 4, ... from t.
// Vertices the wave cannot reach keep 0.
std::vector<std::uint32_t> wave_labels(const Graph& g, VertexId s, VertexId t);

// Cycles through the edge (s, t) built from label-descending paths that
// start at a neighbour of s and end at t.
std::vector<EdgeSet> wave_candidates(const Graph& g, VertexId s, VertexId t, const WaveOptions& options = {});

// Candidates from both labelings of e, kept only when present in both.
std::vector<Cycle> cycles_through_edge(const Graph& g, EdgeId e, const WaveOptions& options = {});

// Union over all edges. Requires a biconnected graph.
CycleSet isometric_cycles(const Graph& g, const WaveOptions& options = {});

// Metric check: every pair of cycle vertices is as far apart along the cycle
// as in the graph. Throws NotACycle for edge sets that are not simple cycles.
bool is_isometric(const Graph& g, const EdgeSet& cycle, const DistanceMatrix& distances);
bool is_isometric(const Graph& g, const EdgeSet& cycle);

struct CycleCounts {
    std::vector<std::uint64_t> per_edge;
    std::vector<std::uint64_t> per_vertex;
    std::vector<std::pair<std::uint64_t, std::size_t>> by_length;  // (count, length), increasing length
};

CycleCounts cycle_count_invariants(const Graph& g, const CycleSet& cs);
std::string length_histogram(const CycleCounts& counts);  // "(12×5)"

}  // namespace cutspec
