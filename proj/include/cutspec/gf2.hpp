// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cutspec/edge_set.hpp"
#include "cutspec/graph.hpp"

namespace cutspec {

// Incremental GF(2) elimination. Each stored row is reduced against the
// others and pivots on its lowest edge index, so the basis is in reduced
// echelon form regardless of insertion order.
class Gf2Eliminator {
public:
    explicit Gf2Eliminator(std::size_t width) : width_(width) {}

    // Returns true when v was independent of the rows seen so far.
    bool insert(const EdgeSet& v);
    [[nodiscard]] bool in_span(const EdgeSet& v) const;
    [[nodiscard]] std::size_t rank() const noexcept { return rows_.size(); }
    [[nodiscard]] std::span<const EdgeSet> rows() const noexcept { return rows_; }

private:
    [[nodiscard]] EdgeSet reduce(EdgeSet v) const;

    std::size_t width_;
    std::vector<EdgeSet> rows_;
    std::vector<std::size_t> pivots_;  // lowest set index of rows_[i]
};

std::size_t gf2_rank(std::span<const EdgeSet> vectors);

struct SpanningTreeDecomposition {
    EdgeSet tree_edges;
    EdgeSet chords;
};

// BFS from vertex 1, neighbours taken in increasing order.
SpanningTreeDecomposition spanning_tree(const Graph& g);
// Kruskal over a seeded shuffle of the edges; used to show results do not
// depend on the tree.
SpanningTreeDecomposition random_spanning_tree(const Graph& g, std::uint64_t seed);
// Validates a caller-chosen tree; throws NotATree.
SpanningTreeDecomposition decomposition_from_tree(const Graph& g, const EdgeSet& tree_edges);

// One cycle per chord, in chord order.
std::vector<EdgeSet> fundamental_cycles(const Graph& g, const SpanningTreeDecomposition& t);
// One cut per tree edge, in tree-edge order.
std::vector<EdgeSet> fundamental_cuts(const Graph& g, const SpanningTreeDecomposition& t);

bool is_quasicycle(const Graph& g, const EdgeSet& s);
bool even_intersection(const EdgeSet& c, const EdgeSet& s);

// dim(C(G) ∩ S(G)) computed as rank(C) + rank(S) - rank(C + S).
std::size_t cycle_cut_intersection_dimension(const Graph& g);

}  // namespace cutspec
