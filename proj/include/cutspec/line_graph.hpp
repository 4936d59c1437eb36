// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "cutspec/cut_spectrum.hpp"
#include "cutspec/isometric_cycles.hpp"

namespace cutspec {

// Vertex i of the line graph stands for edge i of the source graph, so the
// vertex-to-edge map is the identity on indices.
struct LineGraph {
    Graph graph;

    [[nodiscard]] EdgeId source_edge(VertexId v) const { return static_cast<EdgeId>(raw(v)); }
};

LineGraph line_graph(const Graph& g);

// Source-graph edges behind the vertices of a line-graph cycle.
EdgeSet source_image(const Graph& g, const Cycle& line_cycle);

struct LineCycleClassification {
    CycleSet line_cycles;
    std::vector<EdgeSet> triples;         // image inside one central cut
    std::vector<EdgeSet> cycle_images;    // image is an isometric cycle of the source graph
    std::vector<EdgeSet> double_cycles;   // everything else
    std::size_t source_cycle_count = 0;

    [[nodiscard]] std::size_t k3() const noexcept { return triples.size(); }
    [[nodiscard]] std::size_t k4() const noexcept { return double_cycles.size(); }
};

// Throws IdentityMismatch when the cycle images are not exactly the
// isometric cycles of g, or a double-cycle image is outside their span.
LineCycleClassification classify_line_cycles(const Graph& g, const WaveOptions& options = {});

// Edge weight: number of line-graph isometric cycles whose image holds the edge.
Invariant digital_invariant_IL(const Graph& g, const WaveOptions& options = {});
Invariant line_invariant_of(const Graph& g, const CycleSet& line_cycles);

}  // namespace cutspec
