// SPDX-License-Identifier: Apache-2.0
#include "cutspec/line_graph.hpp"

#include <algorithm>
#include <unordered_set>

#include "cutspec/error.hpp"
#include "cutspec/gf2.hpp"

namespace cutspec {

LineGraph line_graph(const Graph& g)
{
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::size_t v = 0; v < g.n(); ++v) {
        const auto inc = g.incident_edges(vertex_at(v));
        for (std::size_t a = 0; a < inc.size(); ++a)
            for (std::size_t b = a + 1; b < inc.size(); ++b)
                edges.emplace_back(raw(inc[a]), raw(inc[b]));
    }
    return LineGraph{Graph::from_edges(g.m(), edges)};
}

EdgeSet source_image(const Graph& g, const Cycle& line_cycle)
{
    EdgeSet out(g.m());
    for (auto v : line_cycle.vertices())
        out.insert(static_cast<EdgeId>(raw(v)));
    return out;
}

LineCycleClassification classify_line_cycles(const Graph& g, const WaveOptions& options)
{
    require_biconnected(g, "classify_line_cycles");
    const auto source_cycles = isometric_cycles(g, options);
    const auto lg = line_graph(g);
    LineCycleClassification out;
    out.line_cycles = isometric_cycles(lg.graph, options);
    out.source_cycle_count = source_cycles.size();

    std::vector<EdgeSet> cuts;
    for (std::size_t v = 0; v < g.n(); ++v)
        cuts.push_back(g.central_cut(vertex_at(v)));
    Gf2Eliminator span(g.m());
    for (const auto& c : source_cycles)
        span.insert(c.edges());

    std::unordered_set<EdgeSet, EdgeSetHash> images;
    for (const auto& lc : out.line_cycles) {
        auto image = source_image(g, lc);
        const bool in_cut = std::any_of(cuts.begin(), cuts.end(), [&](const EdgeSet& s) { return image.is_subset_of(s); });
        if (in_cut) {
            out.triples.push_back(std::move(image));
        } else if (source_cycles.contains(image)) {
            images.insert(image);
            out.cycle_images.push_back(std::move(image));
        } else {
            if (!span.in_span(image))
                throw Error(ErrorKind::IdentityMismatch,
                            "line-cycle image " + image.to_string() + " is not a sum of isometric cycles");
            out.double_cycles.push_back(std::move(image));
        }
    }
    if (out.cycle_images.size() != source_cycles.size() || images.size() != source_cycles.size())
        throw Error(ErrorKind::IdentityMismatch,
                    std::to_string(out.line_cycles.size()) + " line cycles but " +
                        std::to_string(out.cycle_images.size()) + " images for " +
                        std::to_string(source_cycles.size()) + " isometric cycles");
    return out;
}

Invariant line_invariant_of(const Graph& g, const CycleSet& line_cycles)
{
    Cortege weights(g.m(), 0);
    for (const auto& lc : line_cycles)
        for (auto v : lc.vertices())
            ++weights[index_of(v)];
    return Invariant::from_corteges(weights, vertex_weights(g, weights));
}

Invariant digital_invariant_IL(const Graph& g, const WaveOptions& options)
{
    require_biconnected(g, "digital_invariant_IL");
    return line_invariant_of(g, isometric_cycles(line_graph(g).graph, options));
}

}  // namespace cutspec
