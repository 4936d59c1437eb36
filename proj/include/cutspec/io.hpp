// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cutspec/graph.hpp"
#include "cutspec/iso_engine.hpp"

namespace cutspec {

// Offset format: vertex count, n+1 one-based offsets into the flattened
// neighbour list, then the neighbours. Text inside braces is a comment.
struct GrfFile {
    std::size_t n = 0;
    std::vector<std::uint32_t> offsets;
    std::vector<std::uint32_t> neighbors;
};

GrfFile read_grf(std::string_view text);  // BadOffsets, OddNeighborCount, ParseError
Graph parse_grf(std::string_view text);   // also AsymmetricAdjacency and friends
std::string emit_grf(const Graph& g);

// "u v" per line, optional leading "n m" header, '#' starts a comment. The
// first line counts as a header only when its second number matches the
// number of edge lines after it and no later id exceeds its first number.
Graph parse_edgelist(std::string_view text);

// Picks the parser by extension: .grf, anything else is an edge list.
Graph load_graph(const std::filesystem::path& path);

std::string degree_vector(const Graph& g);

nlohmann::json to_json(const Invariant& inv);
Invariant invariant_from_json(const nlohmann::json& j);
nlohmann::json to_json(const IntegralInvariant& inv);
IntegralInvariant integral_from_json(const nlohmann::json& j);

nlohmann::json graph_summary(const Graph& g);
nlohmann::json invariant_report(const Graph& g, const IntegralInvariant& inv);
nlohmann::json verdict_report(const Verdict& v);

}  // namespace cutspec
