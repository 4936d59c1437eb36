// SPDX-License-Identifier: Apache-2.0
#include "cutspec/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

#include "cutspec/error.hpp"

namespace cutspec {

namespace {

std::vector<std::uint64_t> tokens(std::string_view text, char comment_open, char comment_close)
{
    std::vector<std::uint64_t> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == comment_open) {
            const auto end = text.find(comment_close, i + 1);
            if (end == std::string_view::npos)
                throw Error(ErrorKind::ParseError, "unterminated comment");
            i = end + 1;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::uint64_t value = 0;
        const auto [p, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
        if (ec != std::errc{})
            throw Error(ErrorKind::ParseError, "unexpected text near '" + std::string(text.substr(i, 12)) + "'");
        i = static_cast<std::size_t>(p - text.data());
        out.push_back(value);
    }
    return out;
}

std::uint32_t narrow(std::uint64_t v)
{
    if (v > std::numeric_limits<std::uint32_t>::max())
        throw Error(ErrorKind::ParseError, "number " + std::to_string(v) + " too large");
    return static_cast<std::uint32_t>(v);
}

}  // namespace

GrfFile read_grf(std::string_view text)
{
    const auto t = tokens(text, '{', '}');
    if (t.empty())
        throw Error(ErrorKind::ParseError, "empty .grf input");
    GrfFile f;
    f.n = narrow(t[0]);
    if (t.size() < f.n + 2)
        throw Error(ErrorKind::BadOffsets, "expected " + std::to_string(f.n + 1) + " offsets");
    for (std::size_t i = 0; i <= f.n; ++i)
        f.offsets.push_back(narrow(t[1 + i]));
    for (std::size_t i = f.n + 2; i < t.size(); ++i)
        f.neighbors.push_back(narrow(t[i]));
    if (f.offsets.front() != 1)
        throw Error(ErrorKind::BadOffsets, "first offset must be 1");
    for (std::size_t i = 0; i < f.n; ++i)
        if (f.offsets[i + 1] < f.offsets[i])
            throw Error(ErrorKind::BadOffsets, "offsets decrease at vertex " + std::to_string(i + 1));
    if (f.offsets.back() - 1 != f.neighbors.size())
        throw Error(ErrorKind::BadOffsets, "last offset " + std::to_string(f.offsets.back()) + " but " +
                                               std::to_string(f.neighbors.size()) + " neighbour entries");
    if (f.neighbors.size() % 2 != 0)
        throw Error(ErrorKind::OddNeighborCount, std::to_string(f.neighbors.size()) + " neighbour entries");
    return f;
}

Graph parse_grf(std::string_view text)
{
    const auto f = read_grf(text);
    std::vector<std::vector<std::uint32_t>> adjacency(f.n);
    for (std::size_t v = 0; v < f.n; ++v)
        adjacency[v].assign(f.neighbors.begin() + f.offsets[v] - 1, f.neighbors.begin() + f.offsets[v + 1] - 1);
    return Graph::from_adjacency(f.n, adjacency);
}

std::string emit_grf(const Graph& g)
{
    std::ostringstream out;
    out << g.n() << "\n";
    std::size_t offset = 1;
    out << offset;
    for (std::size_t v = 0; v < g.n(); ++v) {
        offset += g.degree(vertex_at(v));
        out << ' ' << offset;
    }
    out << "\n";
    for (std::size_t v = 0; v < g.n(); ++v) {
        const auto nb = g.neighbors(vertex_at(v));
        for (std::size_t k = 0; k < nb.size(); ++k)
            out << (k ? " " : "") << raw(nb[k]);
        out << "\n";
    }
    return out.str();
}

Graph parse_edgelist(std::string_view text)
{
    std::vector<std::vector<std::uint64_t>> lines;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        auto t = tokens(line, '{', '}');
        if (t.empty())
            continue;
        if (t.size() != 2)
            throw Error(ErrorKind::ParseError, "expected two numbers per line: '" + line + "'");
        lines.push_back(std::move(t));
    }
    std::optional<std::size_t> n;
    std::size_t first = 0;
    const auto fits_header = [&] {
        if (lines.empty() || lines[0][1] != lines.size() - 1)
            return false;
        // "1 2" followed by one edge is ambiguous; prefer the header only if
        // every later id fits under it.
        return std::all_of(lines.begin() + 1, lines.end(),
                           [&](const auto& l) { return l[0] <= lines[0][0] && l[1] <= lines[0][0]; });
    };
    if (fits_header()) {
        n = narrow(lines[0][0]);
        first = 1;
    }
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    std::uint32_t largest = 0;
    for (std::size_t i = first; i < lines.size(); ++i) {
        edges.emplace_back(narrow(lines[i][0]), narrow(lines[i][1]));
        largest = std::max({largest, edges.back().first, edges.back().second});
    }
    return Graph::from_edges(n.value_or(largest), edges);
}

Graph load_graph(const std::filesystem::path& path)
{
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw Error(ErrorKind::ParseError, "cannot open " + path.string());
    std::ostringstream buffer;
    buffer << file.rdbuf();
    if (path.extension() == ".grf")
        return parse_grf(buffer.str());
    return parse_edgelist(buffer.str());
}

std::string degree_vector(const Graph& g)
{
    std::string out;
    for (auto d : g.degrees())
        out += (out.empty() ? "" : " ") + std::to_string(d);
    return out;
}

nlohmann::json to_json(const Invariant& inv)
{
    return {{"edge_part", inv.edge_part}, {"vertex_part", inv.vertex_part}, {"rle", inv.rle()}};
}

Invariant invariant_from_json(const nlohmann::json& j)
{
    return Invariant{j.at("edge_part").get<std::vector<std::uint64_t>>(),
                     j.at("vertex_part").get<std::vector<std::uint64_t>>()};
}

nlohmann::json to_json(const IntegralInvariant& inv)
{
    nlohmann::json levels = nlohmann::json::array();
    for (const auto& l : inv.cut.per_level)
        levels.push_back(to_json(l));
    nlohmann::json j{{"mode", std::string(to_string(inv.mode))},
                     {"level_count", inv.cut.level_count},
                     {"termination", std::string(to_string(inv.cut.reason))},
                     {"IS", to_json(inv.cut.total)},
                     {"IS_levels", levels}};
    if (inv.cycle)
        j["IC"] = to_json(*inv.cycle);
    if (inv.line)
        j["IL"] = to_json(*inv.line);
    return j;
}

IntegralInvariant integral_from_json(const nlohmann::json& j)
{
    IntegralInvariant inv;
    const auto mode = j.at("mode").get<std::string>();
    for (auto m : {InvariantMode::Nonseparable, InvariantMode::Tree, InvariantMode::CutOnly})
        if (to_string(m) == mode)
            inv.mode = m;
    const auto reason = j.at("termination").get<std::string>();
    for (auto r : {Termination::AllRowsEmpty, Termination::ColumnRepeat, Termination::LevelCap})
        if (to_string(r) == reason)
            inv.cut.reason = r;
    inv.cut.level_count = j.at("level_count").get<std::size_t>();
    inv.cut.total = invariant_from_json(j.at("IS"));
    for (const auto& l : j.at("IS_levels"))
        inv.cut.per_level.push_back(invariant_from_json(l));
    if (j.contains("IC"))
        inv.cycle = invariant_from_json(j.at("IC"));
    if (j.contains("IL"))
        inv.line = invariant_from_json(j.at("IL"));
    return inv;
}

nlohmann::json graph_summary(const Graph& g)
{
    return {{"n", g.n()}, {"m", g.m()}, {"degrees", g.degrees()}};
}

nlohmann::json invariant_report(const Graph& g, const IntegralInvariant& inv)
{
    return {{"graph", graph_summary(g)}, {"invariant", to_json(inv)}};
}

nlohmann::json verdict_report(const Verdict& v)
{
    nlohmann::json j{{"outcome", std::string(to_string(v.outcome))}};
    if (v.witness) {
        j["witness"] = {{"component", std::string(to_string(v.witness->component))}, {"detail", v.witness->detail}};
        if (v.witness->level)
            j["witness"]["level"] = *v.witness->level;
    }
    if (v.bijection) {
        std::vector<std::uint32_t> b;
        for (auto x : *v.bijection)
            b.push_back(raw(x));
        j["bijection"] = b;
    }
    if (!v.first.cut.per_level.empty()) {
        j["first"] = to_json(v.first);
        j["second"] = to_json(v.second);
    }
    return j;
}

}  // namespace cutspec
