// SPDX-License-Identifier: Apache-2.0
#include "cutspec/cut_spectrum.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_set>

#include "cutspec/error.hpp"

namespace cutspec {

SummandTable::SummandTable(Kind kind, std::vector<EdgeSet> cells) : kind_(kind), cells_(std::move(cells))
{
    for (const auto& c : cells_)
        if (c.width() != cells_.size())
            throw Error(ErrorKind::LengthMismatch, "summand table must be square");
}

EdgeSet gamma(const EdgeSet& s, const SummandTable& table)
{
    if (s.width() != table.width())
        throw Error(ErrorKind::LengthMismatch, "gamma argument width " + std::to_string(s.width()) +
                                                   " vs table width " + std::to_string(table.width()));
    EdgeSet out(table.width());
    s.for_each([&](EdgeId e) { out ^= table[e]; });
    return out;
}

std::string_view to_string(Termination t)
{
    switch (t) {
    case Termination::AllRowsEmpty: return "all-rows-empty";
    case Termination::ColumnRepeat: return "column-repeat";
    case Termination::LevelCap: return "level-cap";
    }
    return "?";
}

Spectrum::Spectrum(SummandTable::Kind kind, std::vector<std::vector<EdgeSet>> columns,
                   std::vector<bool> terminated, Termination reason)
    : kind_(kind), columns_(std::move(columns)), terminated_(std::move(terminated)), reason_(reason)
{
}

Spectrum iterate_spectrum(const SummandTable& base, std::optional<std::size_t> level_cap)
{
    if (level_cap && *level_cap == 0)
        throw Error(ErrorKind::LengthMismatch, "level cap must be positive");
    const std::size_t m = base.width();
    std::vector<std::vector<EdgeSet>> columns;
    std::vector<std::vector<EdgeSet>> raw_columns;
    std::vector<std::unordered_set<EdgeSet, EdgeSetHash>> seen(m);
    std::vector<bool> terminated(m, false);
    std::vector<EdgeSet> last(base.cells().begin(), base.cells().end());

    columns.emplace_back(last);
    raw_columns.emplace_back(last);
    for (std::size_t i = 0; i < m; ++i) {
        seen[i].insert(last[i]);
        terminated[i] = last[i].empty();
    }

    Termination reason = Termination::AllRowsEmpty;
    while (true) {
        if (std::all_of(terminated.begin(), terminated.end(), [](bool t) { return t; })) {
            reason = Termination::AllRowsEmpty;
            break;
        }
        if (level_cap && columns.size() >= *level_cap) {
            reason = Termination::LevelCap;
            break;
        }
        std::vector<EdgeSet> raw(m, EdgeSet(m));
        for (std::size_t i = 0; i < m; ++i)
            if (!terminated[i])
                raw[i] = gamma(last[i], base);
        if (std::find(raw_columns.begin(), raw_columns.end(), raw) != raw_columns.end()) {
            reason = Termination::ColumnRepeat;
            break;
        }
        std::vector<EdgeSet> column(m, EdgeSet(m));
        std::vector<bool> ends(m, false);
        bool any = false;
        for (std::size_t i = 0; i < m; ++i) {
            if (terminated[i])
                continue;
            if (raw[i].empty() || !seen[i].insert(raw[i]).second) {
                ends[i] = true;
                continue;
            }
            column[i] = raw[i];
            last[i] = raw[i];
            any = true;
        }
        if (!any) {
            reason = Termination::AllRowsEmpty;
            break;
        }
        for (std::size_t i = 0; i < m; ++i)
            terminated[i] = terminated[i] || ends[i];
        columns.push_back(std::move(column));
        raw_columns.push_back(std::move(raw));
    }
    return Spectrum(base.kind(), std::move(columns), std::move(terminated), reason);
}

SummandTable base_edge_cuts(const Graph& g)
{
    std::vector<EdgeSet> cells;
    cells.reserve(g.m());
    for (const auto& e : g.edges())
        cells.push_back(g.central_cut(e.u) ^ g.central_cut(e.v));
    return SummandTable(SummandTable::Kind::Cut, std::move(cells));
}

Spectrum build_cut_spectrum(const Graph& g, std::optional<std::size_t> level_cap)
{
    require_biconnected(g, "build_cut_spectrum");
    return iterate_spectrum(base_edge_cuts(g), level_cap);
}

SpectrumWeights spectrum_edge_weights(const Spectrum& sp)
{
    const std::size_t m = sp.rows();
    SpectrumWeights w{{}, Cortege(m, 0)};
    for (std::size_t l = 0; l < sp.level_count(); ++l) {
        Cortege level(m, 0);
        for (const auto& cell : sp.column(l))
            cell.for_each([&](EdgeId e) { ++level[index_of(e)]; });
        for (std::size_t i = 0; i < m; ++i)
            w.total[i] += level[i];
        w.per_level.push_back(std::move(level));
    }
    return w;
}

Cortege row_aggregated_weights(const Spectrum& sp)
{
    // Count by rows first, then fold; the result must match the column totals.
    const std::size_t m = sp.rows();
    Cortege out(m, 0);
    for (std::size_t r = 0; r < m; ++r) {
        Cortege row(m, 0);
        for (std::size_t l = 0; l < sp.level_count(); ++l)
            sp.cell(edge_at(r), l).for_each([&](EdgeId e) { ++row[index_of(e)]; });
        for (std::size_t i = 0; i < m; ++i)
            out[i] += row[i];
    }
    return out;
}

Cortege vertex_weights(const Graph& g, std::span<const std::uint64_t> edge_cortege)
{
    if (edge_cortege.size() != g.m())
        throw Error(ErrorKind::LengthMismatch, "edge cortege length " + std::to_string(edge_cortege.size()) +
                                                   " vs m = " + std::to_string(g.m()));
    Cortege out(g.n(), 0);
    for (std::size_t i = 0; i < g.m(); ++i) {
        const auto& e = g.edge(edge_at(i));
        out[index_of(e.u)] += edge_cortege[i];
        out[index_of(e.v)] += edge_cortege[i];
    }
    return out;
}

Invariant Invariant::from_corteges(std::span<const std::uint64_t> edge_cortege,
                                   std::span<const std::uint64_t> vertex_cortege)
{
    Invariant inv{{edge_cortege.begin(), edge_cortege.end()}, {vertex_cortege.begin(), vertex_cortege.end()}};
    std::sort(inv.edge_part.begin(), inv.edge_part.end());
    std::sort(inv.vertex_part.begin(), inv.vertex_part.end());
    return inv;
}

std::string run_length(std::span<const std::uint64_t> sorted)
{
    std::string out = "(";
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i])
            ++j;
        if (i > 0)
            out += ", ";
        if (j - i > 1)
            out += std::to_string(j - i) + "×";
        out += std::to_string(sorted[i]);
        i = j;
    }
    return out + ")";
}

std::vector<std::uint64_t> expand_run_length(std::string_view text)
{
    const auto fail = [&] { return Error(ErrorKind::ParseError, "bad run-length text: " + std::string(text)); };
    if (text.size() < 2 || text.front() != '(' || text.back() != ')')
        throw fail();
    text = text.substr(1, text.size() - 2);
    std::vector<std::uint64_t> out;
    constexpr std::string_view times = "×";
    while (!text.empty()) {
        const auto comma = text.find(',');
        auto item = text.substr(0, comma);
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
        while (!item.empty() && item.front() == ' ')
            item.remove_prefix(1);
        std::uint64_t count = 1;
        std::uint64_t value = 0;
        const auto parse = [&](std::string_view s, std::uint64_t& into) {
            const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), into);
            if (ec != std::errc{} || p != s.data() + s.size())
                throw fail();
        };
        if (const auto x = item.find(times); x != std::string_view::npos) {
            parse(item.substr(0, x), count);
            parse(item.substr(x + times.size()), value);
        } else {
            parse(item, value);
        }
        out.insert(out.end(), count, value);
    }
    return out;
}

std::string Invariant::edge_rle() const { return run_length(edge_part); }
std::string Invariant::vertex_rle() const { return run_length(vertex_part); }
std::string Invariant::rle() const { return edge_rle() + " & " + vertex_rle(); }

CutInvariant cut_invariant_of(const Graph& g, const Spectrum& sp)
{
    const auto w = spectrum_edge_weights(sp);
    CutInvariant out;
    out.total = Invariant::from_corteges(w.total, vertex_weights(g, w.total));
    for (const auto& level : w.per_level)
        out.per_level.push_back(Invariant::from_corteges(level, vertex_weights(g, level)));
    out.level_count = sp.level_count();
    out.reason = sp.reason();
    return out;
}

CutInvariant invariant_IS(const Graph& g, std::optional<std::size_t> level_cap)
{
    return cut_invariant_of(g, build_cut_spectrum(g, level_cap));
}

}  // namespace cutspec
