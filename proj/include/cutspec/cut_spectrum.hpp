// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cutspec/edge_set.hpp"
#include "cutspec/graph.hpp"

namespace cutspec {

// The per-edge summands the gamma transform adds up. The kind tag keeps cut
// and cycle tables from being mixed.
class SummandTable {
public:
    enum class Kind { Cut, Cycle };

    SummandTable(Kind kind, std::vector<EdgeSet> cells);

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    [[nodiscard]] std::size_t width() const noexcept { return cells_.size(); }
    [[nodiscard]] const EdgeSet& operator[](EdgeId e) const { return cells_.at(index_of(e)); }
    [[nodiscard]] std::span<const EdgeSet> cells() const noexcept { return cells_; }

private:
    Kind kind_;
    std::vector<EdgeSet> cells_;
};

// Ring sum of the table cells selected by the members of s.
EdgeSet gamma(const EdgeSet& s, const SummandTable& table);

enum class Termination {
    AllRowsEmpty,
    ColumnRepeat,  // an entire raw column equalled an earlier one
    LevelCap,
};

std::string_view to_string(Termination t);

class Spectrum {
public:
    Spectrum(SummandTable::Kind kind, std::vector<std::vector<EdgeSet>> columns,
             std::vector<bool> terminated, Termination reason);

    [[nodiscard]] SummandTable::Kind kind() const noexcept { return kind_; }
    [[nodiscard]] std::size_t level_count() const noexcept { return columns_.size(); }
    [[nodiscard]] std::size_t rows() const noexcept { return terminated_.size(); }
    // cell(e, l): row of edge e at level l.
    [[nodiscard]] const EdgeSet& cell(EdgeId e, std::size_t level) const
    {
        return columns_.at(level).at(index_of(e));
    }
    [[nodiscard]] std::span<const EdgeSet> column(std::size_t level) const { return columns_.at(level); }
    [[nodiscard]] bool terminated(EdgeId e) const { return terminated_.at(index_of(e)); }
    [[nodiscard]] Termination reason() const noexcept { return reason_; }

private:
    SummandTable::Kind kind_;
    std::vector<std::vector<EdgeSet>> columns_;
    std::vector<bool> terminated_;
    Termination reason_;
};

// Runs the gamma iteration from a base table with no precondition checks.
// A cell equal to any earlier cell of its row becomes empty and ends the row.
Spectrum iterate_spectrum(const SummandTable& base, std::optional<std::size_t> level_cap);

// w0(e) for e = (u, v): central cut of u ring-summed with that of v.
SummandTable base_edge_cuts(const Graph& g);

// Requires a biconnected graph.
Spectrum build_cut_spectrum(const Graph& g, std::optional<std::size_t> level_cap = std::nullopt);

using Cortege = std::vector<std::uint64_t>;

struct SpectrumWeights {
    std::vector<Cortege> per_level;  // per_level[l][i]: cells of level l containing edge i+1
    Cortege total;
};

SpectrumWeights spectrum_edge_weights(const Spectrum& sp);
// Per-row sums of the same counts; equals the column-wise total.
Cortege row_aggregated_weights(const Spectrum& sp);
Cortege vertex_weights(const Graph& g, std::span<const std::uint64_t> edge_cortege);

struct Invariant {
    std::vector<std::uint64_t> edge_part;    // nondecreasing
    std::vector<std::uint64_t> vertex_part;  // nondecreasing

    static Invariant from_corteges(std::span<const std::uint64_t> edge_cortege,
                                   std::span<const std::uint64_t> vertex_cortege);
    // "(14, 2×19, 4×24)"
    [[nodiscard]] std::string edge_rle() const;
    [[nodiscard]] std::string vertex_rle() const;
    [[nodiscard]] std::string rle() const;  // "edge & vertex"

    friend bool operator==(const Invariant&, const Invariant&) = default;
};

std::string run_length(std::span<const std::uint64_t> sorted);
// Parses run_length output back into the sorted sequence.
std::vector<std::uint64_t> expand_run_length(std::string_view text);

struct CutInvariant {
    Invariant total;
    std::vector<Invariant> per_level;
    std::size_t level_count = 0;
    Termination reason = Termination::AllRowsEmpty;

    friend bool operator==(const CutInvariant&, const CutInvariant&) = default;
};

CutInvariant invariant_IS(const Graph& g, std::optional<std::size_t> level_cap = std::nullopt);
CutInvariant cut_invariant_of(const Graph& g, const Spectrum& sp);

}  // namespace cutspec
