// SPDX-License-Identifier: Apache-2.0
#include "cutspec/cycle_spectrum.hpp"

#include "cutspec/error.hpp"

namespace cutspec {

EdgeSet rim(const CycleSet& cs, std::size_t m)
{
    EdgeSet out(m);
    for (const auto& c : cs)
        out ^= c.edges();
    return out;
}

SummandTable base_edge_cycles(const Graph& g, const CycleSet& cs)
{
    const EdgeSet r = rim(cs, g.m());
    std::vector<EdgeSet> cells(g.m(), EdgeSet(g.m()));
    for (const auto& c : cs)
        c.edges().for_each([&](EdgeId e) { cells[index_of(e)] ^= c.edges(); });
    r.for_each([&](EdgeId e) { cells[index_of(e)] ^= r; });
    return SummandTable(SummandTable::Kind::Cycle, std::move(cells));
}

CycleSpectrum build_cycle_spectrum(const Graph& g, const CycleSet& cs, std::optional<std::size_t> level_cap)
{
    require_biconnected(g, "build_cycle_spectrum");
    auto base = base_edge_cycles(g, cs);
    auto sp = iterate_spectrum(base, level_cap);
    return CycleSpectrum{std::move(sp), std::move(base), rim(cs, g.m()), cs};
}

CycleSpectrum build_cycle_spectrum(const Graph& g, std::optional<std::size_t> level_cap)
{
    require_biconnected(g, "build_cycle_spectrum");
    return build_cycle_spectrum(g, isometric_cycles(g), level_cap);
}

Invariant cycle_invariant_of(const Graph& g, const Spectrum& sp)
{
    const auto w = spectrum_edge_weights(sp);
    return Invariant::from_corteges(w.total, vertex_weights(g, w.total));
}

Invariant invariant_IC(const Graph& g, std::optional<std::size_t> level_cap)
{
    return cycle_invariant_of(g, build_cycle_spectrum(g, level_cap).spectrum);
}

}  // namespace cutspec
