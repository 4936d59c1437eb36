// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

#include "cutspec/cut_spectrum.hpp"
#include "cutspec/isometric_cycles.hpp"

namespace cutspec {

// Ring sum of every cycle in the set; may be empty.
EdgeSet rim(const CycleSet& cs, std::size_t m);

// tau0(e): ring sum of the cycles through e, plus the rim when e lies on it.
SummandTable base_edge_cycles(const Graph& g, const CycleSet& cs);

struct CycleSpectrum {
    Spectrum spectrum;
    SummandTable base;
    EdgeSet rim;
    CycleSet cycles;
};

// Base level only unless a larger cap (or none) is asked for.
inline constexpr std::optional<std::size_t> base_level_only = 1;

CycleSpectrum build_cycle_spectrum(const Graph& g, std::optional<std::size_t> level_cap = base_level_only);
CycleSpectrum build_cycle_spectrum(const Graph& g, const CycleSet& cs,
                                   std::optional<std::size_t> level_cap = base_level_only);

Invariant invariant_IC(const Graph& g, std::optional<std::size_t> level_cap = base_level_only);
Invariant cycle_invariant_of(const Graph& g, const Spectrum& sp);

}  // namespace cutspec
