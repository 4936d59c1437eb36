// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cutspec/cut_spectrum.hpp"
#include "cutspec/isometric_cycles.hpp"

namespace cutspec {

// How much of the machinery applies to a graph.
enum class InvariantMode {
    Nonseparable,  // cut spectrum, cycle spectrum, optional line invariant
    Tree,          // uncapped cut spectrum only
    CutOnly,       // anything else: capped cut spectrum only
};

std::string_view to_string(InvariantMode mode);

struct InvariantOptions {
    std::optional<std::size_t> level_cap;
    bool with_line_invariant = false;
    WaveOptions wave;
};

struct IntegralInvariant {
    InvariantMode mode = InvariantMode::Nonseparable;
    CutInvariant cut;
    std::optional<Invariant> cycle;
    std::optional<Invariant> line;

    [[nodiscard]] std::size_t level_count() const noexcept { return cut.level_count; }
    // "IS & IC" or "IS & IC & IL" in run-length form.
    [[nodiscard]] std::string rle() const;

    friend bool operator==(const IntegralInvariant&, const IntegralInvariant&) = default;
};

IntegralInvariant integral_invariant(const Graph& g, const InvariantOptions& options = {});

// Cut spectrum of a tree, never capped. Throws NotATree.
CutInvariant tree_invariant(const Graph& t);

using Bijection = std::vector<VertexId>;  // bijection[i] is the image of vertex i+1

// Throws NotAPermutation.
Graph relabel(const Graph& g, std::span<const std::uint32_t> perm);
bool is_isomorphism(const Graph& g, const Graph& h, const Bijection& map);

// Degree-pruned backtracking. Throws LimitExceeded when n exceeds the limit.
std::optional<Bijection> brute_force_isomorphism(const Graph& g, const Graph& h, std::size_t limit = 10);

struct VertexClass {
    std::vector<VertexId> vertices;
    std::vector<std::uint64_t> signature;
};

struct OrbitPartition {
    std::vector<VertexClass> classes;  // ordered by smallest member
};

// Exact orbits of the automorphism group, by exhaustive search.
std::vector<std::vector<VertexId>> automorphism_orbits(const Graph& g, std::size_t limit = 10);

// Candidate orbits: vertices grouped by equal weights across the cut
// spectrum (levels 0 and 1 summed, and the total), the cycle base level and,
// if asked for, the line invariant.
OrbitPartition vertex_orbit_partition(const Graph& g, const InvariantOptions& options = {});

enum class Outcome { NotIsomorphic, IndistinguishableByInvariants, ConfirmedIsomorphic };

std::string_view to_string(Outcome o);

enum class Component {
    VertexCount,
    EdgeCount,
    DegreeSequence,
    Mode,
    LevelCount,
    CutLevel,
    CutTotal,
    CycleSpectrum,
    LineInvariant,
};

std::string_view to_string(Component c);

struct Witness {
    Component component;
    std::optional<std::size_t> level;  // for CutLevel
    std::string detail;
};

struct Verdict {
    Outcome outcome = Outcome::IndistinguishableByInvariants;
    std::optional<Witness> witness;    // set for NotIsomorphic
    std::optional<Bijection> bijection;  // set for ConfirmedIsomorphic
    IntegralInvariant first;
    IntegralInvariant second;
};

struct CompareOptions {
    InvariantOptions invariants;
    std::size_t brute_force_limit = 10;
};

Verdict compare_graphs(const Graph& g, const Graph& h, const CompareOptions& options = {});

}  // namespace cutspec
