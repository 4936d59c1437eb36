// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <ostream>

namespace cutspec {

// 1-based ids, matching how graphs are written down in input files.
enum class VertexId : std::uint32_t {};
enum class EdgeId : std::uint32_t {};

constexpr std::uint32_t raw(VertexId v) noexcept { return static_cast<std::uint32_t>(v); }
constexpr std::uint32_t raw(EdgeId e) noexcept { return static_cast<std::uint32_t>(e); }
constexpr std::size_t index_of(VertexId v) noexcept { return raw(v) - 1; }
constexpr std::size_t index_of(EdgeId e) noexcept { return raw(e) - 1; }
constexpr VertexId vertex_at(std::size_t index) noexcept
{
    return static_cast<VertexId>(index + 1);
}
constexpr EdgeId edge_at(std::size_t index) noexcept { return static_cast<EdgeId>(index + 1); }

inline std::ostream& operator<<(std::ostream& os, VertexId v) { return os << 'v' << raw(v); }
inline std::ostream& operator<<(std::ostream& os, EdgeId e) { return os << 'e' << raw(e); }

}  // namespace cutspec
