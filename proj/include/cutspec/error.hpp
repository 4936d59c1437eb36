// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cutspec {

enum class ErrorKind {
    AsymmetricAdjacency,
    LoopFound,
    DuplicateNeighbor,
    VertexOutOfRange,
    LengthMismatch,
    DisconnectedGraph,
    EmptyCore,
    NotNonseparable,
    NotACycle,
    CandidateOverflow,
    IdentityMismatch,
    LimitExceeded,
    NotAPermutation,
    NotATree,
    BadOffsets,
    OddNeighborCount,
    DuplicateEdge,
    ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail);

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace cutspec
