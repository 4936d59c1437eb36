// SPDX-License-Identifier: Apache-2.0
#include "cutspec/error.hpp"

namespace cutspec {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::AsymmetricAdjacency: return "AsymmetricAdjacency";
    case ErrorKind::LoopFound: return "LoopFound";
    case ErrorKind::DuplicateNeighbor: return "DuplicateNeighbor";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorKind::EmptyCore: return "EmptyCore";
    case ErrorKind::NotNonseparable: return "NotNonseparable";
    case ErrorKind::NotACycle: return "NotACycle";
    case ErrorKind::CandidateOverflow: return "CandidateOverflow";
    case ErrorKind::IdentityMismatch: return "IdentityMismatch";
    case ErrorKind::LimitExceeded: return "LimitExceeded";
    case ErrorKind::NotAPermutation: return "NotAPermutation";
    case ErrorKind::NotATree: return "NotATree";
    case ErrorKind::BadOffsets: return "BadOffsets";
    case ErrorKind::OddNeighborCount: return "OddNeighborCount";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind)
{
}

}  // namespace cutspec
