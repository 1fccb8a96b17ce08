#include "signbal/error.hpp"

namespace signbal {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::SelfLoop: return "SelfLoop";
        case ErrorCode::ZeroWeight: return "ZeroWeight";
        case ErrorCode::Disconnected: return "Disconnected";
        case ErrorCode::IdOutOfRange: return "IdOutOfRange";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::NotBipartite: return "NotBipartite";
        case ErrorCode::NotBalanced: return "NotBalanced";
        case ErrorCode::NotSymmetric: return "NotSymmetric";
        case ErrorCode::WrongVerdict: return "WrongVerdict";
        case ErrorCode::Bipartite: return "Bipartite";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::EdgeNotPresent: return "EdgeNotPresent";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NonpositiveThreshold: return "NonpositiveThreshold";
        case ErrorCode::NotLattice: return "NotLattice";
        case ErrorCode::InconsistentMode: return "InconsistentMode";
        case ErrorCode::BipartiteUnsupported: return "BipartiteUnsupported";
        case ErrorCode::NegativeDensity: return "NegativeDensity";
        case ErrorCode::ParamOutOfRange: return "ParamOutOfRange";
        case ErrorCode::GaveUpConnectivity: return "GaveUpConnectivity";
        case ErrorCode::InvalidConfig: return "InvalidConfig";
    }
    return "Unknown";
}

}  // namespace signbal
