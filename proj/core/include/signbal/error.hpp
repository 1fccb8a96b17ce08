#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace signbal {

enum class ErrorCode {
    // graph construction
    DuplicateEdge,
    SelfLoop,
    ZeroWeight,
    Disconnected,
    IdOutOfRange,
    // input
    IoError,
    ParseError,
    // balance / spectral
    NotBipartite,
    NotBalanced,
    NotSymmetric,
    WrongVerdict,
    Bipartite,
    TooLarge,
    EdgeNotPresent,
    // dynamics
    DimensionMismatch,
    NonpositiveThreshold,
    NotLattice,
    InconsistentMode,
    BipartiteUnsupported,
    NegativeDensity,
    // generators / config
    ParamOutOfRange,
    GaveUpConnectivity,
    InvalidConfig,
};

[[nodiscard]] std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. The code identifies the condition; the
/// message names the offending edge, node, line or parameter.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace signbal
