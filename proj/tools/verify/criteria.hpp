#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace signbal::verify {

inline constexpr int kCriterionCount = 10;

struct Options {
    /// Flip one edge of every planted SSBM fixture, so checks that rely on
    /// the planted structure must fail.
    bool inject_sign_error = false;
    /// Gahuku-Gama edge list. Empty means $SIGNBAL_TRIBES, then the bundled
    /// data directory.
    std::filesystem::path tribes_path;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

[[nodiscard]] std::string_view criterion_name(int id);

/// Criteria in a suite: classification, spectra, walks, elt or all.
/// Throws InvalidConfig for an unknown suite.
[[nodiscard]] std::vector<int> suite_criteria(std::string_view suite);

[[nodiscard]] CriterionResult run_criterion(int id, const Options& options);

[[nodiscard]] std::filesystem::path default_tribes_path();

[[nodiscard]] nlohmann::json to_json(const CriterionResult& r);

}  // namespace signbal::verify
