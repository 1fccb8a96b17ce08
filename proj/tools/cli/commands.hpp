#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace signbal::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kDataError = 2, kVerificationFailed = 3 };

struct CommonOptions {
    std::string input;
    std::string config;
    std::string output;  // empty: standard output
    std::optional<std::uint64_t> seed;
    std::string format = "json";
};

int cmd_classify(const CommonOptions& opt, std::ostream& out);
int cmd_measure(const CommonOptions& opt, std::ostream& out);
int cmd_generate(const std::string& kind, const CommonOptions& opt, std::ostream& out);

/// `summary` receives the stationary prediction (rw) or activation sets (elt).
int cmd_simulate(const std::string& model, const CommonOptions& opt, const std::string& summary, std::ostream& out);

struct VerifyOptions {
    std::string suite = "all";
    std::optional<int> criterion;
    bool inject_sign_error = false;
    std::string tribes;
};

int cmd_verify(const VerifyOptions& verify, const CommonOptions& opt, std::ostream& out);

}  // namespace signbal::cli
