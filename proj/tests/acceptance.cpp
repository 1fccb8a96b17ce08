#include <cstdio>
#include <cstdlib>
#include <exception>
#include <string>

#include "criteria.hpp"

// Runs the acceptance criteria and prints one line per criterion.
// Usage: signbal_acceptance [criterion]
int main(int argc, char** argv) {
    using namespace signbal::verify;
    int first = 1;
    int last = kCriterionCount;
    if (argc > 1) {
        first = last = std::atoi(argv[1]);
        if (first < 1 || first > kCriterionCount) {
            std::fprintf(stderr, "criterion must be in 1..%d\n", kCriterionCount);
            return 2;
        }
    }
    int failed = 0;
    for (int id = first; id <= last; ++id) {
        CriterionResult r;
        try {
            r = run_criterion(id, Options{});
        } catch (const std::exception& e) {
            r.id = id;
            r.name = std::string(criterion_name(id));
            r.detail = std::string("error: ") + e.what();
        }
        std::printf("criterion %d %s %s: %s (%.2fs)\n", id, r.passed ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str(),
                    r.seconds);
        if (!r.passed) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
