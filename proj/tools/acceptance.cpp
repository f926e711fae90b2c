#include <rotrem/checks.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

int main(int argc, char **argv) {
    rotrem::checks::SuiteConfig config;
    if (argc > 1) {
        config.seed = std::stoull(argv[1]);
    }
    int failed = 0;
    const auto &names = rotrem::checks::suite_names();
    for (std::size_t i = 0; i < names.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        const auto r = rotrem::checks::run_criterion(static_cast<int>(i) + 1, config);
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        std::cout << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.title << ": "
                  << r.cases - r.failures << "/" << r.cases << " cases (" << ms << " ms) - "
                  << r.detail << "\n";
        failed += !r.passed;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
              << "\n";
    return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
