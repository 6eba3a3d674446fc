#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "massform/io.hpp"

namespace massform::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitInternal = 70;

/// Runs one command line (without the program name). JSON or CSV goes to
/// `out`; diagnostics go to `err`. Validation failures print a JSON error
/// object on `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Default truncation order: MASSFORM_SERIES_ORDER, else 10.
std::size_t default_series_order();

struct SuiteResult {
    std::string name;
    std::size_t checks = 0;
    std::size_t failure_count = 0;
    /// First few failure descriptions.
    std::vector<std::string> failures;

    bool passed() const { return checks > 0 && failure_count == 0; }
    void fail(std::string what);
};

struct SuiteOptions {
    int max_rank = 4;
    std::size_t series_order = 10;
    std::uint64_t seed = 1;
    int random_trials = 1000;
};

/// Suite names accepted by `verify --suite`.
const std::vector<std::string>& suite_names();
/// Throws ValidationError for an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options);

Json to_json(const SuiteResult& result);

}  // namespace massform::cli
