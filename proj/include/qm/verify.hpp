#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qm {

struct LawResult {
    LawResult() = default;
    explicit LawResult(std::string name) : law(std::move(name)) {}

    std::string law;
    std::int64_t passed = 0;
    std::int64_t total = 0;
    double worst = 0.0;  ///< largest observed error measure (law-specific)
    std::string note;

    bool ok() const { return total > 0 && passed == total; }
};

struct SuiteResult {
    std::string suite;
    std::vector<LawResult> laws;
    double seconds = 0.0;

    bool pass() const;
};

struct SuiteOptions {
    std::uint64_t seed = 20240601;
    unsigned threads = 1;
    std::int64_t hfunc_T = 10000;
    int hfunc_instances = 32;
};

/// gauss-magnitude, gauss-algebra, symbols, root-number, afe, hfunc-identities,
/// p-order, ray-class, constant-a, bounds, moment.
const std::vector<std::string>& suite_names();

/// Runs one named suite; throws std::invalid_argument for unknown names.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options = {});

}  // namespace qm
