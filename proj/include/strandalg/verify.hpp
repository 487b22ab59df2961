#ifndef STRANDALG_VERIFY_HPP
#define STRANDALG_VERIFY_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "strandalg/pmc.hpp"

namespace strandalg {

struct VerifyLevel {
    bool exhaustive = true;
    std::size_t samples = 0;  // cases per suite when not exhaustive

    /// "exhaustive" or "sample:<N>"; throws Error(Parse) otherwise.
    static VerifyLevel parse(std::string_view text);
};

struct VerificationFailure {
    std::string message;
    nlohmann::json witness;
};

struct VerificationReport {
    std::string suite;
    std::size_t cases = 0;
    std::size_t failure_count = 0;
    std::vector<VerificationFailure> failures;  // the first few, with witnesses
    double wall_seconds = 0;

    bool passed() const { return failure_count == 0; }
    nlohmann::json to_json() const;
};

/// Suite names in run order.
const std::vector<std::string>& verify_suites();

/// Runs one named suite. Deterministic for a fixed seed.
VerificationReport run_suite(std::string_view suite, const PointedMatchedCircle& pmc, VerifyLevel level,
                             std::uint64_t seed);

/// Runs every suite.
std::vector<VerificationReport> run_verify(const PointedMatchedCircle& pmc, VerifyLevel level, std::uint64_t seed);

}  // namespace strandalg

#endif
