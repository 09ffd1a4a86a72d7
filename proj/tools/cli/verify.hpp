#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chebfam::cli {

enum class CheckStatus { Pass, Fail, ErratumConfirmed };

[[nodiscard]] std::string_view statusName(CheckStatus s);

struct CheckRecord {
    std::string checkId;
    std::string suite;
    std::string range;
    CheckStatus status = CheckStatus::Pass;
    nlohmann::json witnesses = nlohmann::json::array();
    std::string detail;
};

struct VerifyReport {
    std::string suite;
    std::vector<CheckRecord> checks;

    /// True iff a check other than an erratum check failed.
    [[nodiscard]] bool anyFailure() const;
    [[nodiscard]] std::size_t count(CheckStatus s) const;
};

struct VerifyOptions {
    /// Largest ground-set size np+m for the oracle and identity sweeps.
    std::optional<long> groundBound;
};

/// all, oracle, identities, errata, constructions, analysis, orthogonality, recurrences
[[nodiscard]] const std::vector<std::string>& verifySuites();

/// Throws std::invalid_argument for an unknown suite or an out-of-bounds range.
[[nodiscard]] VerifyReport runVerify(std::string_view suite, const VerifyOptions& options = {});

[[nodiscard]] nlohmann::json toJson(const VerifyReport& report);
[[nodiscard]] std::string toCsv(const VerifyReport& report);

}  // namespace chebfam::cli
