#pragma once

#include "verify.hpp"

#include "chebfam/polyfamily.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chebfam::cli {

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Format { Json, Csv, BFile };

[[nodiscard]] Format parseFormat(std::string_view s);

/// "a..b" or a single integer "a" (meaning a..a).
[[nodiscard]] std::pair<long, long> parseRange(std::string_view s);

/// Integers, fractions "p/q" and decimals "d.ddde±x", all read exactly.
[[nodiscard]] BigRational parseExactNumber(std::string_view s);

struct CommandResult {
    std::string output;
    int exitCode = 0;
};

enum class BuildMethod { Definitional, Reduction, ThreeTerm, ShiftRecurrence };
[[nodiscard]] BuildMethod parseBuildMethod(std::string_view s);

[[nodiscard]] CommandResult cmdTriangle(FamilyId family, long maxN, Format format,
                                        const std::optional<std::filesystem::path>& cacheDir = std::nullopt);
[[nodiscard]] CommandResult cmdPoly(long n, FamilyId family, BuildMethod method, Format format);
[[nodiscard]] CommandResult cmdEval(long n, FamilyId family, std::string_view x, Format format);
[[nodiscard]] CommandResult cmdZeros(long n, FamilyId family, Format format);
[[nodiscard]] CommandResult cmdExtrema(long n, Format format);
[[nodiscard]] CommandResult cmdGram(long first, long last, FamilyId family, long weight, Format format);
[[nodiscard]] CommandResult cmdVerify(std::string_view suite, const VerifyOptions& options, Format format);
[[nodiscard]] CommandResult cmdOracle(long n, long k, long m, long p, Format format);

/// Writes a b-file and a JSON document per family into outDir. With no
/// family given, exports the five published (m, 2) triangles, m = 2..6.
[[nodiscard]] CommandResult cmdExport(const std::filesystem::path& outDir, long maxN,
                                      const std::optional<FamilyId>& family,
                                      const std::optional<std::filesystem::path>& cacheDir = std::nullopt);

}  // namespace chebfam::cli
