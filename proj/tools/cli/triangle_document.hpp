#pragma once

#include "chebfam/polyfamily.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chebfam::cli {

inline constexpr int kSchemaVersion = 1;

/// "chebfam <version>"
[[nodiscard]] std::string generatorStamp();

/// A-numbers of the published coefficient triangles for (m, 2), m = 2..6.
[[nodiscard]] std::optional<std::string> oeisReference(FamilyId family);

struct TriangleRow {
    long n = 0;
    std::vector<BigInteger> coeffs;  ///< coeffs[k] = c(n, k, m, p)

    friend bool operator==(const TriangleRow&, const TriangleRow&) = default;
};

struct TriangleDocument {
    FamilyId family;
    std::vector<TriangleRow> rows;
    std::vector<std::string> oeisRefs;
    std::string generator;

    friend bool operator==(const TriangleDocument&, const TriangleDocument&) = default;
};

/// Rows m..maxN; throws std::invalid_argument when maxN < m.
[[nodiscard]] TriangleDocument makeTriangleDocument(FamilyId family, long maxN);
[[nodiscard]] TriangleDocument makeTriangleDocument(FamilyId family, std::vector<TriangleRow> rows);

/// Coefficients are decimal strings so that 64-bit consumers do not overflow.
[[nodiscard]] nlohmann::json toJson(const TriangleDocument& doc);
/// Throws std::invalid_argument on a schema mismatch or malformed rows.
[[nodiscard]] TriangleDocument triangleFromJson(const nlohmann::json& j);

/// "n,k,coefficient" header plus one line per entry.
[[nodiscard]] std::string toCsv(const TriangleDocument& doc);
[[nodiscard]] TriangleDocument triangleFromCsv(std::string_view text, FamilyId family);

/// OEIS b-file: "index value" per entry, row-major, index from 1, no header.
[[nodiscard]] std::string toBFile(const TriangleDocument& doc);
/// Rebuilds rows m, m+1, ... from a b-file; a trailing partial row is an error.
[[nodiscard]] TriangleDocument triangleFromBFile(std::string_view text, FamilyId family);

}  // namespace chebfam::cli
