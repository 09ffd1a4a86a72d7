#pragma once

#include "triangle_document.hpp"

#include <filesystem>

namespace chebfam::cli {

/// On-disk triangle store: one append-only file per (m, p), stamped with the
/// tool version. A stamp mismatch or a torn trailing line discards the bad tail.
class DiskTriangleCache {
public:
    explicit DiskTriangleCache(std::filesystem::path dir);

    [[nodiscard]] const std::filesystem::path& directory() const { return dir_; }
    [[nodiscard]] std::filesystem::path fileFor(FamilyId family) const;

    /// Rows m..maxN, reading what is stored and appending anything missing.
    [[nodiscard]] std::vector<TriangleRow> rows(FamilyId family, long maxN) const;

    /// Number of rows currently on disk (0 when absent or stale).
    [[nodiscard]] long storedRows(FamilyId family) const;

private:
    std::filesystem::path dir_;
};

}  // namespace chebfam::cli
