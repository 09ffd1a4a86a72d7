#pragma once

// Block-intersection counting. The ground set holds n blocks of size p plus
// one extra block of size m; f(n,k,m,p) counts the (n+k)-subsets meeting
// every p-block.

#include "chebfam/exact.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace chebfam {

class InvalidConfiguration : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class GroundSetTooLarge : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// k may be negative; the count is then zero.
struct BlockConfig {
    long n = 0;
    long k = 0;
    long m = 0;
    long p = 1;

    [[nodiscard]] long groundSize() const { return n * p + m; }
    [[nodiscard]] long subsetSize() const { return n + k; }
    friend bool operator==(const BlockConfig&, const BlockConfig&) = default;
};

inline constexpr long kOracleMaxGround = 24;

/// Inclusion-exclusion closed form  sum_i (-1)^i C(n,i) C(np+m-ip, n+k).
/// Throws InvalidConfiguration for n < 0, p < 1 or m < 0.
[[nodiscard]] BigInteger fClosed(long n, long k, long m, long p);
[[nodiscard]] inline BigInteger fClosed(const BlockConfig& c) { return fClosed(c.n, c.k, c.m, c.p); }

/// Exhaustive enumeration over all (n+k)-subsets of the contiguous block layout
/// (block b occupies elements [b*p, (b+1)*p), the m-block comes last).
/// Throws GroundSetTooLarge when n*p + m > kOracleMaxGround.
[[nodiscard]] BigInteger fOracle(long n, long k, long m, long p);
[[nodiscard]] inline BigInteger fOracle(const BlockConfig& c) { return fOracle(c.n, c.k, c.m, c.p); }

enum class IdentityId { E1, E2, E3Printed, E3Corrected, E4 };

[[nodiscard]] std::string_view identityName(IdentityId id);
/// Parses "E1", "E2", "E3-printed", "E3-corrected", "E4".
[[nodiscard]] IdentityId parseIdentityId(std::string_view s);

/// Tuples visited: 1 <= p <= maxP, n, m >= 0 with np+m <= maxGround,
/// n+k in [-1, np+m+1], and 0 <= t <= maxT for E2.
struct IdentityRange {
    long maxGround = 12;
    long maxP = 4;
    long maxT = 3;
    bool oracleCrossCheck = false;
};

struct IdentityFailure {
    BlockConfig config;
    long t = 0;
    BigInteger lhs;
    BigInteger rhs;
};

struct IdentityReport {
    IdentityId id = IdentityId::E1;
    IdentityRange range;
    std::size_t tuplesChecked = 0;
    std::vector<IdentityFailure> failures;

    [[nodiscard]] bool verified() const { return failures.empty(); }
};

/// Right-hand side of the chosen identity at one tuple. t is used only by E2.
[[nodiscard]] BigInteger identityRhs(IdentityId id, const BlockConfig& c, long t = 0);

/// Whether the identity's right-hand side is defined at c (E3 needs n >= 1,
/// the printed E3 and E4 need p >= 2).
[[nodiscard]] bool identityApplies(IdentityId id, const BlockConfig& c);

/// Compares lhs f(n,k,m,p) with the identity's rhs over the whole range.
/// With oracleCrossCheck, lhs comes from fOracle instead of fClosed.
[[nodiscard]] IdentityReport checkIdentity(IdentityId id, const IdentityRange& range);

}  // namespace chebfam
