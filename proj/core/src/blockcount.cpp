#include "chebfam/blockcount.hpp"

#include <bit>
#include <cstdint>

namespace chebfam {

namespace {

void requireValid(long n, long m, long p) {
    if (n < 0 || p < 1 || m < 0) {
        throw InvalidConfiguration("invalid block configuration: n=" + std::to_string(n) +
                                   " m=" + std::to_string(m) + " p=" + std::to_string(p));
    }
}

}  // namespace

BigInteger fClosed(long n, long k, long m, long p) {
    requireValid(n, m, p);
    const long size = n + k;
    if (size < 0 || size > n * p + m) return BigInteger(0);
    BigInteger sum = 0;
    for (long i = 0; i <= n; ++i) {
        BigInteger term = binomial(n, i) * binomial(n * p + m - i * p, size);
        if (i % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

BigInteger fOracle(long n, long k, long m, long p) {
    requireValid(n, m, p);
    const long ground = n * p + m;
    if (ground > kOracleMaxGround) {
        throw GroundSetTooLarge("oracle ground set of size " + std::to_string(ground) +
                                " exceeds " + std::to_string(kOracleMaxGround));
    }
    const long size = n + k;
    if (size < 0 || size > ground) return BigInteger(0);

    std::vector<std::uint32_t> blocks(static_cast<std::size_t>(n));
    for (long b = 0; b < n; ++b) {
        // n >= 1 here, so p <= ground <= 24 and the shifts stay in range
        blocks[static_cast<std::size_t>(b)] = ((std::uint32_t{1} << p) - 1) << (b * p);
    }

    auto hitsAll = [&](std::uint32_t s) {
        for (std::uint32_t b : blocks) {
            if ((s & b) == 0) return false;
        }
        return true;
    };

    std::uint64_t count = 0;
    if (size == 0) {
        count = hitsAll(0) ? 1 : 0;
    } else {
        // Gosper's hack: visit every mask of `ground` bits with popcount `size`.
        const std::uint64_t limit = std::uint64_t{1} << ground;
        std::uint64_t s = (std::uint64_t{1} << size) - 1;
        while (s < limit) {
            if (hitsAll(static_cast<std::uint32_t>(s))) ++count;
            const std::uint64_t c = s & (~s + 1);
            const std::uint64_t r = s + c;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    return BigInteger(static_cast<unsigned long>(count));
}

std::string_view identityName(IdentityId id) {
    switch (id) {
        case IdentityId::E1: return "E1";
        case IdentityId::E2: return "E2";
        case IdentityId::E3Printed: return "E3-printed";
        case IdentityId::E3Corrected: return "E3-corrected";
        case IdentityId::E4: return "E4";
    }
    return "?";
}

IdentityId parseIdentityId(std::string_view s) {
    for (IdentityId id : {IdentityId::E1, IdentityId::E2, IdentityId::E3Printed,
                          IdentityId::E3Corrected, IdentityId::E4}) {
        if (identityName(id) == s) return id;
    }
    throw std::invalid_argument("unknown identity id: " + std::string(s));
}

bool identityApplies(IdentityId id, const BlockConfig& c) {
    switch (id) {
        case IdentityId::E1:
        case IdentityId::E2: return true;
        case IdentityId::E3Corrected: return c.n >= 1;
        case IdentityId::E3Printed: return c.n >= 1 && c.p >= 2;
        case IdentityId::E4: return c.p >= 2;
    }
    return false;
}

BigInteger identityRhs(IdentityId id, const BlockConfig& c, long t) {
    const auto [n, k, m, p] = c;
    BigInteger rhs = 0;
    switch (id) {
        case IdentityId::E1:
            // f(n,k,m,p) = sum_{i=0}^m C(m,i) f(n,k-i,0,p)
            for (long i = 0; i <= m; ++i) rhs += binomial(m, i) * fClosed(n, k - i, 0, p);
            break;
        case IdentityId::E2:
            // f(n,k,m,p) = sum_{i=0}^t (-1)^i C(t,i) f(n,k+t,m+t-i,p)
            for (long i = 0; i <= t; ++i) {
                BigInteger term = binomial(t, i) * fClosed(n, k + t, m + t - i, p);
                if (i % 2 == 0) rhs += term; else rhs -= term;
            }
            break;
        case IdentityId::E3Printed:
            // f(n,k,m,p) = sum_{i=1}^p C(p,i) f(n-1,k-i+1,m,p-1)
            for (long i = 1; i <= p; ++i) rhs += binomial(p, i) * fClosed(n - 1, k - i + 1, m, p - 1);
            break;
        case IdentityId::E3Corrected:
            // condition on how many elements of the first p-block are taken
            for (long i = 1; i <= p; ++i) rhs += binomial(p, i) * fClosed(n - 1, k - i + 1, m, p);
            break;
        case IdentityId::E4:
            // f(n,k,m,p) = sum_{i=0}^n sum_{j=0}^i C(n,i) C(i,j) f(n-j,k-i+j,m,p-1)
            for (long i = 0; i <= n; ++i) {
                for (long j = 0; j <= i; ++j) {
                    rhs += binomial(n, i) * binomial(i, j) * fClosed(n - j, k - i + j, m, p - 1);
                }
            }
            break;
    }
    return rhs;
}

IdentityReport checkIdentity(IdentityId id, const IdentityRange& range) {
    IdentityReport report;
    report.id = id;
    report.range = range;
    const long maxT = id == IdentityId::E2 ? range.maxT : 0;
    for (long p = 1; p <= range.maxP; ++p) {
        for (long n = 0; n * p <= range.maxGround; ++n) {
            for (long m = 0; n * p + m <= range.maxGround; ++m) {
                for (long size = -1; size <= n * p + m + 1; ++size) {
                    const BlockConfig c{n, size - n, m, p};
                    if (!identityApplies(id, c)) continue;
                    const BigInteger lhs = range.oracleCrossCheck ? fOracle(c) : fClosed(c);
                    for (long t = 0; t <= maxT; ++t) {
                        ++report.tuplesChecked;
                        BigInteger rhs = identityRhs(id, c, t);
                        if (rhs != lhs) report.failures.push_back({c, t, lhs, std::move(rhs)});
                    }
                }
            }
        }
    }
    return report;
}

}  // namespace chebfam
