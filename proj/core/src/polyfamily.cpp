#include "chebfam/polyfamily.hpp"

#include "chebfam/blockcount.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace chebfam {

namespace {

void requireRow(long n, FamilyId family) {
    if (n < family.m) {
        throw std::invalid_argument("row n=" + std::to_string(n) + " below m=" + std::to_string(family.m));
    }
}

IntPolynomial x1() { return IntPolynomial::monomial(1); }

// Sequence of rows m .. n via the three-term step; boundary toggles the
// (-1)^{n-m} C(m, n-m) x^{2m-n} correction.
IntPolynomial threeTerm(long n, FamilyId family, bool boundary) {
    requireValidFamily(family);
    if (family.p != 2) throw std::invalid_argument("three-term recurrence needs p = 2");
    requireRow(n, family);
    const long m = family.m;
    IntPolynomial prev = IntPolynomial::monomial(m);
    if (n == m) return prev;
    IntPolynomial cur = IntPolynomial::monomial(m + 1, BigInteger(2));
    if (m >= 1) cur -= IntPolynomial::monomial(m - 1, BigInteger(m));
    const BigInteger two = 2;
    for (long row = m + 2; row <= n; ++row) {
        IntPolynomial next = cur.shifted(1) * two - prev;
        if (boundary && row <= 2 * m) {
            BigInteger c = binomial(m, row - m);
            if ((row - m) % 2 != 0) c = -c;
            next += IntPolynomial::monomial(2 * m - row, c);
        }
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace

void requireValidFamily(FamilyId family) {
    if (family.m < 0 || family.p < 1) {
        throw InvalidConfiguration("invalid family (m=" + std::to_string(family.m) +
                                   ", p=" + std::to_string(family.p) + ")");
    }
}

BigInteger definitionalCoefficient(long n, long k, FamilyId family) {
    requireValidFamily(family);
    requireRow(n, family);
    if (k < 0 || k > n || (n - k) % 2 != 0) return BigInteger(0);
    const long first = (n + k - 2 * family.m) / 2;
    const long second = (n - k) / 2;
    if (first < 0) return BigInteger(0);
    BigInteger f = fClosed(first, second, family.m, family.p);
    return second % 2 == 0 ? f : BigInteger(-f);
}

CoeffTriangle::CoeffTriangle(FamilyId family) : family_(family) { requireValidFamily(family); }

const std::vector<BigInteger>& CoeffTriangle::row(long n) const {
    requireRow(n, family_);
    const auto idx = static_cast<std::size_t>(n - family_.m);
    {
        std::shared_lock lock(mutex_);
        if (idx < rows_.size()) return rows_[idx];
    }
    std::unique_lock lock(mutex_);
    while (rows_.size() <= idx) {
        const long r = family_.m + static_cast<long>(rows_.size());
        std::vector<BigInteger> entries(static_cast<std::size_t>(r) + 1);
        for (long k = 0; k <= r; ++k) entries[static_cast<std::size_t>(k)] = definitionalCoefficient(r, k, family_);
        rows_.push_back(std::move(entries));
    }
    return rows_[idx];
}

long CoeffTriangle::cachedRows() const {
    std::shared_lock lock(mutex_);
    return static_cast<long>(rows_.size());
}

const CoeffTriangle& triangleFor(FamilyId family) {
    static std::mutex registryMutex;
    static std::map<FamilyId, std::unique_ptr<CoeffTriangle>> registry;
    std::lock_guard lock(registryMutex);
    auto& slot = registry[family];
    if (!slot) slot = std::make_unique<CoeffTriangle>(family);
    return *slot;
}

BigInteger coefficient(long n, long k, FamilyId family) {
    requireValidFamily(family);
    requireRow(n, family);
    if (k < 0 || k > n) return BigInteger(0);
    return triangleFor(family).row(n)[static_cast<std::size_t>(k)];
}

BigInteger triangleEntryOrZero(long n, long k, FamilyId family) {
    if (n < family.m || k < 0 || k > n) return BigInteger(0);
    return coefficient(n, k, family);
}

IntPolynomial buildDefinitional(long n, FamilyId family) {
    requireValidFamily(family);
    return IntPolynomial(triangleFor(family).row(n));
}

IntPolynomial buildByReduction(long n, FamilyId family) {
    requireValidFamily(family);
    requireRow(n, family);
    const long m = family.m;
    const FamilyId base{0, family.p};
    IntPolynomial sum;
    for (long i = 0; i <= m; ++i) {
        const long baseRow = n - m - i;
        if (baseRow < 0) continue;
        BigInteger c = binomial(m, i);
        if (i % 2 != 0) c = -c;
        sum += buildDefinitional(baseRow, base).shifted(m - i) * c;
    }
    return sum;
}

IntPolynomial buildByThreeTerm(long n, FamilyId family) { return threeTerm(n, family, true); }

IntPolynomial buildByThreeTermPrinted(long n, FamilyId family) { return threeTerm(n, family, false); }

IntPolynomial buildViaTRecurrence(long n, FamilyId family, long t) {
    requireValidFamily(family);
    requireRow(n, family);
    if (t < 0) throw std::invalid_argument("t must be >= 0");
    IntPolynomial sum;
    for (long i = 0; i <= t; ++i) {
        BigInteger c = binomial(t, i);
        if ((t - i) % 2 != 0) c = -c;
        const FamilyId shiftedFamily{family.m + t - i, family.p};
        sum += buildDefinitional(n + 2 * t - i, shiftedFamily).shifted(i) * c;
    }
    return sum;
}

BigInteger coeffRecurrenceE2(long n, long k, FamilyId family, long t) {
    requireValidFamily(family);
    if (t < 0) throw std::invalid_argument("t must be >= 0");
    BigInteger sum = 0;
    for (long i = 0; i <= t; ++i) {
        BigInteger term = binomial(t, i) *
                          triangleEntryOrZero(n + 2 * t - i, k - i, FamilyId{family.m + t - i, family.p});
        if ((i + t) % 2 == 0) sum += term; else sum -= term;
    }
    return sum;
}

BigInteger coeffRecurrenceE3(long n, long k, FamilyId family, E3Variant variant) {
    requireValidFamily(family);
    if (family.p < 2) throw std::invalid_argument("E3 coefficient recurrence needs p >= 2");
    const long p = family.p;
    const FamilyId inner = variant == E3Variant::Printed ? FamilyId{family.m, p - 1} : family;
    BigInteger sum = 0;
    for (long i = 1; i <= p; ++i) {
        BigInteger term = binomial(p, i) * triangleEntryOrZero(n - i, k + i - 2, inner);
        // printed sign (-1)^i, corrected sign (-1)^{i-1}
        const bool negative = variant == E3Variant::Printed ? (i % 2 != 0) : (i % 2 == 0);
        if (negative) sum -= term; else sum += term;
    }
    return sum;
}

BigInteger coeffTripleSum(long n, long k, FamilyId family) {
    requireValidFamily(family);
    if (family.p < 2) throw std::invalid_argument("triple-sum formula needs p >= 2");
    const FamilyId inner{0, family.p - 1};
    BigInteger sum = 0;
    for (long i = 0; i <= n; ++i) {
        for (long j = 0; j <= i; ++j) {
            for (long t = 0; t <= family.m; ++t) {
                BigInteger c = triangleEntryOrZero(n - i - t, k + i - 2 * j + t, inner);
                if (c == 0) continue;
                BigInteger term = binomial(n, i) * binomial(family.m, t) * binomial(i, j) * c;
                if ((i - j + t) % 2 != 0) sum -= term; else sum += term;
            }
        }
    }
    return sum;
}

BigInteger chebyshevUCoefficient(long n, long k) {
    if (k < 0 || k > n || (n - k) % 2 != 0) return BigInteger(0);
    const long half = (n + k) / 2;
    const long down = (n - k) / 2;
    BigInteger sum = 0;
    for (long i = 0; i <= k; ++i) sum += binomial(half, i) * binomial(half - i, down);
    return down % 2 == 0 ? sum : BigInteger(-sum);
}

IntPolynomial chebyshevU(long n) {
    if (n < 0) throw std::invalid_argument("negative Chebyshev index");
    IntPolynomial prev{1};
    if (n == 0) return prev;
    IntPolynomial cur{0, 2};
    for (long i = 2; i <= n; ++i) {
        IntPolynomial next = cur * x1() * BigInteger(2) - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

IntPolynomial chebyshevT(long n) {
    if (n < 0) throw std::invalid_argument("negative Chebyshev index");
    IntPolynomial prev{1};
    if (n == 0) return prev;
    IntPolynomial cur{0, 1};
    for (long i = 2; i <= n; ++i) {
        IntPolynomial next = cur * x1() * BigInteger(2) - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace chebfam
