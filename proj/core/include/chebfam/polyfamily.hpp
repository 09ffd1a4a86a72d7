#pragma once

// The polynomial family P_{n,m,p}(x) = sum_k c(n,k,m,p) x^k with
//   c(n,k,m,p) = (-1)^{(n-k)/2} f((n+k-2m)/2, (n-k)/2, m, p)
// for n, k of equal parity and 0 otherwise. Rows are indexed by degree,
// starting at n = m. (0,2) gives U_n, (1,2) gives T_n.

#include "chebfam/exact.hpp"
#include "chebfam/polynomial.hpp"

#include <compare>
#include <deque>
#include <shared_mutex>
#include <vector>

namespace chebfam {

struct FamilyId {
    long m = 2;
    long p = 2;

    auto operator<=>(const FamilyId&) const = default;
};

inline constexpr FamilyId kChebyshevU{0, 2};
inline constexpr FamilyId kChebyshevT{1, 2};
inline constexpr FamilyId kPrincipalFamily{2, 2};

/// Throws InvalidConfiguration unless m >= 0 and p >= 1.
void requireValidFamily(FamilyId family);

/// Coefficient straight from the counting formula, no caching.
[[nodiscard]] BigInteger definitionalCoefficient(long n, long k, FamilyId family);

/// Rows of c(n, ., m, p) for one family, grown on demand. Concurrent readers
/// share the lock; growth takes it exclusively. Returned rows stay valid for
/// the lifetime of the triangle.
class CoeffTriangle {
public:
    explicit CoeffTriangle(FamilyId family);

    [[nodiscard]] FamilyId family() const { return family_; }
    /// [c(n,0), ..., c(n,n)]; throws std::invalid_argument for n < m.
    [[nodiscard]] const std::vector<BigInteger>& row(long n) const;
    [[nodiscard]] long cachedRows() const;

private:
    FamilyId family_;
    mutable std::shared_mutex mutex_;
    mutable std::deque<std::vector<BigInteger>> rows_;
};

/// Process-wide triangle for the family.
[[nodiscard]] const CoeffTriangle& triangleFor(FamilyId family);

/// c(n,k,m,p). Throws for n < m; returns 0 for k outside [0, n].
[[nodiscard]] BigInteger coefficient(long n, long k, FamilyId family);

/// Like coefficient(), but 0 for rows below m as well. Recurrences that
/// step outside the triangle use this.
[[nodiscard]] BigInteger triangleEntryOrZero(long n, long k, FamilyId family);

[[nodiscard]] IntPolynomial buildDefinitional(long n, FamilyId family);

/// P_{n,m,p} = sum_{i=0}^m (-1)^i C(m,i) x^{m-i} P_{n-m-i,0,p}; rows with a
/// negative index contribute nothing, so any n >= m is accepted.
[[nodiscard]] IntPolynomial buildByReduction(long n, FamilyId family);

/// p = 2 only. Starts from x^m and 2x^{m+1} - m x^{m-1} (rows m and m+1) and
/// applies P_n = 2x P_{n-1} - P_{n-2} + (-1)^{n-m} C(m, n-m) x^{2m-n}. The last
/// term is nonzero only for n <= 2m.
[[nodiscard]] IntPolynomial buildByThreeTerm(long n, FamilyId family);

/// Same seeds, plain three-term recurrence with no boundary term. Differs from
/// the family for m >= 2 starting at n = m + 2.
[[nodiscard]] IntPolynomial buildByThreeTermPrinted(long n, FamilyId family);

/// sum_{i=0}^t (-1)^{t-i} C(t,i) x^i P_{n+2t-i, m+t-i, p}
[[nodiscard]] IntPolynomial buildViaTRecurrence(long n, FamilyId family, long t);

/// sum_{i=0}^t (-1)^{i+t} C(t,i) c(n+2t-i, k-i, m+t-i, p)
[[nodiscard]] BigInteger coeffRecurrenceE2(long n, long k, FamilyId family, long t);

enum class E3Variant { Printed, Corrected };

/// Printed:   sum_{i=1}^p (-1)^i     C(p,i) c(n-i, k+i-2, m, p-1)
/// Corrected: sum_{i=1}^p (-1)^{i-1} C(p,i) c(n-i, k+i-2, m, p)
/// Requires p >= 2. Agreement with coefficient() is not assumed.
[[nodiscard]] BigInteger coeffRecurrenceE3(long n, long k, FamilyId family, E3Variant variant);

/// sum_i sum_j sum_t C(n,i) C(m,t) C(i,j) (-1)^{i-j+t} c(n-i-t, k+i-2j+t, 0, p-1),
/// evaluated verbatim. Requires p >= 2.
[[nodiscard]] BigInteger coeffTripleSum(long n, long k, FamilyId family);

/// (-1)^{(n-k)/2} sum_{i=0}^k C((n+k)/2, i) C((n+k)/2 - i, (n-k)/2), 0 for odd n-k.
[[nodiscard]] BigInteger chebyshevUCoefficient(long n, long k);

/// Textbook recurrences (U_0 = 1, U_1 = 2x; T_0 = 1, T_1 = x), independent
/// of the counting formula.
[[nodiscard]] IntPolynomial chebyshevU(long n);
[[nodiscard]] IntPolynomial chebyshevT(long n);

}  // namespace chebfam
