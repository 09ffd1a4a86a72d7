#include "chebfam/polyfamily.hpp"

#include "chebfam/blockcount.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <thread>
#include <vector>

namespace chebfam {
namespace {

IntPolynomial fromInt64(const std::vector<std::int64_t>& v) {
    std::vector<BigInteger> c;
    for (auto x : v) c.emplace_back(static_cast<long>(x));
    return IntPolynomial(std::move(c));
}

TEST(IntPolynomial, NormalizesAndPrints) {
    const IntPolynomial p{1, 0, -5, 0, 4, 0, 0};
    EXPECT_EQ(p.degree(), 4);
    EXPECT_EQ(toString(p), "4x^4 - 5x^2 + 1");
    EXPECT_EQ(toString(IntPolynomial{0, -1}), "-x");
    EXPECT_EQ(toString(IntPolynomial{}), "0");
    EXPECT_EQ(IntPolynomial{}.degree(), -1);
    EXPECT_EQ(IntPolynomial({0, 0, 1}).derivative(), IntPolynomial({0, 2}));
    EXPECT_EQ(IntPolynomial({1, 1}) * IntPolynomial({-1, 1}), IntPolynomial({-1, 0, 1}));
}

TEST(Coefficient, PointValues) {
    EXPECT_EQ(coefficient(4, 2, kPrincipalFamily), -5);
    EXPECT_EQ(coefficient(6, 2, kPrincipalFamily), 13);
    EXPECT_EQ(coefficient(5, 4, kPrincipalFamily), 0);
    EXPECT_THROW((void)coefficient(1, 1, kPrincipalFamily), std::invalid_argument);
    EXPECT_THROW((void)coefficient(3, 1, FamilyId{2, 0}), InvalidConfiguration);
}

TEST(Coefficient, ParityAndLeadingTerm) {
    for (long p = 1; p <= 4; ++p) {
        for (long m = 0; m <= 6; ++m) {
            BigInteger lead = 1;
            for (long n = m; n <= m + 12; ++n) {
                EXPECT_EQ(coefficient(n, n, FamilyId{m, p}), lead);
                for (long k = n - 1; k >= 0; k -= 2) EXPECT_EQ(coefficient(n, k, FamilyId{m, p}), 0);
                lead *= p;
            }
        }
    }
}

TEST(BuildDefinitional, LowDegreeRows) {
    EXPECT_EQ(buildDefinitional(2, kPrincipalFamily), IntPolynomial({0, 0, 1}));
    EXPECT_EQ(buildDefinitional(3, kPrincipalFamily), IntPolynomial({0, -2, 0, 2}));
    EXPECT_EQ(buildDefinitional(7, kPrincipalFamily), IntPolynomial({0, -6, 0, 38, 0, -64, 0, 32}));
    EXPECT_EQ(buildDefinitional(4, kChebyshevU), IntPolynomial({1, 0, -12, 0, 16}));
    EXPECT_EQ(buildDefinitional(5, FamilyId{3, 2}), IntPolynomial({0, 3, 0, -7, 0, 4}));
    EXPECT_EQ(buildDefinitional(4, FamilyId{0, 3}), IntPolynomial({15, 0, -81, 0, 81}));
}

TEST(BuildDefinitional, ChebyshevSpecializations) {
    for (long n = 0; n <= 30; ++n) {
        EXPECT_EQ(buildDefinitional(n, kChebyshevU), fromInt64(testing::chebyshevByRecurrence(n, true))) << n;
        EXPECT_EQ(chebyshevU(n), buildDefinitional(n, kChebyshevU));
        if (n >= 1) {
            EXPECT_EQ(buildDefinitional(n, kChebyshevT), fromInt64(testing::chebyshevByRecurrence(n, false))) << n;
            EXPECT_EQ(chebyshevT(n), buildDefinitional(n, kChebyshevT));
        }
    }
}

TEST(BuildByReduction, PointValues) {
    EXPECT_EQ(buildByReduction(4, kPrincipalFamily), IntPolynomial({1, 0, -5, 0, 4}));
    EXPECT_EQ(buildByReduction(6, kPrincipalFamily), IntPolynomial({-1, 0, 13, 0, -28, 0, 16}));
    for (long n = 0; n <= 12; ++n) EXPECT_EQ(buildByReduction(n, FamilyId{0, 3}), buildDefinitional(n, FamilyId{0, 3}));
}

TEST(BuildByReduction, ChebyshevSecondKindComposition) {
    for (long n = 4; n <= 30; ++n) {
        const IntPolynomial composed =
            chebyshevU(n - 2).shifted(2) - chebyshevU(n - 3).shifted(1) * BigInteger(2) + chebyshevU(n - 4);
        EXPECT_EQ(composed, buildDefinitional(n, kPrincipalFamily)) << n;
    }
}

TEST(BuildByReduction, BelowTwiceM) {
    // rows m <= n < 2m drop the negative-index terms
    for (long p = 1; p <= 2; ++p) {
        for (long m = 1; m <= 6; ++m) {
            for (long n = m; n < 2 * m; ++n) EXPECT_EQ(buildByReduction(n, FamilyId{m, p}), buildDefinitional(n, FamilyId{m, p}));
        }
    }
}

TEST(BuildByReduction, BreaksForLargerBlocks) {
    for (long p = 3; p <= 4; ++p) {
        for (long m = 1; m <= 4; ++m) {
            for (long n = m; n <= m + 2; ++n) EXPECT_EQ(buildByReduction(n, FamilyId{m, p}), buildDefinitional(n, FamilyId{m, p}));
        }
        EXPECT_NE(buildByReduction(4, FamilyId{1, p}), buildDefinitional(4, FamilyId{1, p}));
    }
}

TEST(BuildByThreeTerm, Seeds) {
    EXPECT_EQ(buildByThreeTerm(2, kPrincipalFamily), IntPolynomial({0, 0, 1}));
    EXPECT_EQ(buildByThreeTerm(3, kPrincipalFamily), IntPolynomial({0, -2, 0, 2}));
    EXPECT_EQ(buildByThreeTerm(3, FamilyId{3, 2}), IntPolynomial({0, 0, 0, 1}));
    EXPECT_EQ(buildByThreeTerm(4, FamilyId{3, 2}), IntPolynomial({0, 0, -3, 0, 2}));
    EXPECT_EQ(buildByThreeTerm(5, kPrincipalFamily), IntPolynomial({0, 4, 0, -12, 0, 8}));
    EXPECT_THROW((void)buildByThreeTerm(4, FamilyId{2, 3}), std::invalid_argument);
    EXPECT_THROW((void)buildByThreeTerm(1, kPrincipalFamily), std::invalid_argument);
}

TEST(BuildByThreeTerm, PlainRecurrenceNeedsBoundaryTerm) {
    EXPECT_EQ(buildByThreeTermPrinted(4, kPrincipalFamily), IntPolynomial({0, 0, -5, 0, 4}));
    EXPECT_NE(buildByThreeTermPrinted(4, kPrincipalFamily), buildDefinitional(4, kPrincipalFamily));
    for (long n = 0; n <= 30; ++n) {
        EXPECT_EQ(buildByThreeTermPrinted(n, kChebyshevU), buildDefinitional(n, kChebyshevU));
        if (n >= 1) EXPECT_EQ(buildByThreeTermPrinted(n, kChebyshevT), buildDefinitional(n, kChebyshevT));
    }
    for (long m = 2; m <= 6; ++m) {
        EXPECT_EQ(buildByThreeTermPrinted(m + 1, FamilyId{m, 2}), buildDefinitional(m + 1, FamilyId{m, 2}));
        EXPECT_NE(buildByThreeTermPrinted(m + 2, FamilyId{m, 2}), buildDefinitional(m + 2, FamilyId{m, 2})) << m;
    }
}

TEST(BuildViaTRecurrence, PointValues) {
    for (long n = 2; n <= 10; ++n) EXPECT_EQ(buildViaTRecurrence(n, kPrincipalFamily, 0), buildDefinitional(n, kPrincipalFamily));
    EXPECT_EQ(buildViaTRecurrence(4, kPrincipalFamily, 2), IntPolynomial({1, 0, -5, 0, 4}));
    EXPECT_THROW((void)buildViaTRecurrence(4, kPrincipalFamily, -1), std::invalid_argument);
}

TEST(BuildViaTRecurrence, FirstKindForm) {
    for (long n = 3; n <= 30; ++n) {
        const IntPolynomial viaT = chebyshevT(n - 1).shifted(1) - chebyshevT(n - 2);
        EXPECT_EQ(viaT, buildDefinitional(n, kPrincipalFamily)) << n;
    }
    EXPECT_NE(chebyshevT(1).shifted(1) - chebyshevT(0), buildDefinitional(2, kPrincipalFamily));
}

TEST(FourWay, AgreeForPEqualsTwo) {
    for (long m = 0; m <= 6; ++m) {
        const FamilyId f{m, 2};
        for (long n = m; n <= 24; ++n) {
            const IntPolynomial def = buildDefinitional(n, f);
            ASSERT_EQ(buildByReduction(n, f), def) << m << "," << n;
            ASSERT_EQ(buildByThreeTerm(n, f), def) << m << "," << n;
            for (long t = 0; t <= 3; ++t) ASSERT_EQ(buildViaTRecurrence(n, f, t), def) << m << "," << n << "," << t;
        }
    }
}

TEST(BuildViaTRecurrence, HoldsForUnitBlocks) {
    for (long m = 0; m <= 4; ++m) {
        for (long n = m; n <= 14; ++n) {
            for (long t = 0; t <= 3; ++t) EXPECT_EQ(buildViaTRecurrence(n, FamilyId{m, 1}, t), buildDefinitional(n, FamilyId{m, 1}));
        }
    }
}

TEST(BuildViaTRecurrence, BreaksForLargerBlocks) {
    // p >= 3: the underlying count has mass at negative powers of x, which the
    // triangle truncates
    EXPECT_NE(buildViaTRecurrence(2, FamilyId{0, 3}, 1), buildDefinitional(2, FamilyId{0, 3}));
    EXPECT_EQ(buildViaTRecurrence(2, FamilyId{0, 3}, 0), buildDefinitional(2, FamilyId{0, 3}));
}

TEST(CoeffRecurrenceE2, PointValues) {
    EXPECT_EQ(coeffRecurrenceE2(4, 2, kPrincipalFamily, 0), coefficient(4, 2, kPrincipalFamily));
    EXPECT_EQ(coeffRecurrenceE2(4, 2, kPrincipalFamily, 1), -5);
    EXPECT_EQ(coeffRecurrenceE2(5, 1, kPrincipalFamily, 2), 4);
}

TEST(CoeffRecurrenceE2, AgreesOnTriangleForPAtMostTwo) {
    for (long p = 1; p <= 2; ++p) {
        for (long m = 0; m <= 5; ++m) {
            for (long n = m; n <= 16; ++n) {
                for (long k = 0; k <= n; ++k) {
                    for (long t = 0; t <= 3; ++t) {
                        ASSERT_EQ(coeffRecurrenceE2(n, k, FamilyId{m, p}, t), coefficient(n, k, FamilyId{m, p}));
                    }
                }
            }
        }
    }
}

TEST(CoeffRecurrenceE3, PointValues) {
    EXPECT_EQ(coefficient(2, 2, kChebyshevU), 4);
    EXPECT_EQ(coeffRecurrenceE3(2, 2, kChebyshevU, E3Variant::Printed), -2);
    EXPECT_EQ(coeffRecurrenceE3(2, 2, kChebyshevU, E3Variant::Corrected), 4);
    EXPECT_EQ(coeffRecurrenceE3(4, 2, kPrincipalFamily, E3Variant::Corrected), -5);
    EXPECT_THROW((void)coeffRecurrenceE3(2, 2, FamilyId{0, 1}, E3Variant::Corrected), std::invalid_argument);
}

TEST(CoeffRecurrenceE3, CorrectedDomain) {
    // valid when (n+k)/2 - m >= 1, and for p >= 3 additionally k >= 1
    for (long p = 2; p <= 4; ++p) {
        for (long m = 0; m <= 4; ++m) {
            const FamilyId f{m, p};
            for (long n = m; n <= 14; ++n) {
                for (long k = 0; k <= n; ++k) {
                    if ((n - k) % 2 != 0) continue;
                    const bool inDomain = (n + k) / 2 - m >= 1 && (p == 2 || k >= 1);
                    if (inDomain) {
                        ASSERT_EQ(coeffRecurrenceE3(n, k, f, E3Variant::Corrected), coefficient(n, k, f))
                            << n << " " << k << " " << m << " " << p;
                    }
                }
            }
        }
    }
    // boundary row (n+k)/2 = m: the leading coefficient of the first row
    EXPECT_EQ(coeffRecurrenceE3(2, 2, kPrincipalFamily, E3Variant::Corrected), 0);
    EXPECT_EQ(coefficient(2, 2, kPrincipalFamily), 1);
}

TEST(CoeffTripleSum, PointValues) {
    EXPECT_EQ(coeffTripleSum(2, 2, kChebyshevU), 4);
    EXPECT_EQ(coeffTripleSum(3, 1, kChebyshevT), -19);
    EXPECT_EQ(coefficient(3, 1, kChebyshevT), -3);
    EXPECT_EQ(coeffTripleSum(2, 0, kPrincipalFamily), -10);
    EXPECT_EQ(coefficient(2, 0, kPrincipalFamily), 0);
    EXPECT_EQ(coeffTripleSum(2, 0, kChebyshevU), -4);
    EXPECT_EQ(coefficient(2, 0, kChebyshevU), -1);
}

TEST(ChebyshevUCoefficient, PointValues) {
    EXPECT_EQ(chebyshevUCoefficient(2, 2), 4);
    EXPECT_EQ(chebyshevUCoefficient(2, 0), -1);
    EXPECT_EQ(chebyshevUCoefficient(5, 2), 0);
    for (long n = 0; n <= 30; ++n) {
        for (long k = 0; k <= n; ++k) ASSERT_EQ(chebyshevUCoefficient(n, k), coefficient(n, k, kChebyshevU));
    }
}

TEST(CoeffTriangle, ConcurrentReaders) {
    const FamilyId f{4, 3};
    std::vector<std::thread> threads;
    std::vector<BigInteger> seen(8);
    for (int i = 0; i < 8; ++i) {
        threads.emplace_back([&, i] { seen[static_cast<std::size_t>(i)] = triangleFor(f).row(20 + i)[static_cast<std::size_t>(20 + i)]; });
    }
    for (auto& t : threads) t.join();
    BigInteger power = 1;
    for (int i = 0; i < 16; ++i) power *= 3;
    for (int i = 0; i < 8; ++i) {
        EXPECT_EQ(seen[static_cast<std::size_t>(i)], power);
        power *= 3;
    }
    EXPECT_GE(triangleFor(f).cachedRows(), 24);
}

}  // namespace
}  // namespace chebfam
