#pragma once

// Weighted inner products  int_{-1}^{1} (1-x^2)^{q/2} P_n(x) P_m(x) dx.
// With x = cos(theta) the integrand becomes sin^{q+1}(theta) P_n(cos) P_m(cos)
// on [0, pi]: one sine from dx, q from the weight.

#include "chebfam/exact.hpp"
#include "chebfam/polyfamily.hpp"
#include "chebfam/polynomial.hpp"

#include <map>
#include <optional>
#include <vector>

namespace chebfam {

/// w(x) = (1-x^2)^{q/2}; q = -1 first kind, 0 unit weight, 1 second kind.
struct WeightSpec {
    long halfExponent = -1;

    friend bool operator==(const WeightSpec&, const WeightSpec&) = default;
};

/// Throws std::invalid_argument for q < -1.
void requireValidWeight(WeightSpec w);

/// Power of sin(theta) in the substituted integrand: q + 1.
[[nodiscard]] long sinExponentAfterSubstitution(WeightSpec w);

/// sin^{q+1}(theta) as an exact trig polynomial.
[[nodiscard]] TrigPoly measureFactor(WeightSpec w);

/// P(cos theta) via cos-power linearization of each monomial.
[[nodiscard]] TrigPoly substituteCos(const IntPolynomial& p);

[[nodiscard]] PiRational innerProductExact(const IntPolynomial& a, const IntPolynomial& b, WeightSpec w);
[[nodiscard]] PiRational innerProductExact(long n, long m, FamilyId family, WeightSpec w);

/// Quadrature in theta: composite trapezoid with N >= 8(n+m+q+4) nodes when q
/// is odd (the integrand is then a cosine polynomial and the rule is exact);
/// Gauss-Legendre on [0, pi] when q is even (odd sine terms appear).
[[nodiscard]] double innerProductNumeric(long n, long m, FamilyId family, WeightSpec w);

[[nodiscard]] double toDouble(const PiRational& v);

struct GramEntry {
    long n = 0;
    long m = 0;
    FamilyId family;
    WeightSpec weight;
    PiRational exactValue;
    std::optional<double> numericValue;
};

/// Entries sharing |n - m|.
struct BandSummary {
    long offset = 0;
    bool uniform = false;
    std::optional<PiRational> value;  ///< set iff uniform
};

struct GramMatrix {
    long first = 0;
    long last = 0;
    FamilyId family;
    WeightSpec weight;
    std::vector<std::vector<GramEntry>> entries;  ///< entries[i][j] is (first+i, first+j)

    [[nodiscard]] const GramEntry& at(long n, long m) const;
    [[nodiscard]] std::vector<BandSummary> bands() const;
    /// Largest |exact - numeric| over the matrix; 0 when no numeric values.
    [[nodiscard]] double maxBackendDiscrepancy() const;
};

/// Rows first..last of the family; the symmetric half is filled by mirroring.
[[nodiscard]] GramMatrix gramMatrix(long first, long last, FamilyId family, WeightSpec w, bool withNumeric = true);

}  // namespace chebfam
