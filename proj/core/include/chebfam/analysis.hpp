#pragma once

#include "chebfam/exact.hpp"
#include "chebfam/polyfamily.hpp"
#include "chebfam/polynomial.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace chebfam {

class ConvergenceFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact Horner evaluation.
[[nodiscard]] BigRational evaluate(const IntPolynomial& poly, const BigRational& x);

/// Compensated Horner: the result is as accurate as plain Horner carried out in
/// twice the working precision, then rounded. Coefficients beyond 2^53 are
/// rounded on conversion.
[[nodiscard]] double evaluate(const IntPolynomial& poly, double x);

/// P_n(cos theta) + sin(theta) sin((n-1) theta) for the (2,2) family. Throws
/// std::invalid_argument for n < 2; n = 2 is accepted but need not vanish.
[[nodiscard]] double trigFormResidual(long n, double theta);

/// Real roots in ascending order with multiplicities.
struct RootSet {
    long n = -1;
    std::optional<FamilyId> family;
    std::vector<double> roots;
    std::vector<int> multiplicities;

    [[nodiscard]] long countWithMultiplicity() const;
};

/// {-1, 1} and cos(k pi / (n-1)), k = 1..n-2, for the (2,2) family, n >= 3.
[[nodiscard]] RootSet closedFormZeros(long n);

/// Real roots of a nonzero polynomial. The polynomial is split into exact
/// square-free factors (Yun), each factor's real-root count is fixed by a
/// Sturm sequence, and roots are bracketed by sign changes on a grid and
/// bisected to full precision. A companion-matrix eigen solve backs up grids
/// that miss clustered roots; ConvergenceFailure if the count still falls short.
[[nodiscard]] RootSet numericZeros(const IntPolynomial& poly);
/// Same for row n of a family; (2,2) searches [-1-1e-6, 1+1e-6].
[[nodiscard]] RootSet numericZeros(long n, FamilyId family);

struct Extremum {
    double theta = 0.0;
    double x = 0.0;
};

/// Critical points of P_n on [-1, 1] for the (2,2) family, n >= 3, ordered by
/// theta: theta = 0, the n-1 interior solutions of
/// (n-1) tan(theta) + tan((n-1) theta) = 0, and theta = pi.
[[nodiscard]] std::vector<Extremum> extrema(long n);

/// (n-1) tan(theta) + tan((n-1) theta).
[[nodiscard]] double extremumEquation(long n, double theta);

/// max of P_n(x)^2 + x^2 over `samples` equispaced points of [-1, 1].
[[nodiscard]] double boundCheck(long n, long samples);

/// sup |P_n| / 2^{n-2} on [-1, 1], from a dense grid plus the extrema.
[[nodiscard]] double monicSupNorm(long n);

}  // namespace chebfam
