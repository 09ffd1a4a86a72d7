#pragma once

#include "chebfam/exact.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace chebfam {

/// Dense univariate polynomial with exact integer coefficients; coeffs()[k]
/// multiplies x^k. The highest stored coefficient is nonzero, and the zero
/// polynomial stores nothing (degree -1).
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInteger> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    /// c * x^k
    static IntPolynomial monomial(long k, const BigInteger& c = BigInteger(1));

    [[nodiscard]] const std::vector<BigInteger>& coeffs() const { return coeffs_; }
    [[nodiscard]] long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    [[nodiscard]] bool isZero() const { return coeffs_.empty(); }
    /// Coefficient of x^k; 0 outside [0, degree].
    [[nodiscard]] BigInteger coeff(long k) const;
    [[nodiscard]] BigInteger leading() const { return isZero() ? BigInteger(0) : coeffs_.back(); }

    [[nodiscard]] IntPolynomial derivative() const;
    /// Multiply by x^k, k >= 0.
    [[nodiscard]] IntPolynomial shifted(long k) const;

    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial& operator-=(const IntPolynomial& o);
    IntPolynomial& operator*=(const BigInteger& s);

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(IntPolynomial a, const BigInteger& s) { return a *= s; }
    friend IntPolynomial operator*(const BigInteger& s, IntPolynomial a) { return a *= s; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

private:
    void normalize();

    std::vector<BigInteger> coeffs_;
};

/// Human form, highest power first: "16x^6 - 28x^4 + 13x^2 - 1".
[[nodiscard]] std::string toString(const IntPolynomial& p);

}  // namespace chebfam
