#pragma once

// Exact arithmetic layer: big integers/rationals, the out-of-range binomial
// convention, and trigonometric polynomials integrated in closed form on [0, pi].
// Nothing in here touches floating point.

#include <gmpxx.h>

#include <map>
#include <string>

namespace chebfam {

using BigInteger = mpz_class;
using BigRational = mpq_class;

/// C(n, k) with the vanishing convention: 0 whenever k < 0, k > n or n < 0.
[[nodiscard]] BigInteger binomial(long n, long k);

/// Canonical rational num/den. Throws std::domain_error on a zero denominator.
[[nodiscard]] BigRational makeRational(const BigInteger& num, const BigInteger& den);

/// piPart * pi + rationalPart, exactly.
struct PiRational {
    BigRational piPart{0};
    BigRational rationalPart{0};

    PiRational& operator+=(const PiRational& o);
    friend PiRational operator+(PiRational a, const PiRational& b) { return a += b; }
    friend bool operator==(const PiRational& a, const PiRational& b) {
        return a.piPart == b.piPart && a.rationalPart == b.rationalPart;
    }

    [[nodiscard]] bool isZero() const { return piPart == 0 && rationalPart == 0; }
    static PiRational pi(const BigRational& c) { return {c, BigRational(0)}; }
    static PiRational rational(const BigRational& c) { return {BigRational(0), c}; }
};

/// "a*pi + b", "a*pi", "b" or "0" with a, b in lowest terms.
[[nodiscard]] std::string toString(const PiRational& v);

/// Finite sum  sum_j a_j cos(j theta) + sum_j b_j sin(j theta),  j >= 0.
/// Canonical form: no zero coefficients stored, no sin(0) term, no negative
/// frequencies. Equality is therefore structural.
class TrigPoly {
public:
    using Terms = std::map<long, BigRational>;

    TrigPoly() = default;

    static TrigPoly constant(const BigRational& c);
    static TrigPoly cosine(long freq, const BigRational& c = BigRational(1));
    static TrigPoly sine(long freq, const BigRational& c = BigRational(1));

    [[nodiscard]] const Terms& cosTerms() const { return cos_; }
    [[nodiscard]] const Terms& sinTerms() const { return sin_; }
    [[nodiscard]] bool isZero() const { return cos_.empty() && sin_.empty(); }
    [[nodiscard]] long maxFrequency() const;

    /// Accumulate c*cos(freq theta); negative frequencies are folded.
    void addCos(long freq, const BigRational& c);
    /// Accumulate c*sin(freq theta); sin(-j) = -sin(j), sin(0) vanishes.
    void addSin(long freq, const BigRational& c);

    TrigPoly& operator+=(const TrigPoly& o);
    TrigPoly& operator-=(const TrigPoly& o);
    TrigPoly& operator*=(const BigRational& s);

    friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
    friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) { return a -= b; }
    friend TrigPoly operator*(TrigPoly a, const BigRational& s) { return a *= s; }
    friend bool operator==(const TrigPoly& a, const TrigPoly& b) {
        return a.cos_ == b.cos_ && a.sin_ == b.sin_;
    }

private:
    Terms cos_;
    Terms sin_;
};

/// Product linearized with the product-to-sum identities.
[[nodiscard]] TrigPoly trigMul(const TrigPoly& a, const TrigPoly& b);

/// Exact integral over [0, pi]:  cos(0) -> pi, cos(j) -> 0, sin(j) -> 2/j (j odd), 0 (j even).
[[nodiscard]] PiRational trigIntegrate0ToPi(const TrigPoly& t);

/// cos^k(theta) = 2^{-k} sum_i C(k, i) cos((k - 2i) theta).
[[nodiscard]] TrigPoly cosPowerExpand(long k);

/// sin^k(theta), built by repeated exact multiplication.
[[nodiscard]] TrigPoly sinPowerExpand(long k);

[[nodiscard]] std::string toString(const TrigPoly& t);

}  // namespace chebfam
