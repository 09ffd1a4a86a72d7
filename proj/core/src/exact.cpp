#include "chebfam/exact.hpp"

#include <sstream>
#include <stdexcept>

namespace chebfam {

BigInteger binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return BigInteger(0);
    BigInteger r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigRational makeRational(const BigInteger& num, const BigInteger& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    BigRational r(num, den);
    r.canonicalize();
    return r;
}

PiRational& PiRational::operator+=(const PiRational& o) {
    piPart += o.piPart;
    rationalPart += o.rationalPart;
    return *this;
}

std::string toString(const PiRational& v) {
    std::ostringstream os;
    const bool hasPi = v.piPart != 0;
    const bool hasRat = v.rationalPart != 0;
    if (!hasPi && !hasRat) return "0";
    if (hasPi) os << v.piPart.get_str() << "*pi";
    if (hasRat) {
        if (hasPi) {
            os << (v.rationalPart < 0 ? " - " : " + ");
            BigRational mag = abs(v.rationalPart);
            os << mag.get_str();
        } else {
            os << v.rationalPart.get_str();
        }
    }
    return os.str();
}

namespace {

void accumulate(TrigPoly::Terms& terms, long freq, const BigRational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms.try_emplace(freq, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

}  // namespace

TrigPoly TrigPoly::constant(const BigRational& c) {
    TrigPoly t;
    t.addCos(0, c);
    return t;
}

TrigPoly TrigPoly::cosine(long freq, const BigRational& c) {
    TrigPoly t;
    t.addCos(freq, c);
    return t;
}

TrigPoly TrigPoly::sine(long freq, const BigRational& c) {
    TrigPoly t;
    t.addSin(freq, c);
    return t;
}

long TrigPoly::maxFrequency() const {
    long f = 0;
    if (!cos_.empty()) f = std::max(f, cos_.rbegin()->first);
    if (!sin_.empty()) f = std::max(f, sin_.rbegin()->first);
    return f;
}

void TrigPoly::addCos(long freq, const BigRational& c) {
    accumulate(cos_, freq < 0 ? -freq : freq, c);
}

void TrigPoly::addSin(long freq, const BigRational& c) {
    if (freq == 0) return;
    if (freq < 0) {
        accumulate(sin_, -freq, -c);
    } else {
        accumulate(sin_, freq, c);
    }
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& o) {
    for (const auto& [j, c] : o.cos_) addCos(j, c);
    for (const auto& [j, c] : o.sin_) addSin(j, c);
    return *this;
}

TrigPoly& TrigPoly::operator-=(const TrigPoly& o) {
    for (const auto& [j, c] : o.cos_) addCos(j, -c);
    for (const auto& [j, c] : o.sin_) addSin(j, -c);
    return *this;
}

TrigPoly& TrigPoly::operator*=(const BigRational& s) {
    if (s == 0) {
        cos_.clear();
        sin_.clear();
        return *this;
    }
    for (auto& [j, c] : cos_) c *= s;
    for (auto& [j, c] : sin_) c *= s;
    return *this;
}

TrigPoly trigMul(const TrigPoly& a, const TrigPoly& b) {
    const BigRational half(1, 2);
    TrigPoly out;
    // cos a cos b = (cos(a-b) + cos(a+b)) / 2
    // sin a sin b = (cos(a-b) - cos(a+b)) / 2
    // sin a cos b = (sin(a+b) + sin(a-b)) / 2
    for (const auto& [i, ci] : a.cosTerms()) {
        for (const auto& [j, cj] : b.cosTerms()) {
            BigRational h = ci * cj * half;
            out.addCos(i - j, h);
            out.addCos(i + j, h);
        }
        for (const auto& [j, sj] : b.sinTerms()) {
            BigRational h = ci * sj * half;
            out.addSin(j + i, h);
            out.addSin(j - i, h);
        }
    }
    for (const auto& [i, si] : a.sinTerms()) {
        for (const auto& [j, cj] : b.cosTerms()) {
            BigRational h = si * cj * half;
            out.addSin(i + j, h);
            out.addSin(i - j, h);
        }
        for (const auto& [j, sj] : b.sinTerms()) {
            BigRational h = si * sj * half;
            out.addCos(i - j, h);
            out.addCos(i + j, -h);
        }
    }
    return out;
}

PiRational trigIntegrate0ToPi(const TrigPoly& t) {
    PiRational r;
    if (auto it = t.cosTerms().find(0); it != t.cosTerms().end()) r.piPart = it->second;
    for (const auto& [j, c] : t.sinTerms()) {
        if (j % 2 == 1) r.rationalPart += c * BigRational(2, j);
    }
    r.rationalPart.canonicalize();
    return r;
}

TrigPoly cosPowerExpand(long k) {
    if (k < 0) throw std::invalid_argument("cosPowerExpand: negative power");
    TrigPoly t;
    BigInteger denom = 1;
    denom <<= static_cast<mp_bitcnt_t>(k);
    for (long i = 0; i <= k; ++i) {
        t.addCos(k - 2 * i, makeRational(binomial(k, i), denom));
    }
    return t;
}

TrigPoly sinPowerExpand(long k) {
    if (k < 0) throw std::invalid_argument("sinPowerExpand: negative power");
    TrigPoly t = TrigPoly::constant(BigRational(1));
    const TrigPoly s = TrigPoly::sine(1);
    for (long i = 0; i < k; ++i) t = trigMul(t, s);
    return t;
}

std::string toString(const TrigPoly& t) {
    if (t.isZero()) return "0";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const BigRational& c, const char* fn, long j) {
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        BigRational mag = abs(c);
        if (j == 0) {
            os << mag.get_str();
            return;
        }
        if (mag != 1) os << mag.get_str() << "*";
        os << fn << "(" << j << "t)";
    };
    for (const auto& [j, c] : t.cosTerms()) emit(c, "cos", j);
    for (const auto& [j, c] : t.sinTerms()) emit(c, "sin", j);
    return os.str();
}

}  // namespace chebfam
