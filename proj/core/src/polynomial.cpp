#include "chebfam/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace chebfam {

IntPolynomial::IntPolynomial(std::vector<BigInteger> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

IntPolynomial IntPolynomial::monomial(long k, const BigInteger& c) {
    if (k < 0) throw std::invalid_argument("monomial: negative power");
    std::vector<BigInteger> v(static_cast<std::size_t>(k) + 1);
    v.back() = c;
    return IntPolynomial(std::move(v));
}

void IntPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInteger IntPolynomial::coeff(long k) const {
    if (k < 0 || k > degree()) return BigInteger(0);
    return coeffs_[static_cast<std::size_t>(k)];
}

IntPolynomial IntPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<BigInteger> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
    return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::shifted(long k) const {
    if (k < 0) throw std::invalid_argument("shifted: negative shift");
    if (isZero()) return {};
    std::vector<BigInteger> v(static_cast<std::size_t>(k));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return IntPolynomial(std::move(v));
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    normalize();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    normalize();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInteger& s) {
    for (auto& c : coeffs_) c *= s;
    normalize();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.isZero() || b.isZero()) return {};
    std::vector<BigInteger> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPolynomial(std::move(v));
}

std::string toString(const IntPolynomial& p) {
    if (p.isZero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long k = p.degree(); k >= 0; --k) {
        const BigInteger& c = p.coeffs()[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        BigInteger mag = abs(c);
        if (k == 0 || mag != 1) os << mag.get_str();
        if (k >= 1) os << "x";
        if (k >= 2) os << "^" << k;
    }
    return os.str();
}

}  // namespace chebfam
