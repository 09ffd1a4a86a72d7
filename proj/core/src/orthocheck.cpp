#include "chebfam/orthocheck.hpp"

#include "chebfam/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace chebfam {

namespace {

using std::numbers::pi;

const TrigPoly& cachedCosPower(long k) {
    static std::mutex mutex;
    static std::vector<TrigPoly> cache;
    std::lock_guard lock(mutex);
    while (static_cast<long>(cache.size()) <= k) cache.push_back(cosPowerExpand(static_cast<long>(cache.size())));
    return cache[static_cast<std::size_t>(k)];
}

struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Gauss-Legendre on [-1, 1] by Newton iteration on P_N.
GaussRule gaussLegendre(int order) {
    GaussRule rule;
    rule.nodes.resize(static_cast<std::size_t>(order));
    rule.weights.resize(static_cast<std::size_t>(order));
    for (int i = 0; i < order; ++i) {
        double x = std::cos(pi * (i + 0.75) / (order + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= order; ++k) {
                const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = pk;
            }
            dp = order * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        rule.nodes[static_cast<std::size_t>(i)] = x;
        rule.weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

}  // namespace

void requireValidWeight(WeightSpec w) {
    if (w.halfExponent < -1) {
        throw std::invalid_argument("weight half-exponent must be >= -1, got " + std::to_string(w.halfExponent));
    }
}

long sinExponentAfterSubstitution(WeightSpec w) {
    requireValidWeight(w);
    return w.halfExponent + 1;
}

TrigPoly measureFactor(WeightSpec w) { return sinPowerExpand(sinExponentAfterSubstitution(w)); }

TrigPoly substituteCos(const IntPolynomial& p) {
    TrigPoly out;
    for (long k = 0; k <= p.degree(); ++k) {
        const BigInteger& c = p.coeffs()[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        out += cachedCosPower(k) * BigRational(c);
    }
    return out;
}

PiRational innerProductExact(const IntPolynomial& a, const IntPolynomial& b, WeightSpec w) {
    const TrigPoly integrand = trigMul(trigMul(substituteCos(a), substituteCos(b)), measureFactor(w));
    return trigIntegrate0ToPi(integrand);
}

PiRational innerProductExact(long n, long m, FamilyId family, WeightSpec w) {
    return innerProductExact(buildDefinitional(n, family), buildDefinitional(m, family), w);
}

double innerProductNumeric(long n, long m, FamilyId family, WeightSpec w) {
    const long sinPower = sinExponentAfterSubstitution(w);
    const IntPolynomial a = buildDefinitional(n, family);
    const IntPolynomial b = buildDefinitional(m, family);
    auto integrand = [&](double theta) {
        const double c = std::cos(theta);
        return std::pow(std::sin(theta), static_cast<double>(sinPower)) * evaluate(a, c) * evaluate(b, c);
    };
    const long nodes = 8 * (n + m + w.halfExponent + 4);
    if (sinPower % 2 == 0) {
        // even in theta and 2pi-periodic: the trapezoid rule is exact for
        // every frequency below the node count
        const double h = pi / static_cast<double>(nodes);
        double sum = 0.5 * (integrand(0.0) + integrand(pi));
        for (long i = 1; i < nodes; ++i) sum += integrand(h * static_cast<double>(i));
        return sum * h;
    }
    const GaussRule rule = gaussLegendre(static_cast<int>(std::max<long>(nodes, 64)));
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        sum += rule.weights[i] * integrand(0.5 * pi * (rule.nodes[i] + 1.0));
    }
    return 0.5 * pi * sum;
}

double toDouble(const PiRational& v) { return v.piPart.get_d() * pi + v.rationalPart.get_d(); }

const GramEntry& GramMatrix::at(long n, long m) const {
    if (n < first || n > last || m < first || m > last) throw std::out_of_range("GramMatrix::at");
    return entries[static_cast<std::size_t>(n - first)][static_cast<std::size_t>(m - first)];
}

std::vector<BandSummary> GramMatrix::bands() const {
    std::vector<BandSummary> out;
    for (long d = 0; d <= last - first; ++d) {
        BandSummary band{d, true, std::nullopt};
        for (long n = first; n + d <= last; ++n) {
            const PiRational& v = at(n, n + d).exactValue;
            if (!band.value) {
                band.value = v;
            } else if (!(*band.value == v)) {
                band.uniform = false;
            }
        }
        if (!band.uniform) band.value.reset();
        out.push_back(std::move(band));
    }
    return out;
}

double GramMatrix::maxBackendDiscrepancy() const {
    double worst = 0.0;
    for (const auto& row : entries) {
        for (const auto& e : row) {
            if (e.numericValue) worst = std::max(worst, std::abs(toDouble(e.exactValue) - *e.numericValue));
        }
    }
    return worst;
}

GramMatrix gramMatrix(long first, long last, FamilyId family, WeightSpec w, bool withNumeric) {
    requireValidFamily(family);
    requireValidWeight(w);
    if (first < family.m || last < first) throw std::invalid_argument("gramMatrix: invalid row range");
    GramMatrix g{first, last, family, w, {}};
    const auto size = static_cast<std::size_t>(last - first + 1);
    g.entries.assign(size, std::vector<GramEntry>(size));
    for (long n = first; n <= last; ++n) {
        for (long m = n; m <= last; ++m) {
            GramEntry e{n, m, family, w, innerProductExact(n, m, family, w), std::nullopt};
            if (withNumeric) e.numericValue = innerProductNumeric(n, m, family, w);
            GramEntry mirror = e;
            std::swap(mirror.n, mirror.m);
            g.entries[static_cast<std::size_t>(n - first)][static_cast<std::size_t>(m - first)] = std::move(e);
            g.entries[static_cast<std::size_t>(m - first)][static_cast<std::size_t>(n - first)] = std::move(mirror);
        }
    }
    return g;
}

}  // namespace chebfam
