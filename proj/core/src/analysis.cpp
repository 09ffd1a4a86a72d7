#include "chebfam/analysis.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

namespace chebfam {

namespace {

using std::numbers::pi;

// ---- dense polynomials over Q, only what the square-free split needs ----

using QPoly = std::vector<BigRational>;

void trim(QPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

QPoly toQ(const IntPolynomial& p) {
    QPoly q;
    q.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) q.emplace_back(c);
    return q;
}

QPoly derivative(const QPoly& a) {
    QPoly d;
    for (std::size_t k = 1; k < a.size(); ++k) d.push_back(a[k] * static_cast<unsigned long>(k));
    trim(d);
    return d;
}

QPoly sub(QPoly a, const QPoly& b) {
    if (b.size() > a.size()) a.resize(b.size());
    for (std::size_t k = 0; k < b.size(); ++k) a[k] -= b[k];
    trim(a);
    return a;
}

// quotient and remainder, b nonzero
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
    trim(a);
    if (a.size() < b.size()) return {QPoly{}, a};
    QPoly q(a.size() - b.size() + 1);
    const BigRational& lead = b.back();
    while (!a.empty() && a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        BigRational f = a.back() / lead;
        q[shift] = f;
        for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= f * b[k];
        a.pop_back();
        trim(a);
    }
    trim(q);
    return {q, a};
}

QPoly monic(QPoly a) {
    trim(a);
    if (a.empty()) return a;
    BigRational lead = a.back();
    for (auto& c : a) c /= lead;
    return a;
}

QPoly gcd(QPoly a, QPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        QPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(std::move(a));
}

long degree(const QPoly& a) { return static_cast<long>(a.size()) - 1; }

// Yun's algorithm: f = prod_i a_i^i with each a_i square-free and coprime.
std::vector<std::pair<QPoly, int>> squareFreeFactors(const QPoly& f) {
    std::vector<std::pair<QPoly, int>> out;
    const QPoly fp = derivative(f);
    QPoly a0 = gcd(f, fp);
    QPoly b = divmod(f, a0).first;
    QPoly c = divmod(fp, a0).first;
    QPoly d = sub(c, derivative(b));
    for (int i = 1; degree(b) >= 1; ++i) {
        QPoly a = gcd(b, d);
        b = divmod(b, a).first;
        c = divmod(d, a).first;
        d = sub(c, derivative(b));
        if (degree(a) >= 1) out.emplace_back(monic(a), i);
    }
    return out;
}

int signAtInfinity(const QPoly& a, bool positive) {
    const int leadSign = sgn(a.back());
    if (positive || degree(a) % 2 == 0) return leadSign;
    return -leadSign;
}

long sturmRealRootCount(const QPoly& f) {
    std::vector<QPoly> seq{f, derivative(f)};
    while (!seq.back().empty() && degree(seq.back()) >= 1) {
        QPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
        for (auto& c : r) c = -c;
        if (r.empty()) break;
        seq.push_back(std::move(r));
    }
    auto variations = [&](bool positive) {
        long v = 0;
        int last = 0;
        for (const auto& s : seq) {
            if (s.empty()) continue;
            const int sg = signAtInfinity(s, positive);
            if (sg != 0 && last != 0 && sg != last) ++v;
            if (sg != 0) last = sg;
        }
        return v;
    };
    return variations(false) - variations(true);
}

std::vector<double> toDoubles(const QPoly& a) {
    std::vector<double> v;
    v.reserve(a.size());
    for (const auto& c : a) v.push_back(c.get_d());
    return v;
}

// compensated Horner on double coefficients
double compensatedHorner(const std::vector<double>& c, double x) {
    if (c.empty()) return 0.0;
    double s = c.back();
    double err = 0.0;
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        const double prod = s * x;
        const double prodErr = std::fma(s, x, -prod);
        const double sum = prod + c[i];
        const double t = sum - prod;
        const double sumErr = (prod - (sum - t)) + (c[i] - t);
        s = sum;
        err = err * x + (prodErr + sumErr);
    }
    return s + err;
}

double bisect(const std::vector<double>& c, double lo, double hi) {
    double flo = compensatedHorner(c, lo);
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double fm = compensatedHorner(c, mid);
        if (fm == 0.0) return mid;
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::vector<double> gridRoots(const std::vector<double>& c, double lo, double hi, long cells) {
    std::vector<double> roots;
    double xPrev = lo;
    double fPrev = compensatedHorner(c, xPrev);
    if (fPrev == 0.0) roots.push_back(xPrev);
    for (long i = 1; i <= cells; ++i) {
        const double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(cells);
        const double fx = compensatedHorner(c, x);
        if (fx == 0.0) {
            roots.push_back(x);
        } else if (fPrev != 0.0 && (fx < 0) != (fPrev < 0)) {
            roots.push_back(bisect(c, xPrev, x));
        }
        xPrev = x;
        fPrev = fx;
    }
    return roots;
}

std::vector<double> companionRealRoots(const std::vector<double>& c) {
    const auto d = static_cast<Eigen::Index>(c.size()) - 1;
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(d, d);
    for (Eigen::Index i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
    for (Eigen::Index i = 0; i < d; ++i) comp(i, d - 1) = -c[static_cast<std::size_t>(i)] / c.back();
    Eigen::EigenSolver<Eigen::MatrixXd> solver(comp, false);
    std::vector<double> out;
    for (const auto& ev : solver.eigenvalues()) {
        if (std::abs(ev.imag()) <= 1e-7 * (1.0 + std::abs(ev.real()))) out.push_back(ev.real());
    }
    return out;
}

// Newton polish, falls back to the input when it wanders off.
double polish(const std::vector<double>& c, double x) {
    std::vector<double> dc;
    for (std::size_t k = 1; k < c.size(); ++k) dc.push_back(c[k] * static_cast<double>(k));
    double cur = x;
    for (int it = 0; it < 50; ++it) {
        const double f = compensatedHorner(c, cur);
        const double df = compensatedHorner(dc, cur);
        if (f == 0.0 || df == 0.0) break;
        const double next = cur - f / df;
        if (!std::isfinite(next) || std::abs(next - x) > 1e-3 * (1.0 + std::abs(x))) return x;
        if (next == cur) break;
        cur = next;
    }
    return cur;
}

void dedupe(std::vector<double>& roots, double tol) {
    std::sort(roots.begin(), roots.end());
    std::vector<double> out;
    for (double r : roots) {
        if (out.empty() || r - out.back() > tol) out.push_back(r);
    }
    roots = std::move(out);
}

double cauchyBound(const QPoly& a) {
    BigRational best = 0;
    for (std::size_t k = 0; k + 1 < a.size(); ++k) {
        BigRational r = abs(a[k] / a.back());
        if (r > best) best = r;
    }
    return 1.0 + best.get_d();
}

RootSet rootsIn(const IntPolynomial& poly, std::optional<std::pair<double, double>> window) {
    if (poly.isZero()) throw std::invalid_argument("numericZeros: zero polynomial");
    RootSet out;
    std::vector<std::pair<double, int>> found;
    for (const auto& [factor, mult] : squareFreeFactors(toQ(poly))) {
        const long expected = sturmRealRootCount(factor);
        if (expected == 0) continue;
        const std::vector<double> c = toDoubles(factor);
        const double r = cauchyBound(factor);
        const double lo = window ? window->first : -r;
        const double hi = window ? window->second : r;
        const long d = degree(factor);
        const long cells = std::max<long>(2000, 400 * d * d);
        std::vector<double> roots = gridRoots(c, lo, hi, cells);
        dedupe(roots, 0.0);
        if (static_cast<long>(roots.size()) < expected) {
            for (double z : companionRealRoots(c)) roots.push_back(polish(c, z));
            dedupe(roots, 1e-9);
        }
        if (static_cast<long>(roots.size()) != expected) {
            std::ostringstream msg;
            msg << "numericZeros: factor of degree " << d << " (multiplicity " << mult << ") has "
                << expected << " real roots by Sturm count, located " << roots.size()
                << " in [" << lo << ", " << hi << "] with " << cells << " grid cells";
            throw ConvergenceFailure(msg.str());
        }
        for (double z : roots) found.emplace_back(z, mult);
    }
    std::sort(found.begin(), found.end());
    for (const auto& [z, mult] : found) {
        out.roots.push_back(z);
        out.multiplicities.push_back(mult);
    }
    out.n = poly.degree();
    return out;
}

void requirePrincipalRow(long n, long minimum, const char* what) {
    if (n < minimum) {
        throw std::invalid_argument(std::string(what) + ": needs n >= " + std::to_string(minimum));
    }
}

}  // namespace

BigRational evaluate(const IntPolynomial& poly, const BigRational& x) {
    BigRational acc = 0;
    for (auto it = poly.coeffs().rbegin(); it != poly.coeffs().rend(); ++it) {
        acc = acc * x + *it;
    }
    acc.canonicalize();
    return acc;
}

double evaluate(const IntPolynomial& poly, double x) {
    std::vector<double> c;
    c.reserve(poly.coeffs().size());
    for (const auto& v : poly.coeffs()) c.push_back(v.get_d());
    return compensatedHorner(c, x);
}

double trigFormResidual(long n, double theta) {
    requirePrincipalRow(n, 2, "trigFormResidual");
    const IntPolynomial& p = buildDefinitional(n, kPrincipalFamily);
    return evaluate(p, std::cos(theta)) + std::sin(theta) * std::sin(static_cast<double>(n - 1) * theta);
}

long RootSet::countWithMultiplicity() const {
    long total = 0;
    for (int m : multiplicities) total += m;
    return total;
}

RootSet closedFormZeros(long n) {
    requirePrincipalRow(n, 3, "closedFormZeros");
    RootSet out;
    out.n = n;
    out.family = kPrincipalFamily;
    // cos(k pi/(n-1)) = sin((n-1-2k) pi / (2(n-1))): odd in the integer
    // argument, so the set is exactly symmetric.
    const double denom = 2.0 * static_cast<double>(n - 1);
    for (long k = n - 1; k >= 0; --k) {
        const long j = n - 1 - 2 * k;
        out.roots.push_back(std::sin(static_cast<double>(j) * pi / denom));
        out.multiplicities.push_back(1);
    }
    return out;
}

RootSet numericZeros(const IntPolynomial& poly) { return rootsIn(poly, std::nullopt); }

RootSet numericZeros(long n, FamilyId family) {
    std::optional<std::pair<double, double>> window;
    if (family == kPrincipalFamily) window = std::pair{-1.0 - 1e-6, 1.0 + 1e-6};
    RootSet out = rootsIn(buildDefinitional(n, family), window);
    out.n = n;
    out.family = family;
    return out;
}

double extremumEquation(long n, double theta) {
    return static_cast<double>(n - 1) * std::tan(theta) + std::tan(static_cast<double>(n - 1) * theta);
}

std::vector<Extremum> extrema(long n) {
    requirePrincipalRow(n, 3, "extrema");
    const long q = n - 1;
    // Poles of tan(q theta) in (0, pi), plus the pole of tan(theta) at pi/2.
    // On each gap the equation is increasing from -inf to +inf, so one root.
    std::vector<double> poles;
    for (long j = 0; j < q; ++j) {
        poles.push_back(static_cast<double>(2 * j + 1) * pi / (2.0 * static_cast<double>(q)));
    }
    const bool halfPiIsPole = q % 2 == 1;
    if (!halfPiIsPole) {
        poles.push_back(pi / 2);
        std::sort(poles.begin(), poles.end());
    }

    std::vector<Extremum> out{{0.0, 1.0}};
    for (std::size_t i = 0; i + 1 < poles.size(); ++i) {
        double lo = poles[i];
        double hi = poles[i + 1];
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            if (extremumEquation(n, mid) < 0) lo = mid; else hi = mid;
        }
        const double theta = 0.5 * (lo + hi);
        out.push_back({theta, std::cos(theta)});
    }
    if (halfPiIsPole) out.push_back({pi / 2, 0.0});
    out.push_back({pi, -1.0});
    std::sort(out.begin(), out.end(), [](const Extremum& a, const Extremum& b) { return a.theta < b.theta; });
    if (static_cast<long>(out.size()) != n + 1) {
        throw ConvergenceFailure("extrema: expected " + std::to_string(n + 1) + " critical points, got " +
                                 std::to_string(out.size()));
    }
    return out;
}

double boundCheck(long n, long samples) {
    requirePrincipalRow(n, 2, "boundCheck");
    if (samples < 2) throw std::invalid_argument("boundCheck: needs at least 2 samples");
    const IntPolynomial& p = buildDefinitional(n, kPrincipalFamily);
    double best = 0.0;
    for (long i = 0; i < samples; ++i) {
        const double x = -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(samples - 1);
        const double v = evaluate(p, x);
        best = std::max(best, v * v + x * x);
    }
    return best;
}

double monicSupNorm(long n) {
    requirePrincipalRow(n, 3, "monicSupNorm");
    const IntPolynomial& p = buildDefinitional(n, kPrincipalFamily);
    double best = 0.0;
    constexpr long kGrid = 20000;
    for (long i = 0; i <= kGrid; ++i) {
        const double x = -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(kGrid);
        best = std::max(best, std::abs(evaluate(p, x)));
    }
    for (const auto& e : extrema(n)) best = std::max(best, std::abs(evaluate(p, e.x)));
    return std::ldexp(best, -static_cast<int>(n - 2));
}

}  // namespace chebfam
