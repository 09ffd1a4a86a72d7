#include "verify.hpp"

#include "triangle_document.hpp"

#include "chebfam/analysis.hpp"
#include "chebfam/blockcount.hpp"
#include "chebfam/orthocheck.hpp"
#include "chebfam/polyfamily.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace chebfam::cli {

namespace {

constexpr std::size_t kMaxWitnesses = 5;
constexpr long kDefaultOracleBound = 14;
constexpr long kDefaultIdentityBound = 12;

using json = nlohmann::json;

std::string str(const BigInteger& v) { return v.get_str(); }

/// Collects mismatches, keeping the first few as witnesses.
class Tally {
public:
    void miss(json witness) {
        ++misses_;
        if (witnesses_.size() < kMaxWitnesses) witnesses_.push_back(std::move(witness));
    }
    void checked(std::size_t count = 1) { checked_ += count; }
    [[nodiscard]] bool clean() const { return misses_ == 0; }

    CheckRecord finish(std::string id, std::string range) const {
        CheckRecord r;
        r.checkId = std::move(id);
        r.range = std::move(range);
        r.status = clean() ? CheckStatus::Pass : CheckStatus::Fail;
        r.witnesses = witnesses_;
        std::ostringstream os;
        os << checked_ << " cases, " << misses_ << " mismatches";
        r.detail = os.str();
        return r;
    }

private:
    std::size_t checked_ = 0;
    std::size_t misses_ = 0;
    json witnesses_ = json::array();
};

std::string boundRange(long bound, long maxP) {
    return "n*p+m <= " + std::to_string(bound) + ", p <= " + std::to_string(maxP);
}

// --- oracle / identities ---------------------------------------------------

CheckRecord checkCountClosedForm(long bound) {
    Tally t;
    for (long p = 1; p <= 4; ++p) {
        for (long n = 0; n * p <= bound; ++n) {
            for (long m = 0; n * p + m <= bound; ++m) {
                for (long k = 0; n + k <= n * p + m; ++k) {
                    t.checked();
                    const BigInteger closed = fClosed(n, k, m, p);
                    const BigInteger oracle = fOracle(n, k, m, p);
                    if (closed != oracle) {
                        t.miss({{"n", n}, {"k", k}, {"m", m}, {"p", p}, {"closed", str(closed)}, {"oracle", str(oracle)}});
                    }
                }
            }
        }
    }
    return t.finish("count-closed-form-vs-oracle", boundRange(bound, 4));
}

json identityWitness(const IdentityFailure& f) {
    return {{"n", f.config.n}, {"k", f.config.k}, {"m", f.config.m}, {"p", f.config.p},
            {"t", f.t}, {"lhs", str(f.lhs)}, {"rhs", str(f.rhs)}};
}

CheckRecord checkIdentityPass(IdentityId id, long bound) {
    IdentityRange range;
    range.maxGround = bound;
    range.oracleCrossCheck = true;
    const IdentityReport report = checkIdentity(id, range);
    CheckRecord r;
    r.checkId = "identity-" + std::string(identityName(id));
    r.range = boundRange(bound, range.maxP) + (id == IdentityId::E2 ? ", t <= 3" : "");
    r.status = report.verified() ? CheckStatus::Pass : CheckStatus::Fail;
    for (std::size_t i = 0; i < std::min(kMaxWitnesses, report.failures.size()); ++i) {
        r.witnesses.push_back(identityWitness(report.failures[i]));
    }
    r.detail = std::to_string(report.tuplesChecked) + " cases, " + std::to_string(report.failures.size()) + " mismatches";
    return r;
}

CheckRecord checkE3PrintedErratum(long bound) {
    IdentityRange range;
    range.maxGround = std::max(bound, 4L);
    range.oracleCrossCheck = true;
    const IdentityReport report = checkIdentity(IdentityId::E3Printed, range);
    const auto pinned = std::find_if(report.failures.begin(), report.failures.end(), [](const IdentityFailure& f) {
        return f.config == BlockConfig{2, 0, 0, 2};
    });
    CheckRecord r;
    r.checkId = "erratum-identity-E3-printed";
    r.range = boundRange(range.maxGround, range.maxP);
    const bool reproduces = pinned != report.failures.end() && pinned->lhs == 4 && pinned->rhs == 2;
    r.status = reproduces ? CheckStatus::ErratumConfirmed : CheckStatus::Fail;
    if (pinned != report.failures.end()) r.witnesses.push_back(identityWitness(*pinned));
    r.detail = "printed form with p-1 in the last argument: " + std::to_string(report.failures.size()) +
               " of " + std::to_string(report.tuplesChecked) + " cases disagree with the oracle count";
    return r;
}

// --- constructions -----------------------------------------------------------

const std::vector<IntPolynomial>& correctedTableRows() {
    static const std::vector<IntPolynomial> rows = {
        IntPolynomial{0, 0, 1},
        IntPolynomial{0, -2, 0, 2},
        IntPolynomial{1, 0, -5, 0, 4},
        IntPolynomial{0, 4, 0, -12, 0, 8},
        IntPolynomial{-1, 0, 13, 0, -28, 0, 16},
        IntPolynomial{0, -6, 0, 38, 0, -64, 0, 32},
    };
    return rows;
}

CheckRecord checkTableRows() {
    Tally t;
    for (std::size_t i = 0; i < correctedTableRows().size(); ++i) {
        const long n = static_cast<long>(i) + 2;
        t.checked();
        const IntPolynomial got = buildDefinitional(n, kPrincipalFamily);
        if (got != correctedTableRows()[i]) {
            t.miss({{"n", n}, {"expected", toString(correctedTableRows()[i])}, {"computed", toString(got)}});
        }
    }
    return t.finish("table-rows", "m=2, p=2, n=2..7");
}

CheckRecord checkTable13xErratum() {
    const IntPolynomial printed{-1, 13, 0, 0, -28, 0, 16};
    const IntPolynomial computed = buildDefinitional(6, kPrincipalFamily);
    CheckRecord r;
    r.checkId = "erratum-table-13x-term";
    r.range = "m=2, p=2, n=6";
    const bool reproduces = computed != printed && computed == correctedTableRows()[4];
    r.status = reproduces ? CheckStatus::ErratumConfirmed : CheckStatus::Fail;
    r.witnesses.push_back({{"n", 6}, {"printed", toString(printed)}, {"computed", toString(computed)}});
    r.detail = "degree-6 row carries 13x^2, not 13x";
    return r;
}

CheckRecord checkChebyshevSpecializations() {
    Tally t;
    for (long n = 0; n <= 30; ++n) {
        t.checked();
        if (buildDefinitional(n, kChebyshevU) != chebyshevU(n)) t.miss({{"family", "U"}, {"n", n}});
        if (n >= 1) {
            t.checked();
            if (buildDefinitional(n, kChebyshevT) != chebyshevT(n)) t.miss({{"family", "T"}, {"n", n}});
        }
    }
    return t.finish("chebyshev-specializations", "(m,p) in {(0,2),(1,2)}, n <= 30");
}

CheckRecord checkFourWay() {
    Tally t;
    for (long m = 0; m <= 6; ++m) {
        const FamilyId f{m, 2};
        for (long n = m; n <= 30; ++n) {
            t.checked();
            const IntPolynomial def = buildDefinitional(n, f);
            const IntPolynomial red = buildByReduction(n, f);
            const IntPolynomial three = buildByThreeTerm(n, f);
            const IntPolynomial viaT = buildViaTRecurrence(n, f, 1);
            if (def != red || def != three || def != viaT) {
                t.miss({{"m", m}, {"n", n}, {"definitional", toString(def)}, {"reduction", toString(red)},
                        {"threeTerm", toString(three)}, {"tRecurrence", toString(viaT)}});
            }
        }
    }
    return t.finish("four-way-construction", "p=2, m <= 6, n <= 30");
}

CheckRecord checkReductionAllP() {
    Tally t;
    for (long p = 1; p <= 4; ++p) {
        for (long m = 0; m <= 4; ++m) {
            const FamilyId f{m, p};
            for (long n = m; n <= 16; ++n) {
                t.checked();
                const IntPolynomial def = buildDefinitional(n, f);
                const IntPolynomial red = buildByReduction(n, f);
                if (def != red) t.miss({{"n", n}, {"m", m}, {"p", p}, {"definitional", toString(def)}, {"reduction", toString(red)}});
            }
        }
    }
    return t.finish("reduction-to-m0", "p <= 4, m <= 4, n <= 16");
}

CheckRecord checkThreeTermPrinted() {
    Tally t;
    for (long m = 0; m <= 6; ++m) {
        const FamilyId f{m, 2};
        for (long n = m; n <= 30; ++n) {
            t.checked();
            const IntPolynomial def = buildDefinitional(n, f);
            const IntPolynomial rec = buildByThreeTermPrinted(n, f);
            if (def != rec) t.miss({{"m", m}, {"n", n}, {"definitional", toString(def)}, {"recurrence", toString(rec)}});
        }
    }
    return t.finish("three-term-printed-initial-conditions", "p=2, m <= 6, n <= 30");
}

CheckRecord checkSecondKindComposition() {
    Tally t;
    const IntPolynomial x = IntPolynomial::monomial(1);
    for (long n = 4; n <= 30; ++n) {
        t.checked();
        const IntPolynomial composed = x * x * chebyshevU(n - 2) - x * chebyshevU(n - 3) * BigInteger(2) + chebyshevU(n - 4);
        if (composed != buildDefinitional(n, kPrincipalFamily)) t.miss({{"n", n}, {"composed", toString(composed)}});
    }
    return t.finish("second-kind-composition", "m=2, p=2, 4 <= n <= 30");
}

// --- analysis ----------------------------------------------------------------

CheckRecord checkTrigResidual() {
    Tally t;
    constexpr long kPoints = 1000;
    double worst = 0.0;
    for (long n = 3; n <= 25; ++n) {
        for (long i = 1; i <= kPoints; ++i) {
            const double theta = std::numbers::pi * static_cast<double>(i) / static_cast<double>(kPoints + 1);
            const double r = trigFormResidual(n, theta);
            worst = std::max(worst, r);
            t.checked();
            if (!(r <= 1e-12)) t.miss({{"n", n}, {"theta", theta}, {"residual", r}});
        }
    }
    CheckRecord rec = t.finish("trig-form-residual", "3 <= n <= 25, 1000 interior points, tol 1e-12");
    std::ostringstream os;
    os << ", max residual " << std::scientific << std::setprecision(3) << worst;
    rec.detail += os.str();
    return rec;
}

CheckRecord checkZeros() {
    Tally t;
    for (long n = 3; n <= 20; ++n) {
        t.checked();
        const RootSet closed = closedFormZeros(n);
        const RootSet numeric = numericZeros(n, kPrincipalFamily);
        bool ok = numeric.roots.size() == static_cast<std::size_t>(n) && closed.roots.size() == numeric.roots.size();
        double worst = 0.0;
        for (std::size_t i = 0; ok && i < numeric.roots.size(); ++i) {
            ok = numeric.multiplicities[i] == 1 && std::abs(numeric.roots[i]) <= 1.0 + 1e-10;
            worst = std::max(worst, std::abs(numeric.roots[i] - closed.roots[i]));
        }
        if (!ok || worst > 1e-10) t.miss({{"n", n}, {"maxDeviation", worst}, {"found", numeric.roots.size()}});
    }
    return t.finish("zeros-simple-in-interval", "3 <= n <= 20, tol 1e-10");
}

CheckRecord checkBound() {
    Tally t;
    for (long n = 3; n <= 20; ++n) {
        t.checked(2);
        const double b = boundCheck(n, 10000);
        if (b > 1.0 + 1e-12) t.miss({{"n", n}, {"maxValuePlusXSquared", b}});
        const double sup = monicSupNorm(n);
        const double limit = std::ldexp(1.0, -static_cast<int>(n - 2));
        if (sup > limit * (1.0 + 1e-12)) t.miss({{"n", n}, {"monicSupNorm", sup}, {"limit", limit}});
    }
    return t.finish("unit-disc-bound", "3 <= n <= 20, 10000 samples; monic sup-norm <= 2^(2-n)");
}

CheckRecord checkExtremumErratum() {
    const IntPolynomial p3 = buildDefinitional(3, kPrincipalFamily);
    const IntPolynomial dp3 = p3.derivative();
    const double printed = std::atan(std::sqrt(2.0));
    const double truth = 1.0 / std::sqrt(3.0);
    const auto ex = extrema(3);
    std::vector<double> interior;
    for (const auto& e : ex) {
        if (std::abs(e.x) < 1.0 - 1e-9) interior.push_back(e.x);
    }
    std::sort(interior.begin(), interior.end());
    const bool pinned = interior.size() == 2 && std::abs(interior[0] + truth) <= 1e-12 && std::abs(interior[1] - truth) <= 1e-12;
    const double slopePrinted = evaluate(dp3, printed);
    CheckRecord r;
    r.checkId = "erratum-extremum-arctan-sqrt2";
    r.range = "m=2, p=2, n=3";
    r.status = pinned && std::abs(slopePrinted) > 1e-6 ? CheckStatus::ErratumConfirmed : CheckStatus::Fail;
    r.witnesses.push_back({{"printedX", printed}, {"derivativeAtPrinted", slopePrinted}});
    json found = json::array();
    for (double x : interior) found.push_back(x);
    r.witnesses.push_back({{"interiorExtrema", found}, {"expected", truth}});
    r.detail = "interior extrema sit at x = +-cos(arctan sqrt 2) = +-1/sqrt 3";
    return r;
}

// --- orthogonality ------------------------------------------------------------

PiRational piFraction(long num, long den) { return PiRational::pi(makeRational(BigInteger(num), BigInteger(den))); }

using BandPattern = std::map<long, PiRational>;

CheckRecord checkBandPattern(const std::string& id, long q, const BandPattern& pattern) {
    Tally t;
    const GramMatrix g = gramMatrix(3, 15, kPrincipalFamily, WeightSpec{q}, false);
    for (long n = 3; n <= 15; ++n) {
        for (long m = 3; m <= 15; ++m) {
            t.checked();
            const auto it = pattern.find(std::abs(n - m));
            const PiRational expected = it == pattern.end() ? PiRational{} : it->second;
            const PiRational& got = g.at(n, m).exactValue;
            if (!(got == expected)) t.miss({{"n", n}, {"m", m}, {"expected", toString(expected)}, {"computed", toString(got)}});
        }
    }
    return t.finish(id, "weight half-exponent " + std::to_string(q) + ", 3 <= n,m <= 15");
}

CheckRecord checkUnitWeightParity() {
    Tally t;
    const GramMatrix g = gramMatrix(3, 15, kPrincipalFamily, WeightSpec{0}, false);
    for (long n = 3; n <= 15; ++n) {
        for (long m = 3; m <= 15; ++m) {
            if ((n - m) % 2 == 0) continue;
            t.checked();
            const PiRational& got = g.at(n, m).exactValue;
            if (!got.isZero()) t.miss({{"n", n}, {"m", m}, {"computed", toString(got)}});
        }
    }
    return t.finish("unit-weight-parity", "weight half-exponent 0, 3 <= n,m <= 15, n-m odd");
}

CheckRecord checkBackends() {
    Tally t;
    for (long q : {-1L, 0L, 1L, 3L}) {
        const GramMatrix g = gramMatrix(3, 15, kPrincipalFamily, WeightSpec{q}, true);
        t.checked(13 * 13);
        const double d = g.maxBackendDiscrepancy();
        if (!(d <= 1e-10)) t.miss({{"q", q}, {"maxDiscrepancy", d}});
    }
    return t.finish("exact-vs-quadrature", "half-exponents -1,0,1,3, 3 <= n,m <= 15, tol 1e-10");
}

// --- recurrences -------------------------------------------------------------

CheckRecord checkTRecurrence() {
    Tally t;
    for (long p = 1; p <= 4; ++p) {
        for (long m = 0; m <= 4; ++m) {
            const FamilyId f{m, p};
            for (long n = m; n <= 14; ++n) {
                const IntPolynomial def = buildDefinitional(n, f);
                for (long s = 0; s <= 3; ++s) {
                    t.checked();
                    const IntPolynomial got = buildViaTRecurrence(n, f, s);
                    if (got != def) t.miss({{"n", n}, {"m", m}, {"p", p}, {"t", s}, {"definitional", toString(def)}, {"recurrence", toString(got)}});
                }
            }
        }
    }
    return t.finish("shift-recurrence", "p <= 4, m <= 4, n <= 14, t <= 3");
}

template <class Fn>
void sweepCoefficients(long minP, Fn&& visit) {
    for (long p = minP; p <= 4; ++p) {
        for (long m = 0; m <= 4; ++m) {
            for (long n = m; n <= 14; ++n) {
                for (long k = 0; k <= n; ++k) visit(n, k, FamilyId{m, p});
            }
        }
    }
}

CheckRecord checkCoeffE2() {
    Tally t;
    sweepCoefficients(1, [&](long n, long k, FamilyId f) {
        const BigInteger c = coefficient(n, k, f);
        for (long s = 0; s <= 3; ++s) {
            t.checked();
            const BigInteger got = coeffRecurrenceE2(n, k, f, s);
            if (got != c) t.miss({{"n", n}, {"k", k}, {"m", f.m}, {"p", f.p}, {"t", s}, {"coefficient", str(c)}, {"recurrence", str(got)}});
        }
    });
    return t.finish("coefficient-shift-recurrence", "p <= 4, m <= 4, n <= 14, t <= 3");
}

CheckRecord checkCoeffE3(E3Variant variant) {
    Tally t;
    sweepCoefficients(2, [&](long n, long k, FamilyId f) {
        if ((n - k) % 2 != 0) return;
        if (variant == E3Variant::Corrected && !((n + k) / 2 - f.m >= 1 && (f.p == 2 || k >= 1))) return;
        t.checked();
        const BigInteger c = coefficient(n, k, f);
        const BigInteger got = coeffRecurrenceE3(n, k, f, variant);
        if (got != c) t.miss({{"n", n}, {"k", k}, {"m", f.m}, {"p", f.p}, {"coefficient", str(c)}, {"recurrence", str(got)}});
    });
    if (variant == E3Variant::Printed) return t.finish("coefficient-block-recurrence-printed", "2 <= p <= 4, m <= 4, n <= 14");
    return t.finish("coefficient-block-recurrence-corrected",
                    "2 <= p <= 4, m <= 4, n <= 14, (n+k)/2 > m, k >= 1 when p >= 3");
}

CheckRecord checkTripleSum() {
    Tally t;
    sweepCoefficients(2, [&](long n, long k, FamilyId f) {
        if (n > 10) return;
        t.checked();
        const BigInteger c = coefficient(n, k, f);
        const BigInteger got = coeffTripleSum(n, k, f);
        if (got != c) t.miss({{"n", n}, {"k", k}, {"m", f.m}, {"p", f.p}, {"coefficient", str(c)}, {"tripleSum", str(got)}});
    });
    return t.finish("coefficient-triple-sum", "2 <= p <= 4, m <= 4, n <= 10");
}

CheckRecord checkUCoefficient() {
    Tally t;
    for (long n = 0; n <= 30; ++n) {
        for (long k = 0; k <= n; ++k) {
            t.checked();
            const BigInteger got = chebyshevUCoefficient(n, k);
            const BigInteger c = coefficient(n, k, kChebyshevU);
            if (got != c) t.miss({{"n", n}, {"k", k}, {"coefficient", str(c)}, {"formula", str(got)}});
        }
    }
    return t.finish("second-kind-coefficient-formula", "n <= 30");
}

// --- registry ----------------------------------------------------------------

struct CheckEntry {
    std::string suite;
    bool erratum = false;
    std::function<CheckRecord(const VerifyOptions&)> run;
};

long oracleBound(const VerifyOptions& o) { return o.groundBound.value_or(kDefaultOracleBound); }
long identityBound(const VerifyOptions& o) { return o.groundBound.value_or(kDefaultIdentityBound); }

const std::vector<CheckEntry>& registry() {
    static const std::vector<CheckEntry> entries = {
        {"oracle", false, [](const VerifyOptions& o) { return checkCountClosedForm(oracleBound(o)); }},
        {"identities", false, [](const VerifyOptions& o) { return checkIdentityPass(IdentityId::E1, identityBound(o)); }},
        {"identities", false, [](const VerifyOptions& o) { return checkIdentityPass(IdentityId::E2, identityBound(o)); }},
        {"identities", true, [](const VerifyOptions& o) { return checkE3PrintedErratum(identityBound(o)); }},
        {"identities", false, [](const VerifyOptions& o) { return checkIdentityPass(IdentityId::E3Corrected, identityBound(o)); }},
        {"identities", false, [](const VerifyOptions& o) { return checkIdentityPass(IdentityId::E4, identityBound(o)); }},
        {"constructions", false, [](const VerifyOptions&) { return checkTableRows(); }},
        {"constructions", true, [](const VerifyOptions&) { return checkTable13xErratum(); }},
        {"constructions", false, [](const VerifyOptions&) { return checkChebyshevSpecializations(); }},
        {"constructions", false, [](const VerifyOptions&) { return checkFourWay(); }},
        {"constructions", false, [](const VerifyOptions&) { return checkReductionAllP(); }},
        {"constructions", false, [](const VerifyOptions&) { return checkThreeTermPrinted(); }},
        {"constructions", false, [](const VerifyOptions&) { return checkSecondKindComposition(); }},
        {"analysis", false, [](const VerifyOptions&) { return checkTrigResidual(); }},
        {"analysis", false, [](const VerifyOptions&) { return checkZeros(); }},
        {"analysis", false, [](const VerifyOptions&) { return checkBound(); }},
        {"analysis", true, [](const VerifyOptions&) { return checkExtremumErratum(); }},
        {"orthogonality", false, [](const VerifyOptions&) {
             return checkBandPattern("first-kind-weight-bands", -1, {{0, piFraction(1, 4)}, {2, piFraction(-1, 8)}});
         }},
        {"orthogonality", false, [](const VerifyOptions&) { return checkUnitWeightParity(); }},
        {"orthogonality", false, [](const VerifyOptions&) {
             return checkBandPattern("second-kind-weight-bands", 1,
                                     {{0, piFraction(3, 16)}, {2, piFraction(-1, 8)}, {4, piFraction(1, 32)}});
         }},
        {"orthogonality", false, [](const VerifyOptions&) {
             return checkBandPattern("three-halves-weight-bands", 3,
                                     {{0, piFraction(5, 32)}, {2, piFraction(-15, 128)}, {4, piFraction(3, 64)}, {6, piFraction(-1, 128)}});
         }},
        {"orthogonality", false, [](const VerifyOptions&) { return checkBackends(); }},
        {"recurrences", false, [](const VerifyOptions&) { return checkTRecurrence(); }},
        {"recurrences", false, [](const VerifyOptions&) { return checkCoeffE2(); }},
        {"recurrences", false, [](const VerifyOptions&) { return checkCoeffE3(E3Variant::Printed); }},
        {"recurrences", false, [](const VerifyOptions&) { return checkCoeffE3(E3Variant::Corrected); }},
        {"recurrences", false, [](const VerifyOptions&) { return checkTripleSum(); }},
        {"recurrences", false, [](const VerifyOptions&) { return checkUCoefficient(); }},
    };
    return entries;
}

}  // namespace

std::string_view statusName(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::ErratumConfirmed: return "erratum-confirmed";
    }
    return "fail";
}

bool VerifyReport::anyFailure() const {
    return std::any_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.status == CheckStatus::Fail; });
}

std::size_t VerifyReport::count(CheckStatus s) const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [s](const CheckRecord& c) { return c.status == s; }));
}

const std::vector<std::string>& verifySuites() {
    static const std::vector<std::string> suites = {"all", "oracle", "identities", "errata", "constructions",
                                                    "analysis", "orthogonality", "recurrences"};
    return suites;
}

VerifyReport runVerify(std::string_view suite, const VerifyOptions& options) {
    const auto& suites = verifySuites();
    if (std::find(suites.begin(), suites.end(), suite) == suites.end()) {
        throw std::invalid_argument("unknown verify suite '" + std::string(suite) + "'");
    }
    if (options.groundBound && (*options.groundBound < 0 || *options.groundBound > kOracleMaxGround)) {
        throw std::invalid_argument("range must lie in [0, " + std::to_string(kOracleMaxGround) + "]");
    }
    VerifyReport report;
    report.suite = std::string(suite);
    for (const auto& entry : registry()) {
        const bool selected = suite == "all" || suite == entry.suite || (suite == "errata" && entry.erratum);
        if (!selected) continue;
        CheckRecord r = entry.run(options);
        r.suite = entry.suite;
        report.checks.push_back(std::move(r));
    }
    return report;
}

json toJson(const VerifyReport& report) {
    json checks = json::array();
    for (const auto& c : report.checks) {
        checks.push_back({{"checkId", c.checkId}, {"suite", c.suite}, {"range", c.range},
                          {"status", statusName(c.status)}, {"witnesses", c.witnesses}, {"detail", c.detail}});
    }
    return {
        {"schemaVersion", 1},
        {"kind", "verify-report"},
        {"generator", generatorStamp()},
        {"suite", report.suite},
        {"checks", std::move(checks)},
        {"summary",
         {{"pass", report.count(CheckStatus::Pass)},
          {"fail", report.count(CheckStatus::Fail)},
          {"erratum-confirmed", report.count(CheckStatus::ErratumConfirmed)}}},
    };
}

std::string toCsv(const VerifyReport& report) {
    std::ostringstream os;
    os << "checkId,suite,status,range,detail\n";
    auto quote = [](const std::string& s) {
        std::string out = "\"";
        for (char ch : s) {
            if (ch == '"') out += '"';
            out += ch;
        }
        return out + '"';
    };
    for (const auto& c : report.checks) {
        os << c.checkId << ',' << c.suite << ',' << statusName(c.status) << ',' << quote(c.range) << ',' << quote(c.detail) << '\n';
    }
    return os.str();
}

}  // namespace chebfam::cli
