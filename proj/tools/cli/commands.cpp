#include "commands.hpp"

#include "disk_cache.hpp"
#include "triangle_document.hpp"

#include "chebfam/analysis.hpp"
#include "chebfam/blockcount.hpp"
#include "chebfam/orthocheck.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

namespace chebfam::cli {

namespace {

using json = nlohmann::json;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string shortest(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

json header(std::string_view kind) { return {{"schemaVersion", kSchemaVersion}, {"kind", kind}}; }

void requireNoBFile(Format f, std::string_view command) {
    if (f == Format::BFile) throw UsageError("--format bfile applies to triangle and export only, not " + std::string(command));
}

std::string quoteCsv(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + '"';
}

/// Symbolic form of cos(num/den * pi); rational exactly at multiples of pi/3 and pi/2.
std::string cosOfPiFraction(long num, long den) {
    const long g = std::gcd(num, den);
    num /= g;
    den /= g;
    if (num == 0) return "1";
    if (num == den) return "-1";
    if (den == 2) return "0";
    if (den == 3) return num == 1 ? "1/2" : "-1/2";
    return "cos(" + std::to_string(num) + "/" + std::to_string(den) + "*pi)";
}

IntPolynomial build(long n, FamilyId family, BuildMethod method) {
    switch (method) {
        case BuildMethod::Definitional: return buildDefinitional(n, family);
        case BuildMethod::Reduction: return buildByReduction(n, family);
        case BuildMethod::ThreeTerm: return buildByThreeTerm(n, family);
        case BuildMethod::ShiftRecurrence: return buildViaTRecurrence(n, family, 1);
    }
    return buildDefinitional(n, family);
}

std::string_view methodName(BuildMethod m) {
    switch (m) {
        case BuildMethod::Definitional: return "definitional";
        case BuildMethod::Reduction: return "reduction";
        case BuildMethod::ThreeTerm: return "three-term";
        case BuildMethod::ShiftRecurrence: return "shift-recurrence";
    }
    return "definitional";
}

void requireRow(long n, FamilyId family) {
    requireValidFamily(family);
    if (n < family.m) throw UsageError("n must be >= m (" + std::to_string(family.m) + ")");
}

TriangleDocument triangleDocument(FamilyId family, long maxN, const std::optional<std::filesystem::path>& cacheDir) {
    requireValidFamily(family);
    if (maxN < family.m) throw UsageError("max-n must be >= m");
    if (!cacheDir) return makeTriangleDocument(family, maxN);
    return makeTriangleDocument(family, DiskTriangleCache(*cacheDir).rows(family, maxN));
}

}  // namespace

Format parseFormat(std::string_view s) {
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    if (s == "bfile") return Format::BFile;
    throw UsageError("unknown format '" + std::string(s) + "' (json, csv, bfile)");
}

std::pair<long, long> parseRange(std::string_view s) {
    auto parseLong = [&](std::string_view part) {
        long v = 0;
        const auto res = std::from_chars(part.data(), part.data() + part.size(), v);
        if (part.empty() || res.ec != std::errc{} || res.ptr != part.data() + part.size()) {
            throw UsageError("malformed range '" + std::string(s) + "'");
        }
        return v;
    };
    const auto dots = s.find("..");
    if (dots == std::string_view::npos) {
        const long v = parseLong(s);
        return {v, v};
    }
    const long lo = parseLong(s.substr(0, dots));
    const long hi = parseLong(s.substr(dots + 2));
    if (hi < lo) throw UsageError("empty range '" + std::string(s) + "'");
    return {lo, hi};
}

BigRational parseExactNumber(std::string_view s) {
    const std::string text(s);
    auto fail = [&]() -> BigRational { throw UsageError("not a number: '" + text + "'"); };
    if (text.empty()) return fail();
    if (text.find('/') != std::string::npos) {
        BigRational q;
        if (q.set_str(text, 10) != 0 || q.get_den() == 0) return fail();
        q.canonicalize();
        return q;
    }
    std::size_t i = 0;
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') negative = text[i++] == '-';
    std::string digits;
    long scale = 0;
    bool seenDot = false;
    bool seenDigit = false;
    for (; i < text.size() && text[i] != 'e' && text[i] != 'E'; ++i) {
        const char ch = text[i];
        if (ch == '.' && !seenDot) {
            seenDot = true;
        } else if (ch >= '0' && ch <= '9') {
            digits += ch;
            seenDigit = true;
            if (seenDot) --scale;
        } else {
            return fail();
        }
    }
    if (!seenDigit) return fail();
    if (i < text.size()) {
        long exponent = 0;
        const std::string_view rest(text.data() + i + 1, text.size() - i - 1);
        const char* begin = rest.data() + (!rest.empty() && rest.front() == '+' ? 1 : 0);
        const auto res = std::from_chars(begin, rest.data() + rest.size(), exponent);
        if (res.ec != std::errc{} || res.ptr != rest.data() + rest.size() || std::abs(exponent) > 10000) return fail();
        scale += exponent;
    }
    BigInteger mantissa(digits, 10);
    if (negative) mantissa = -mantissa;
    BigInteger power;
    mpz_ui_pow_ui(power.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(scale)));
    BigRational q = scale >= 0 ? BigRational(mantissa * power) : BigRational(mantissa, power);
    q.canonicalize();
    return q;
}

BuildMethod parseBuildMethod(std::string_view s) {
    for (auto m : {BuildMethod::Definitional, BuildMethod::Reduction, BuildMethod::ThreeTerm, BuildMethod::ShiftRecurrence}) {
        if (s == methodName(m)) return m;
    }
    throw UsageError("unknown method '" + std::string(s) + "' (definitional, reduction, three-term, shift-recurrence)");
}

CommandResult cmdTriangle(FamilyId family, long maxN, Format format, const std::optional<std::filesystem::path>& cacheDir) {
    const TriangleDocument doc = triangleDocument(family, maxN, cacheDir);
    switch (format) {
        case Format::Json: return {dump(toJson(doc)), 0};
        case Format::Csv: return {toCsv(doc), 0};
        case Format::BFile: return {toBFile(doc), 0};
    }
    return {};
}

CommandResult cmdPoly(long n, FamilyId family, BuildMethod method, Format format) {
    requireNoBFile(format, "poly");
    requireRow(n, family);
    const IntPolynomial p = build(n, family, method);
    if (format == Format::Csv) {
        std::ostringstream os;
        os << "k,coefficient\n";
        for (long k = 0; k <= n; ++k) os << k << ',' << p.coeff(k).get_str() << '\n';
        return {os.str(), 0};
    }
    json coeffs = json::array();
    for (long k = 0; k <= n; ++k) coeffs.push_back(p.coeff(k).get_str());
    json j = header("polynomial");
    j.update({{"m", family.m}, {"p", family.p}, {"n", n}, {"method", methodName(method)},
              {"coeffs", std::move(coeffs)}, {"text", toString(p)}});
    return {dump(j), 0};
}

CommandResult cmdEval(long n, FamilyId family, std::string_view x, Format format) {
    requireNoBFile(format, "eval");
    requireRow(n, family);
    const BigRational at = parseExactNumber(x);
    const BigRational exact = evaluate(buildDefinitional(n, family), at);
    const double value = exact.get_d();
    if (format == Format::Csv) {
        return {"n,m,p,x,exact,value\n" + std::to_string(n) + ',' + std::to_string(family.m) + ',' + std::to_string(family.p) +
                    ',' + at.get_str() + ',' + exact.get_str() + ',' + shortest(value) + '\n',
                0};
    }
    json j = header("evaluation");
    j.update({{"m", family.m}, {"p", family.p}, {"n", n}, {"x", at.get_str()}, {"exact", exact.get_str()}, {"value", value}});
    return {dump(j), 0};
}

CommandResult cmdZeros(long n, FamilyId family, Format format) {
    requireNoBFile(format, "zeros");
    requireRow(n, family);
    struct Zero {
        std::optional<std::string> exact;
        double value;
        int multiplicity;
    };
    std::vector<Zero> zeros;
    if (family == kPrincipalFamily && n >= 3) {
        RootSet rs = closedFormZeros(n);
        std::vector<double> values = rs.roots;
        std::sort(values.begin(), values.end());
        for (long i = 0; i < n; ++i) {
            // ascending x means descending angle index
            zeros.push_back({cosOfPiFraction(n - 1 - i, n - 1), values[static_cast<std::size_t>(i)], 1});
        }
    } else {
        const RootSet rs = numericZeros(n, family);
        for (std::size_t i = 0; i < rs.roots.size(); ++i) zeros.push_back({std::nullopt, rs.roots[i], rs.multiplicities[i]});
    }
    std::string summary;
    for (const auto& z : zeros) {
        if (!summary.empty()) summary += ", ";
        summary += z.exact.value_or(shortest(z.value));
    }
    if (format == Format::Csv) {
        std::ostringstream os;
        os << "exact,value,multiplicity\n";
        for (const auto& z : zeros) os << z.exact.value_or("") << ',' << shortest(z.value) << ',' << z.multiplicity << '\n';
        return {os.str(), 0};
    }
    json list = json::array();
    for (const auto& z : zeros) {
        list.push_back({{"exact", z.exact ? json(*z.exact) : json(nullptr)}, {"value", z.value}, {"multiplicity", z.multiplicity}});
    }
    json j = header("zeros");
    j.update({{"m", family.m}, {"p", family.p}, {"n", n}, {"zeros", std::move(list)}, {"summary", summary}});
    return {dump(j), 0};
}

CommandResult cmdExtrema(long n, Format format) {
    requireNoBFile(format, "extrema");
    if (n < 3) throw UsageError("extrema needs n >= 3");
    const IntPolynomial p = buildDefinitional(n, kPrincipalFamily);
    const auto points = extrema(n);
    if (format == Format::Csv) {
        std::ostringstream os;
        os << "theta,x,value\n";
        for (const auto& e : points) os << shortest(e.theta) << ',' << shortest(e.x) << ',' << shortest(evaluate(p, e.x)) << '\n';
        return {os.str(), 0};
    }
    json list = json::array();
    for (const auto& e : points) list.push_back({{"theta", e.theta}, {"x", e.x}, {"value", evaluate(p, e.x)}});
    json j = header("extrema");
    j.update({{"m", kPrincipalFamily.m}, {"p", kPrincipalFamily.p}, {"n", n}, {"extrema", std::move(list)}});
    return {dump(j), 0};
}

CommandResult cmdGram(long first, long last, FamilyId family, long weight, Format format) {
    requireNoBFile(format, "gram");
    requireValidWeight(WeightSpec{weight});
    requireValidFamily(family);
    if (first < family.m || last < first) throw UsageError("gram range must satisfy m <= first <= last");
    const GramMatrix g = gramMatrix(first, last, family, WeightSpec{weight}, true);
    if (format == Format::Csv) {
        std::ostringstream os;
        os << "n,m,exact,value,numeric\n";
        for (const auto& row : g.entries) {
            for (const auto& e : row) {
                os << e.n << ',' << e.m << ',' << quoteCsv(toString(e.exactValue)) << ',' << shortest(toDouble(e.exactValue)) << ','
                   << (e.numericValue ? shortest(*e.numericValue) : std::string()) << '\n';
            }
        }
        return {os.str(), 0};
    }
    json entries = json::array();
    for (const auto& row : g.entries) {
        for (const auto& e : row) {
            entries.push_back({{"n", e.n}, {"m", e.m}, {"exact", toString(e.exactValue)}, {"value", toDouble(e.exactValue)},
                               {"numeric", e.numericValue ? json(*e.numericValue) : json(nullptr)}});
        }
    }
    json bands = json::array();
    json pattern = json::object();
    bool restZero = true;
    for (const auto& b : g.bands()) {
        json band{{"offset", b.offset}, {"uniform", b.uniform}};
        if (b.value) {
            band["exact"] = toString(*b.value);
            band["value"] = toDouble(*b.value);
            if (!b.value->isZero()) pattern[std::to_string(b.offset)] = toString(*b.value);
        } else {
            pattern[std::to_string(b.offset)] = "mixed";
            restZero = false;
        }
        bands.push_back(std::move(band));
    }
    if (restZero) pattern["other"] = "0";
    json j = header("gram");
    j.update({{"m", family.m}, {"p", family.p}, {"weightHalfExponent", weight}, {"first", first}, {"last", last},
              {"entries", std::move(entries)}, {"bands", std::move(bands)}, {"pattern", std::move(pattern)},
              {"maxBackendDiscrepancy", g.maxBackendDiscrepancy()}});
    return {dump(j), 0};
}

CommandResult cmdVerify(std::string_view suite, const VerifyOptions& options, Format format) {
    requireNoBFile(format, "verify");
    VerifyReport report;
    try {
        report = runVerify(suite, options);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const int code = report.anyFailure() ? 1 : 0;
    if (format == Format::Csv) return {toCsv(report), code};
    return {dump(toJson(report)), code};
}

CommandResult cmdOracle(long n, long k, long m, long p, Format format) {
    requireNoBFile(format, "oracle");
    const BigInteger closed = fClosed(n, k, m, p);
    std::optional<BigInteger> oracle;
    if (n * p + m <= kOracleMaxGround) oracle = fOracle(n, k, m, p);
    const bool agree = !oracle || *oracle == closed;
    if (format == Format::Csv) {
        return {"n,k,m,p,closed,oracle\n" + std::to_string(n) + ',' + std::to_string(k) + ',' + std::to_string(m) + ',' +
                    std::to_string(p) + ',' + closed.get_str() + ',' + (oracle ? oracle->get_str() : std::string()) + '\n',
                agree ? 0 : 1};
    }
    json j = header("count");
    j.update({{"n", n}, {"k", k}, {"m", m}, {"p", p}, {"closed", closed.get_str()},
              {"oracle", oracle ? json(oracle->get_str()) : json(nullptr)}, {"agree", agree}});
    return {dump(j), agree ? 0 : 1};
}

CommandResult cmdExport(const std::filesystem::path& outDir, long maxN, const std::optional<FamilyId>& family,
                        const std::optional<std::filesystem::path>& cacheDir) {
    std::vector<FamilyId> families;
    if (family) {
        families.push_back(*family);
    } else {
        for (long m = 2; m <= 6; ++m) families.push_back(FamilyId{m, 2});
    }
    std::filesystem::create_directories(outDir);
    json written = json::array();
    for (const auto& f : families) {
        const TriangleDocument doc = triangleDocument(f, maxN, cacheDir);
        const std::string stem = "triangle_m" + std::to_string(f.m) + "_p" + std::to_string(f.p);
        const auto ref = oeisReference(f);
        const std::string bName = ref ? "b" + ref->substr(1) + ".txt" : stem + ".b.txt";
        const std::string jName = stem + ".json";
        std::ofstream(outDir / bName, std::ios::binary) << toBFile(doc);
        std::ofstream(outDir / jName, std::ios::binary) << dump(toJson(doc));
        written.push_back({{"m", f.m}, {"p", f.p}, {"oeisRef", ref ? json(*ref) : json(nullptr)},
                           {"bfile", bName}, {"document", jName}, {"rows", doc.rows.size()}});
    }
    json j = header("export");
    j.update({{"maxN", maxN}, {"files", std::move(written)}});
    return {dump(j), 0};
}

}  // namespace chebfam::cli
