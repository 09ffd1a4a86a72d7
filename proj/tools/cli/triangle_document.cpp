#include "triangle_document.hpp"

#include <sstream>
#include <stdexcept>

#ifndef CHEBFAM_VERSION
#define CHEBFAM_VERSION "0.0.0"
#endif

namespace chebfam::cli {

namespace {

BigInteger parseInteger(const std::string& s) {
    BigInteger v;
    if (s.empty() || v.set_str(s, 10) != 0) throw std::invalid_argument("not a decimal integer: '" + s + "'");
    return v;
}

std::vector<std::string> lines(std::string_view text) {
    std::vector<std::string> out;
    std::istringstream in{std::string(text)};
    for (std::string line; std::getline(in, line);) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) out.push_back(std::move(line));
    }
    return out;
}

}  // namespace

std::string generatorStamp() { return std::string("chebfam ") + CHEBFAM_VERSION; }

std::optional<std::string> oeisReference(FamilyId family) {
    if (family.p != 2) return std::nullopt;
    switch (family.m) {
        case 2: return "A136388";
        case 3: return "A136389";
        case 4: return "A136390";
        case 5: return "A136397";
        case 6: return "A136398";
        default: return std::nullopt;
    }
}

TriangleDocument makeTriangleDocument(FamilyId family, std::vector<TriangleRow> rows) {
    TriangleDocument doc{family, std::move(rows), {}, generatorStamp()};
    if (auto ref = oeisReference(family)) doc.oeisRefs.push_back(*ref);
    return doc;
}

TriangleDocument makeTriangleDocument(FamilyId family, long maxN) {
    requireValidFamily(family);
    if (maxN < family.m) throw std::invalid_argument("max-n must be >= m");
    std::vector<TriangleRow> rows;
    for (long n = family.m; n <= maxN; ++n) rows.push_back({n, triangleFor(family).row(n)});
    return makeTriangleDocument(family, std::move(rows));
}

nlohmann::json toJson(const TriangleDocument& doc) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : doc.rows) {
        nlohmann::json coeffs = nlohmann::json::array();
        for (const auto& c : r.coeffs) coeffs.push_back(c.get_str());
        rows.push_back({{"n", r.n}, {"coeffs", std::move(coeffs)}});
    }
    return {
        {"schemaVersion", kSchemaVersion},
        {"kind", "triangle"},
        {"m", doc.family.m},
        {"p", doc.family.p},
        {"rows", std::move(rows)},
        {"metadata", {{"oeisRefs", doc.oeisRefs}, {"generator", doc.generator}}},
    };
}

TriangleDocument triangleFromJson(const nlohmann::json& j) {
    try {
        if (j.at("schemaVersion").get<int>() != kSchemaVersion) {
            throw std::invalid_argument("unsupported schemaVersion");
        }
        if (j.at("kind").get<std::string>() != "triangle") throw std::invalid_argument("not a triangle document");
        TriangleDocument doc;
        doc.family = FamilyId{j.at("m").get<long>(), j.at("p").get<long>()};
        for (const auto& r : j.at("rows")) {
            TriangleRow row{r.at("n").get<long>(), {}};
            for (const auto& c : r.at("coeffs")) row.coeffs.push_back(parseInteger(c.get<std::string>()));
            if (static_cast<long>(row.coeffs.size()) != row.n + 1) {
                throw std::invalid_argument("row " + std::to_string(row.n) + " has wrong length");
            }
            doc.rows.push_back(std::move(row));
        }
        const auto& meta = j.at("metadata");
        doc.oeisRefs = meta.at("oeisRefs").get<std::vector<std::string>>();
        doc.generator = meta.at("generator").get<std::string>();
        return doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed triangle document: ") + e.what());
    }
}

std::string toCsv(const TriangleDocument& doc) {
    std::ostringstream os;
    os << "n,k,coefficient\n";
    for (const auto& r : doc.rows) {
        for (std::size_t k = 0; k < r.coeffs.size(); ++k) os << r.n << ',' << k << ',' << r.coeffs[k].get_str() << '\n';
    }
    return os.str();
}

TriangleDocument triangleFromCsv(std::string_view text, FamilyId family) {
    auto ls = lines(text);
    if (ls.empty() || ls.front() != "n,k,coefficient") throw std::invalid_argument("missing CSV header");
    std::vector<TriangleRow> rows;
    for (std::size_t i = 1; i < ls.size(); ++i) {
        std::istringstream in(ls[i]);
        std::string n, k, c;
        if (!std::getline(in, n, ',') || !std::getline(in, k, ',') || !std::getline(in, c)) {
            throw std::invalid_argument("malformed CSV line: " + ls[i]);
        }
        const long rowN = std::stol(n);
        const long col = std::stol(k);
        if (rows.empty() || rows.back().n != rowN) rows.push_back({rowN, {}});
        if (col != static_cast<long>(rows.back().coeffs.size())) throw std::invalid_argument("CSV entries out of order");
        rows.back().coeffs.push_back(parseInteger(c));
    }
    return makeTriangleDocument(family, std::move(rows));
}

std::string toBFile(const TriangleDocument& doc) {
    std::ostringstream os;
    long index = 1;
    for (const auto& r : doc.rows) {
        for (const auto& c : r.coeffs) os << index++ << ' ' << c.get_str() << '\n';
    }
    return os.str();
}

TriangleDocument triangleFromBFile(std::string_view text, FamilyId family) {
    std::vector<TriangleRow> rows;
    long expectedIndex = 1;
    long n = family.m;
    TriangleRow cur{n, {}};
    for (const auto& line : lines(text)) {
        std::istringstream in(line);
        long index = 0;
        std::string value;
        if (!(in >> index >> value)) throw std::invalid_argument("malformed b-file line: " + line);
        if (index != expectedIndex++) throw std::invalid_argument("b-file index not contiguous at " + line);
        cur.coeffs.push_back(parseInteger(value));
        if (static_cast<long>(cur.coeffs.size()) == n + 1) {
            rows.push_back(std::move(cur));
            cur = TriangleRow{++n, {}};
        }
    }
    if (!cur.coeffs.empty()) throw std::invalid_argument("b-file ends inside a row");
    return makeTriangleDocument(family, std::move(rows));
}

}  // namespace chebfam::cli
