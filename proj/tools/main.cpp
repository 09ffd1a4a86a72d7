#include "cli/commands.hpp"
#include "cli/triangle_document.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

using namespace chebfam;
using namespace chebfam::cli;

struct Options {
    long m = 2;
    long p = 2;
    long n = 3;
    long maxN = 10;
    long k = 0;
    long weight = -1;
    std::string format = "json";
    std::string cacheDir;
    std::string range;
    std::string suite = "all";
    std::string method = "definitional";
    std::string x;
    std::string out = "export";
};

void addFamily(CLI::App* cmd, Options& o) {
    cmd->add_option("--m", o.m, "block offset m (>= 0)")->capture_default_str();
    cmd->add_option("--p", o.p, "block size p (>= 1)")->capture_default_str();
}

void addFormat(CLI::App* cmd, Options& o) {
    cmd->add_option("--format", o.format, "json, csv or bfile")->capture_default_str();
}

std::optional<std::filesystem::path> cacheDir(const Options& o) {
    if (o.cacheDir.empty()) return std::nullopt;
    return std::filesystem::path(o.cacheDir);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized Chebyshev polynomial families: exact triangles, identities, zeros and Gram matrices"};
    app.set_version_flag("--version", generatorStamp());
    app.require_subcommand(1);
    Options o;

    auto* triangle = app.add_subcommand("triangle", "coefficient triangle rows m..max-n");
    addFamily(triangle, o);
    triangle->add_option("--max-n", o.maxN, "last row")->capture_default_str();
    triangle->add_option("--cache-dir", o.cacheDir, "persistent row cache directory");
    addFormat(triangle, o);

    auto* poly = app.add_subcommand("poly", "one polynomial of the family");
    addFamily(poly, o);
    poly->add_option("--n", o.n, "degree")->required();
    poly->add_option("--method", o.method, "definitional, reduction, three-term or shift-recurrence")->capture_default_str();
    addFormat(poly, o);

    auto* eval = app.add_subcommand("eval", "exact value at a rational or decimal point");
    addFamily(eval, o);
    eval->add_option("--n", o.n, "degree")->required();
    eval->add_option("--x", o.x, "point, e.g. 1, -1/3 or 0.25")->required();
    addFormat(eval, o);

    auto* zeros = app.add_subcommand("zeros", "real zeros with multiplicities");
    addFamily(zeros, o);
    zeros->add_option("--n", o.n, "degree")->required();
    addFormat(zeros, o);

    auto* ext = app.add_subcommand("extrema", "extreme points of the m=2, p=2 family on [-1,1]");
    ext->add_option("--n", o.n, "degree (>= 3)")->required();
    addFormat(ext, o);

    auto* gram = app.add_subcommand("gram", "exact Gram matrix and band report");
    addFamily(gram, o);
    gram->add_option("--weight", o.weight, "half-exponent q of (1-x^2)^(q/2), q >= -1")->capture_default_str();
    gram->add_option("--range", o.range, "degrees first..last")->required();
    addFormat(gram, o);

    auto* verify = app.add_subcommand("verify", "run identity and erratum checks");
    verify->add_option("--suite", o.suite, "all, oracle, identities, errata, constructions, analysis, orthogonality, recurrences")
        ->capture_default_str();
    verify->add_option("--range", o.range, "largest ground-set size n*p+m for oracle-backed sweeps");
    addFormat(verify, o);

    auto* oracle = app.add_subcommand("oracle", "closed-form count against brute-force enumeration");
    oracle->add_option("--n", o.n, "number of blocks")->required();
    oracle->add_option("--k", o.k, "subset size minus n")->required();
    addFamily(oracle, o);
    addFormat(oracle, o);

    auto* exp = app.add_subcommand("export", "write b-files and JSON documents");
    exp->add_option("--out", o.out, "output directory")->capture_default_str();
    exp->add_option("--max-n", o.maxN, "last row")->capture_default_str();
    auto* expM = exp->add_option("--m", o.m, "single family offset (default: m = 2..6 with p = 2)");
    exp->add_option("--p", o.p, "single family block size")->needs(expM);
    exp->add_option("--cache-dir", o.cacheDir, "persistent row cache directory");

    CLI11_PARSE(app, argc, argv);

    try {
        const FamilyId family{o.m, o.p};
        CommandResult result;
        if (triangle->parsed()) {
            result = cmdTriangle(family, o.maxN, parseFormat(o.format), cacheDir(o));
        } else if (poly->parsed()) {
            result = cmdPoly(o.n, family, parseBuildMethod(o.method), parseFormat(o.format));
        } else if (eval->parsed()) {
            result = cmdEval(o.n, family, o.x, parseFormat(o.format));
        } else if (zeros->parsed()) {
            result = cmdZeros(o.n, family, parseFormat(o.format));
        } else if (ext->parsed()) {
            result = cmdExtrema(o.n, parseFormat(o.format));
        } else if (gram->parsed()) {
            const auto [first, last] = parseRange(o.range);
            result = cmdGram(first, last, family, o.weight, parseFormat(o.format));
        } else if (verify->parsed()) {
            VerifyOptions vo;
            if (!o.range.empty()) {
                const auto [lo, hi] = parseRange(o.range);
                if (lo != hi) throw UsageError("verify --range takes a single bound");
                vo.groundBound = hi;
            }
            result = cmdVerify(o.suite, vo, parseFormat(o.format));
        } else if (oracle->parsed()) {
            result = cmdOracle(o.n, o.k, o.m, o.p, parseFormat(o.format));
        } else if (exp->parsed()) {
            std::optional<FamilyId> single;
            if (expM->count() > 0) single = family;
            result = cmdExport(o.out, o.maxN, single, cacheDir(o));
        }
        std::cout << result.output;
        return result.exitCode;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}
