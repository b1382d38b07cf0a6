#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "secant/envelope.hpp"
#include "secant/errors.hpp"
#include "secant/manifest.hpp"
#include "secant/secant_poly.hpp"
#include "secant/taut_cohomology.hpp"
#include "secant/verify.hpp"
#include "secant/version.hpp"

namespace fs = std::filesystem;
using namespace secant;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitStrictPositivity = 2;
constexpr int kExitVerifyFailed = 3;
constexpr int kExitPartialFailure = 4;

struct VarietyFlags {
    std::string space;
    long genus = 0;
    long degree = 0;
    std::vector<int> dims;
    std::vector<long> degrees;
};

void addVarietyOptions(CLI::App* cmd, VarietyFlags& flags) {
    cmd->add_option("--space", flags.space, "Variety kind: curve or pps")->required();
    cmd->add_option("--genus", flags.genus, "Curve genus");
    cmd->add_option("--degree", flags.degree, "Curve embedding degree");
    cmd->add_option("--dims", flags.dims, "Projective factor dimensions, comma separated")
        ->delimiter(',');
    cmd->add_option("--degrees", flags.degrees, "Line-bundle multidegree, comma separated")
        ->delimiter(',');
}

VarietySpec varietyFromFlags(const VarietyFlags& flags) {
    if (flags.space == "curve") {
        if (flags.degree == 0) throw InputError("curve needs --degree");
        return VarietySpec::curve(flags.genus, flags.degree);
    }
    if (flags.space == "pps") {
        if (flags.dims.empty() || flags.degrees.empty())
            throw InputError("pps needs --dims and --degrees");
        return VarietySpec::productProj(flags.dims, flags.degrees);
    }
    throw InputError("--space must be 'curve' or 'pps'");
}

std::pair<long, long> parseEllRange(const std::string& text) {
    try {
        const auto dots = text.find("..");
        if (dots == std::string::npos) {
            const long v = std::stol(text);
            return {v, v};
        }
        return {std::stol(text.substr(0, dots)), std::stol(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw InputError("malformed twist range '" + text + "' (expected A..B)");
    }
}

/// Returns true when --strict must abort with exit code 2.
bool strictGate(const VarietySpec& v, int secantIndex, bool strict) {
    const Positivity p = EulerData(v).validatePositivity(secantIndex);
    if (p.ok || !strict) return false;
    std::cerr << "positivity warning (strict): " << p.message << "\n";
    return true;
}

int runPoly(const VarietySpec& v, int secantIndex, const std::string& format, bool strict) {
    if (strictGate(v, secantIndex, strict)) return kExitStrictPositivity;
    if (format == "json") {
        const ResultEnvelope env =
            computeEnvelope(v, secantIndex == 1 ? "poly1" : "poly2", 1, 1, secantIndex);
        std::cout << envelopeBytes(env);
        return kExitOk;
    }
    SecantCalculator calc(v);
    const SecantReport r = calc.report(secantIndex);
    std::cout << "variety: " << v.canonical() << "\n";
    std::cout << "secant: " << r.secantIndex << "\n";
    if (r.positivity.ok)
        std::cout << "positivity: ok\n";
    else
        std::cout << "positivity: warning - " << r.positivity.message << "\n";
    std::cout << "dim " << r.dimension << ", degree " << r.degree.str();
    if (r.fillsAmbient) std::cout << " (fills ambient space)";
    std::cout << "\n";
    std::cout << "P(l) = " << r.polynomial.render() << "\n";
    std::cout << "nodes:";
    for (const auto& [ell, value] : r.nodeValues)
        std::cout << " (" << ell << ", " << value.str() << ")";
    std::cout << "\n";
    return kExitOk;
}

int runDegree(const VarietySpec& v, int secantIndex, const std::string& format, bool strict) {
    if (strictGate(v, secantIndex, strict)) return kExitStrictPositivity;
    if (format == "json") {
        std::cout << envelopeBytes(computeEnvelope(v, "degree", 1, 1, secantIndex));
        return kExitOk;
    }
    SecantCalculator calc(v);
    const SecantReport r = calc.report(secantIndex);
    std::cout << "dim " << r.dimension << ", degree " << r.degree.str() << "\n";
    if (!r.positivity.ok) std::cerr << "positivity warning: " << r.positivity.message << "\n";
    return kExitOk;
}

int runNodes(const VarietySpec& v, int secantIndex, bool strict) {
    if (strictGate(v, secantIndex, strict)) return kExitStrictPositivity;
    SecantCalculator calc(v);
    const SecantReport r = calc.report(secantIndex);
    std::cout << "ell,value\n";
    for (const auto& [ell, value] : r.nodeValues) std::cout << ell << "," << value.str() << "\n";
    return kExitOk;
}

int runTable(const VarietySpec& v, int k, const std::string& ellRange, bool strict) {
    if (strictGate(v, k - 1, strict)) return kExitStrictPositivity;
    const auto [lo, hi] = parseEllRange(ellRange);
    SecantCalculator calc(v);
    const CohomologyTable table = buildCohomologyTable(calc, k, lo, hi);
    std::cout << "i,ell,dim\n";
    for (long ell = lo; ell <= hi; ++ell)
        for (long i = 0;; ++i) {
            const auto it = table.rows.find({i, ell});
            if (it == table.rows.end()) break;
            std::cout << i << "," << ell << "," << it->second.get_str() << "\n";
        }
    return kExitOk;
}

int runVerify(const std::string& suiteName, const std::string& cacheDir) {
    VerifySuite suite;
    if (suiteName == "default")
        suite = VerifySuite::Default;
    else if (suiteName == "extended")
        suite = VerifySuite::Extended;
    else
        throw InputError("--suite must be 'default' or 'extended'");
    const auto results = runVerifySuite(suite, cacheDir);
    bool allPassed = true;
    for (const auto& r : results) {
        if (r.passed) {
            std::cout << "[ok]   " << r.name;
            if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
            std::cout << "\n";
        } else {
            allPassed = false;
            std::cout << "[FAIL] " << r.name << " - " << r.detail << "\n";
        }
    }
    std::cout << (allPassed ? "all checks passed" : "verification failed") << "\n";
    return allPassed ? kExitOk : kExitVerifyFailed;
}

struct BatchJob {
    VarietySpec variety;
    std::string computation;
    long ellLo = 1;
    long ellHi = 1;
    int secantIndex = 1;
    std::string filename;
    std::string status;
    bool failed = false;
};

int runBatch(const std::string& manifestPath, const std::string& outDir,
             const std::string& cacheDir, int threads) {
    Manifest manifest;
    try {
        manifest = parseManifestFile(manifestPath);
    } catch (const InputError& ex) {
        std::cerr << ex.what() << "\n";
        return kExitUsage;
    }
    std::error_code ec;
    fs::create_directories(outDir, ec);
    if (ec || !fs::is_directory(outDir)) {
        std::cerr << "cannot create output directory '" << outDir << "'\n";
        return kExitUsage;
    }
    if (!cacheDir.empty()) fs::create_directories(cacheDir);

    std::vector<BatchJob> jobs;
    for (const auto& entry : manifest.entries)
        for (const auto& computation : entry.computations) {
            BatchJob job{entry.variety, computation,      entry.ellLo, entry.ellHi,
                         entry.secantIndex, std::string(), std::string(), false};
            job.filename = envelopeFilename(entry.variety, computation, entry.ellLo, entry.ellHi,
                                            entry.secantIndex);
            jobs.push_back(std::move(job));
        }

    auto process = [&](BatchJob& job) {
        try {
            std::string bytes;
            bool fromCache = false;
            const fs::path cachePath =
                cacheDir.empty() ? fs::path() : fs::path(cacheDir) / job.filename;
            if (!cacheDir.empty() && fs::exists(cachePath)) {
                std::ifstream in(cachePath, std::ios::binary);
                std::stringstream buffer;
                buffer << in.rdbuf();
                std::string cached = buffer.str();
                try {
                    const ResultEnvelope env = envelopeFromJson(Json::parse(cached));
                    if (env.toolVersion == kToolVersion) {
                        bytes = std::move(cached);
                        fromCache = true;
                    }
                } catch (const std::exception&) {
                    // unreadable cache entry: fall through and recompute
                }
            }
            if (!fromCache) {
                const ResultEnvelope env = computeEnvelope(job.variety, job.computation,
                                                           job.ellLo, job.ellHi, job.secantIndex);
                bytes = envelopeBytes(env);
                if (!cacheDir.empty()) {
                    std::ofstream out(cachePath, std::ios::binary);
                    out << bytes;
                }
            }
            std::ofstream out(fs::path(outDir) / job.filename, std::ios::binary);
            if (!out) throw InputError("cannot write output file " + job.filename);
            out << bytes;
            job.status = (fromCache ? "cached " : "written ") + job.filename;
        } catch (const std::exception& ex) {
            job.failed = true;
            job.status = "failed " + job.filename + ": " + ex.what();
        }
    };

    const int workerCount = std::max(1, threads);
    if (workerCount == 1 || jobs.size() <= 1) {
        for (auto& job : jobs) process(job);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> workers;
        for (int w = 0; w < workerCount; ++w)
            workers.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < jobs.size(); i = next.fetch_add(1))
                    process(jobs[i]);
            });
        for (auto& worker : workers) worker.join();
    }

    bool anyFailed = false;
    for (const auto& job : jobs) {
        std::cout << job.status << "\n";
        anyFailed = anyFailed || job.failed;
    }
    return anyFailed ? kExitPartialFailure : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Hilbert polynomials of secant varieties and cohomology tables of "
                 "symmetric powers of tautological bundles"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    const char* cacheEnv = std::getenv("SECANT_CACHE");
    const std::string defaultCache = cacheEnv ? cacheEnv : "";

    VarietyFlags polyVariety, tableVariety, degreeVariety, nodesVariety;
    int polySecant = 1, degreeSecant = 1, nodesSecant = 1, tableK = 2;
    std::string polyFormat = "text", degreeFormat = "text";
    bool polyStrict = false, tableStrict = false, degreeStrict = false, nodesStrict = false;
    std::string tableEll;
    std::string verifySuite = "default", verifyCache = defaultCache;
    std::string batchManifest, batchOut, batchCache = defaultCache;
    int batchThreads = 1;

    CLI::App* poly = app.add_subcommand("poly", "Hilbert polynomial of a secant variety");
    addVarietyOptions(poly, polyVariety);
    poly->add_option("--secant", polySecant, "Secant index (1 or 2)")
        ->check(CLI::IsMember({1, 2}));
    poly->add_option("--format", polyFormat, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    poly->add_flag("--strict", polyStrict, "Treat positivity warnings as errors (exit 2)");

    CLI::App* table =
        app.add_subcommand("table", "Cohomology dimension table of S^ell E_{k,L} on X^[k]");
    addVarietyOptions(table, tableVariety);
    table->add_option("--k", tableK, "Number of points (2 or 3)")->check(CLI::IsMember({2, 3}));
    table->add_option("--ell", tableEll, "Twist range A..B (positive)")->required();
    table->add_flag("--strict", tableStrict, "Treat positivity warnings as errors (exit 2)");

    CLI::App* degree = app.add_subcommand("degree", "Dimension and degree of a secant variety");
    addVarietyOptions(degree, degreeVariety);
    degree->add_option("--secant", degreeSecant, "Secant index (1 or 2)")
        ->check(CLI::IsMember({1, 2}));
    degree->add_option("--format", degreeFormat, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    degree->add_flag("--strict", degreeStrict, "Treat positivity warnings as errors (exit 2)");

    CLI::App* nodes = app.add_subcommand("nodes", "Raw interpolation node values (ell, P(ell))");
    addVarietyOptions(nodes, nodesVariety);
    nodes->add_option("--secant", nodesSecant, "Secant index (1 or 2)")
        ->check(CLI::IsMember({1, 2}));
    nodes->add_flag("--strict", nodesStrict, "Treat positivity warnings as errors (exit 2)");

    CLI::App* verify = app.add_subcommand("verify", "Run the self-verification suite");
    verify->add_option("--suite", verifySuite, "default or extended");
    verify->add_option("--cache", verifyCache,
                       "Validate cached envelopes in this directory (default $SECANT_CACHE)");

    CLI::App* batch = app.add_subcommand("batch", "Run every computation in a manifest");
    batch->add_option("manifest", batchManifest, "Manifest path")->required();
    batch->add_option("--out", batchOut, "Output directory")->required();
    batch->add_option("--cache", batchCache,
                      "Envelope cache directory (default $SECANT_CACHE)");
    batch->add_option("--threads", batchThreads, "Worker thread count for batch entries");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(poly))
            return runPoly(varietyFromFlags(polyVariety), polySecant, polyFormat, polyStrict);
        if (app.got_subcommand(table))
            return runTable(varietyFromFlags(tableVariety), tableK, tableEll, tableStrict);
        if (app.got_subcommand(degree))
            return runDegree(varietyFromFlags(degreeVariety), degreeSecant, degreeFormat,
                             degreeStrict);
        if (app.got_subcommand(nodes))
            return runNodes(varietyFromFlags(nodesVariety), nodesSecant, nodesStrict);
        if (app.got_subcommand(verify)) return runVerify(verifySuite, verifyCache);
        if (app.got_subcommand(batch))
            return runBatch(batchManifest, batchOut, batchCache, batchThreads);
    } catch (const InputError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    } catch (const ConsistencyError& ex) {
        std::cerr << "internal consistency error: " << ex.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
