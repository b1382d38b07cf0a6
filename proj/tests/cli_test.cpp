#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exitCode = -1;
    std::string output;
};

std::string cliPath() {
    const char* path = std::getenv("SECANT_CLI");
    REQUIRE_MESSAGE(path != nullptr, "SECANT_CLI must point to the secant binary");
    return path;
}

RunResult run(const std::string& args) {
    const std::string command = cliPath() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    size_t got;
    while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) result.output.append(buffer, got);
    const int status = pclose(pipe);
    result.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

fs::path freshDir(const std::string& tag) {
    static std::mt19937_64 rng(std::random_device{}());
    const fs::path dir =
        fs::temp_directory_path() / ("secant-test-" + tag + "-" + std::to_string(rng()));
    fs::create_directories(dir);
    return dir;
}

std::string readFile(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::map<std::string, std::string> dirContents(const fs::path& dir) {
    std::map<std::string, std::string> out;
    for (const auto& entry : fs::directory_iterator(dir))
        out[entry.path().filename().string()] = readFile(entry.path());
    return out;
}

void writeFile(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

const std::string kCurveFlags = "--space curve --genus 0 --degree 4";

}  // namespace

TEST_CASE("poly text output") {
    const RunResult r = run("poly " + kCurveFlags + " --secant 1 --format text");
    CHECK(r.exitCode == 0);
    CHECK(r.output.find("dim 3, degree 3") != std::string::npos);
    CHECK(r.output.find("P(l) = (1/2)l^3 + (3/2)l^2 + 2l + 1") != std::string::npos);
    CHECK(r.output.find("positivity: ok") != std::string::npos);
    CHECK(r.output.find("(3, 34)") != std::string::npos);
}

TEST_CASE("poly json output") {
    const RunResult r = run("poly " + kCurveFlags + " --secant 1 --format json");
    CHECK(r.exitCode == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j.at("computation") == "poly1");
    CHECK(j.at("payload").at("coefficients") ==
          nlohmann::json::array({"1/1", "2/1", "3/2", "1/2"}));
    CHECK(j.at("positivity").at("status") == "ok");

    const RunResult warned = run("poly --space curve --genus 0 --degree 3 --secant 2 --format json");
    CHECK(warned.exitCode == 0);
    CHECK(nlohmann::json::parse(warned.output).at("positivity").at("status") == "warning");
}

TEST_CASE("invalid flags exit 1") {
    CHECK(run("poly --secant 1").exitCode == 1);   // missing --space
    CHECK(run("poly " + kCurveFlags + " --secant 3").exitCode == 1);
    CHECK(run("poly --space torus --degree 1").exitCode == 1);
    CHECK(run("table " + kCurveFlags).exitCode == 1);  // missing --ell
    CHECK(run("frobnicate").exitCode == 1);
}

TEST_CASE("strict positivity exits 2") {
    CHECK(run("poly --space pps --dims 2 --degrees 1 --secant 2 --strict").exitCode == 2);
    CHECK(run("poly --space pps --dims 2 --degrees 1 --secant 2").exitCode == 0);
    CHECK(run("degree --space curve --genus 0 --degree 3 --secant 2 --strict").exitCode == 2);
}

TEST_CASE("table emits sorted CSV") {
    const RunResult r = run("table " + kCurveFlags + " --k 2 --ell 3..4");
    CHECK(r.exitCode == 0);
    // P1(4) = C(8,4) - C(5,4) = 65
    CHECK(r.output == "i,ell,dim\n0,3,34\n1,3,0\n0,4,65\n1,4,0\n");
    CHECK(run("table " + kCurveFlags + " --k 2 --ell 0..2").exitCode == 1);

    const RunResult surface = run("table --space pps --dims 2 --degrees 8 --k 3 --ell 1..1");
    CHECK(surface.exitCode == 0);
    std::istringstream lines(surface.output);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "i,ell,dim");
    int nonzero = 0, rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        if (line.size() >= 2 && line.substr(line.size() - 2) != ",0") ++nonzero;
    }
    CHECK(rows == 5);  // i = 0..2n for n = 2
    CHECK(nonzero == 1);
}

TEST_CASE("nodes dumps the interpolation data") {
    const RunResult r = run("nodes " + kCurveFlags + " --secant 1");
    CHECK(r.exitCode == 0);
    CHECK(r.output == "ell,value\n1,5\n3,34\n5,111\n7,260\n");
}

TEST_CASE("degree prints dimension and degree only") {
    const RunResult r = run("degree --space curve --genus 0 --degree 6 --secant 2");
    CHECK(r.exitCode == 0);
    CHECK(r.output == "dim 5, degree 4\n");
}

TEST_CASE("batch is deterministic and cache-aware") {
    const fs::path work = freshDir("batch");
    const fs::path manifest = work / "sweep.manifest";
    writeFile(manifest, R"([entry]
space = curve
genus = 0
degree = 4
computations = poly1

[entry]
space = curve
genus = 0
degree = 6
computations = poly2, degree
secant = 2

[entry]
space = pps
dims = 2
degrees = 8
computations = table2
ell = 1..3
)");

    const fs::path out1 = work / "out1";
    const fs::path out2 = work / "out2";
    const RunResult r1 = run("batch " + manifest.string() + " --out " + out1.string());
    CHECK(r1.exitCode == 0);
    const RunResult r2 =
        run("batch " + manifest.string() + " --out " + out2.string() + " --threads 3");
    CHECK(r2.exitCode == 0);
    const auto files1 = dirContents(out1);
    const auto files2 = dirContents(out2);
    CHECK(files1.size() == 4);
    CHECK(files1 == files2);  // byte-identical across runs and thread counts

    // warm cache: identical bytes, statuses say cached
    const fs::path cache = work / "cache";
    const fs::path out3 = work / "out3";
    const fs::path out4 = work / "out4";
    CHECK(run("batch " + manifest.string() + " --out " + out3.string() + " --cache " +
              cache.string())
              .exitCode == 0);
    const RunResult warm = run("batch " + manifest.string() + " --out " + out4.string() +
                               " --cache " + cache.string());
    CHECK(warm.exitCode == 0);
    CHECK(dirContents(out3) == files1);
    CHECK(dirContents(out4) == files1);
    std::istringstream statuses(warm.output);
    std::string line;
    int cached = 0;
    while (std::getline(statuses, line)) {
        CHECK(line.rfind("cached ", 0) == 0);
        ++cached;
    }
    CHECK(cached == 4);

    fs::remove_all(work);
}

TEST_CASE("batch edge cases") {
    const fs::path work = freshDir("batch-edge");

    const fs::path empty = work / "empty.manifest";
    writeFile(empty, "# no entries\n");
    const fs::path outEmpty = work / "out-empty";
    const RunResult emptyRun = run("batch " + empty.string() + " --out " + outEmpty.string());
    CHECK(emptyRun.exitCode == 0);
    CHECK(emptyRun.output.empty());
    CHECK(dirContents(outEmpty).empty());

    const fs::path broken = work / "broken.manifest";
    writeFile(broken, "[entry]\nspace = curve\n");
    CHECK(run("batch " + broken.string() + " --out " + (work / "out-none").string()).exitCode ==
          1);

    // a bad twist range fails that entry but not the whole batch
    const fs::path partial = work / "partial.manifest";
    writeFile(partial, R"([entry]
space = curve
genus = 0
degree = 4
computations = poly1

[entry]
space = curve
genus = 0
degree = 4
computations = table2
ell = 0..2
)");
    const fs::path outPartial = work / "out-partial";
    const RunResult partialRun =
        run("batch " + partial.string() + " --out " + outPartial.string());
    CHECK(partialRun.exitCode == 4);
    CHECK(partialRun.output.find("written poly1-") != std::string::npos);
    CHECK(partialRun.output.find("failed table2-") != std::string::npos);
    CHECK(dirContents(outPartial).size() == 1);

    CHECK(run("batch " + (work / "missing.manifest").string() + " --out " +
              (work / "out-missing").string())
              .exitCode == 1);

    fs::remove_all(work);
}

TEST_CASE("verify detects corrupted cache entries") {
    const fs::path work = freshDir("verify-cache");
    const fs::path manifest = work / "one.manifest";
    writeFile(manifest, R"([entry]
space = curve
genus = 0
degree = 4
computations = poly1
)");
    const fs::path cache = work / "cache";
    const fs::path out = work / "out";
    REQUIRE(run("batch " + manifest.string() + " --out " + out.string() + " --cache " +
                cache.string())
                .exitCode == 0);

    // pristine cache passes
    const RunResult good = run("verify --suite default --cache " + cache.string());
    CHECK(good.exitCode == 0);
    CHECK(good.output.find("[ok]   cache-validation") != std::string::npos);

    // tamper with the payload, keeping valid JSON and the same tool version
    fs::path entry;
    for (const auto& f : fs::directory_iterator(cache)) entry = f.path();
    auto j = nlohmann::json::parse(readFile(entry));
    j["payload"]["degree"] = "7/1";
    writeFile(entry, j.dump(2) + "\n");

    const RunResult bad = run("verify --suite default --cache " + cache.string());
    CHECK(bad.exitCode == 3);
    CHECK(bad.output.find("[FAIL] cache-validation") != std::string::npos);

    fs::remove_all(work);
}
