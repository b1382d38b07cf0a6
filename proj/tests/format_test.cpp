#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "secant/envelope.hpp"
#include "secant/errors.hpp"
#include "secant/manifest.hpp"
#include "secant/version.hpp"

using namespace secant;

TEST_CASE("variety JSON round-trip") {
    for (const auto& v : {VarietySpec::curve(2, 9), VarietySpec::productProj({1, 2}, {4, 5})}) {
        CHECK(varietyFromJson(varietyToJson(v)) == v);
    }
    CHECK_THROWS_AS(varietyFromJson(Json{{"type", "plane"}}), InputError);
}

TEST_CASE("envelopes round-trip losslessly and deterministically") {
    const std::vector<std::tuple<VarietySpec, std::string, long, long, int>> fixtures = {
        {VarietySpec::curve(0, 4), "poly1", 1, 1, 1},
        {VarietySpec::curve(0, 6), "poly2", 1, 1, 2},
        {VarietySpec::curve(2, 9), "table2", 1, 3, 1},
        {VarietySpec::productProj({2}, {8}), "degree", 1, 1, 1},
        {VarietySpec::curve(0, 3), "poly1", 1, 1, 1},  // positivity warning carried
    };
    for (const auto& [v, computation, lo, hi, secant] : fixtures) {
        const ResultEnvelope env = computeEnvelope(v, computation, lo, hi, secant);
        CHECK(env.toolVersion == kToolVersion);
        const std::string bytes = envelopeBytes(env);
        const ResultEnvelope parsed = envelopeFromJson(Json::parse(bytes));
        CHECK(parsed == env);
        CHECK(envelopeBytes(parsed) == bytes);
    }
    CHECK_THROWS_AS(computeEnvelope(VarietySpec::curve(0, 4), "poly9", 1, 1, 1), InputError);
    CHECK_THROWS_AS(computeEnvelope(VarietySpec::curve(0, 4), "table2", 0, 2, 1), InputError);
    CHECK_THROWS_AS(computeEnvelope(VarietySpec::curve(0, 4), "degree", 1, 1, 3), InputError);
}

TEST_CASE("poly payload carries exact fraction strings") {
    const ResultEnvelope env = computeEnvelope(VarietySpec::curve(0, 4), "poly1", 1, 1, 1);
    const auto& coefficients = env.payload.at("coefficients");
    CHECK(coefficients == Json::array({"1/1", "2/1", "3/2", "1/2"}));
    CHECK(env.payload.at("dimension") == 3);
    CHECK(env.payload.at("degree") == "3/1");
    CHECK(env.payload.at("nodes")[1] == Json::array({3, "34/1"}));
    CHECK(env.positivity.ok);
}

TEST_CASE("table payload rows are sorted by (ell, i)") {
    const ResultEnvelope env = computeEnvelope(VarietySpec::curve(2, 9), "table2", 1, 2, 1);
    const auto& rows = env.payload.at("rows");
    CHECK(rows.size() == 4);
    CHECK(rows[0] == Json::array({0, 1, "8"}));
    CHECK(rows[1] == Json::array({1, 1, "16"}));
    CHECK(rows[2][1] == 2);
}

TEST_CASE("envelope filenames are stable and parameter-sensitive") {
    const VarietySpec v = VarietySpec::curve(0, 4);
    const std::string a = envelopeFilename(v, "table2", 1, 4, 1);
    CHECK(a == envelopeFilename(v, "table2", 1, 4, 1));
    CHECK(a != envelopeFilename(v, "table2", 1, 5, 1));
    CHECK(a.rfind("table2-", 0) == 0);
    CHECK(a.substr(a.size() - 5) == ".json");
    CHECK(envelopeFilename(v, "degree", 1, 1, 1) != envelopeFilename(v, "degree", 1, 1, 2));
    // poly filenames ignore the table window
    CHECK(envelopeFilename(v, "poly1", 1, 4, 1) == envelopeFilename(v, "poly1", 1, 9, 1));
}

TEST_CASE("manifest parsing") {
    std::istringstream in(R"(# sample manifest
[entry]
space = curve
genus = 0
degree = 4
computations = poly1, degree

[entry]
space = pps
dims = 1,1
degrees = 4,4
computations = table2
ell = 1..3

[entry]
space = curve
genus = 0
degree = 6
computations = poly2
secant = 2
)");
    const Manifest manifest = parseManifest(in);
    REQUIRE(manifest.entries.size() == 3);
    CHECK(manifest.entries[0].variety == VarietySpec::curve(0, 4));
    CHECK(manifest.entries[0].computations == std::vector<std::string>{"poly1", "degree"});
    CHECK(manifest.entries[0].secantIndex == 1);
    CHECK(manifest.entries[1].variety == VarietySpec::productProj({1, 1}, {4, 4}));
    CHECK(manifest.entries[1].ellLo == 1);
    CHECK(manifest.entries[1].ellHi == 3);
    CHECK(manifest.entries[2].secantIndex == 2);
}

TEST_CASE("manifest rejections") {
    auto expectReject = [](const std::string& text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(parseManifest(in), InputError);
    };
    expectReject("space = curve\n");                                        // key outside entry
    expectReject("[entry]\nspace = torus\ncomputations = poly1\n");         // bad space
    expectReject("[entry]\nspace = curve\ngenus = 0\ndegree = 4\n");        // no computations
    expectReject("[entry]\nspace = curve\ngenus = 0\ndegree = 4\ncomputations = hilb\n");
    expectReject("[entry]\nspace = curve\ngenus = 0\ndegree = 4\ncomputations = table2\n");
    expectReject("[entry]\nspace = curve\ngenus = 0\ndegree = 4\ncomputations = poly1\nsecant = 5\n");
    expectReject("[entry]\nspace = curve\ngenus = 0\ndegree = 4\ncolor = red\ncomputations = poly1\n");
    expectReject("[entry]\nspace = curve\ngenus = 0\ngenus = 1\ndegree = 4\ncomputations = poly1\n");
    expectReject("[entry]\nnot a key value line\n");

    std::istringstream empty("# nothing here\n");
    CHECK(parseManifest(empty).entries.empty());
}
