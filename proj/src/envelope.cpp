#include "secant/envelope.hpp"

#include <cstdint>
#include <sstream>

#include "secant/errors.hpp"
#include "secant/secant_poly.hpp"
#include "secant/taut_cohomology.hpp"
#include "secant/version.hpp"

namespace secant {

namespace {

int computationSecantIndex(const std::string& computation, int degreeSecant) {
    if (computation == "poly1" || computation == "table2") return 1;
    if (computation == "poly2" || computation == "table3") return 2;
    if (computation == "degree") {
        if (degreeSecant != 1 && degreeSecant != 2)
            throw InputError("degree computation needs secant index 1 or 2");
        return degreeSecant;
    }
    throw InputError("unknown computation '" + computation + "'");
}

Json reportPayload(const SecantReport& r) {
    Json payload;
    payload["secant"] = r.secantIndex;
    Json coefficients = Json::array();
    for (const auto& c : r.polynomial.coefficients()) coefficients.push_back(c.fractionString());
    payload["coefficients"] = std::move(coefficients);
    payload["expected_dim"] = r.polynomial.expectedDim();
    payload["dimension"] = r.dimension;
    payload["degree"] = r.degree.fractionString();
    payload["fills_ambient"] = r.fillsAmbient;
    Json nodes = Json::array();
    for (const auto& [ell, value] : r.nodeValues)
        nodes.push_back(Json::array({ell, value.fractionString()}));
    payload["nodes"] = std::move(nodes);
    return payload;
}

Json tablePayload(SecantCalculator& calc, int k, long ellLo, long ellHi) {
    const CohomologyTable table = buildCohomologyTable(calc, k, ellLo, ellHi);
    Json payload;
    payload["k"] = k;
    payload["ell_lo"] = ellLo;
    payload["ell_hi"] = ellHi;
    Json rows = Json::array();
    // emitted sorted by (ell, i)
    for (long ell = ellLo; ell <= ellHi; ++ell)
        for (long i = 0;; ++i) {
            const auto it = table.rows.find({i, ell});
            if (it == table.rows.end()) break;
            rows.push_back(Json::array({i, ell, it->second.get_str()}));
        }
    payload["rows"] = std::move(rows);
    return payload;
}

std::uint64_t fnv1a64(const std::string& text) {
    std::uint64_t hash = 1469598103934665603ULL;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 1099511628211ULL;
    }
    return hash;
}

}  // namespace

bool operator==(const ResultEnvelope& a, const ResultEnvelope& b) {
    return a.toolVersion == b.toolVersion && a.variety == b.variety &&
           a.computation == b.computation && a.payload == b.payload &&
           a.positivity.ok == b.positivity.ok && a.positivity.message == b.positivity.message;
}

Json varietyToJson(const VarietySpec& v) {
    Json j;
    if (v.isCurve()) {
        j["type"] = "curve";
        j["genus"] = v.curve().genus;
        j["degree"] = v.curve().degree;
        return j;
    }
    j["type"] = "pps";
    j["dims"] = v.productProj().ring.factorDims;
    j["degrees"] = v.productProj().degrees;
    return j;
}

VarietySpec varietyFromJson(const Json& j) {
    try {
        const std::string type = j.at("type").get<std::string>();
        if (type == "curve")
            return VarietySpec::curve(j.at("genus").get<long>(), j.at("degree").get<long>());
        if (type == "pps")
            return VarietySpec::productProj(j.at("dims").get<std::vector<int>>(),
                                            j.at("degrees").get<std::vector<long>>());
        throw InputError("unknown variety type '" + type + "'");
    } catch (const Json::exception& ex) {
        throw InputError(std::string("malformed variety JSON: ") + ex.what());
    }
}

Json envelopeToJson(const ResultEnvelope& env) {
    Json j;
    j["tool_version"] = env.toolVersion;
    j["variety"] = varietyToJson(env.variety);
    j["computation"] = env.computation;
    j["payload"] = env.payload;
    j["positivity"]["status"] = env.positivity.ok ? "ok" : "warning";
    j["positivity"]["message"] = env.positivity.message;
    return j;
}

ResultEnvelope envelopeFromJson(const Json& j) {
    try {
        ResultEnvelope env{j.at("tool_version").get<std::string>(),
                           varietyFromJson(j.at("variety")),
                           j.at("computation").get<std::string>(),
                           j.at("payload"),
                           Positivity{}};
        const std::string status = j.at("positivity").at("status").get<std::string>();
        if (status != "ok" && status != "warning")
            throw InputError("unknown positivity status '" + status + "'");
        env.positivity.ok = status == "ok";
        env.positivity.message = j.at("positivity").at("message").get<std::string>();
        return env;
    } catch (const Json::exception& ex) {
        throw InputError(std::string("malformed envelope JSON: ") + ex.what());
    }
}

std::string envelopeBytes(const ResultEnvelope& env) {
    return envelopeToJson(env).dump(2) + "\n";
}

ResultEnvelope computeEnvelope(const VarietySpec& v, const std::string& computation, long ellLo,
                               long ellHi, int degreeSecant) {
    const int secantIndex = computationSecantIndex(computation, degreeSecant);
    SecantCalculator calc(v);
    ResultEnvelope env{std::string(kToolVersion), v, computation, Json(),
                       calc.euler().validatePositivity(secantIndex)};
    if (computation == "poly1" || computation == "poly2") {
        env.payload = reportPayload(calc.report(secantIndex));
    } else if (computation == "table2" || computation == "table3") {
        env.payload = tablePayload(calc, computation == "table2" ? 2 : 3, ellLo, ellHi);
    } else {  // "degree"
        const SecantReport r = calc.report(secantIndex);
        env.payload["secant"] = r.secantIndex;
        env.payload["dimension"] = r.dimension;
        env.payload["degree"] = r.degree.fractionString();
        env.payload["fills_ambient"] = r.fillsAmbient;
    }
    return env;
}

std::string envelopeFilename(const VarietySpec& v, const std::string& computation, long ellLo,
                             long ellHi, int degreeSecant) {
    std::ostringstream key;
    key << v.canonical() << "|" << computation;
    if (computation == "table2" || computation == "table3")
        key << "|ell=" << ellLo << ".." << ellHi;
    if (computation == "degree") key << "|secant=" << degreeSecant;
    std::ostringstream name;
    name << computation << "-" << std::hex << fnv1a64(key.str()) << ".json";
    return name.str();
}

}  // namespace secant
