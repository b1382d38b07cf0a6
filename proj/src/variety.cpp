#include "secant/variety.hpp"

#include <numeric>
#include <sstream>

#include "secant/errors.hpp"

namespace secant {

namespace {

std::vector<long> parseLongList(const std::string& text) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        long value = std::stol(item, &pos);
        if (pos != item.size()) throw InputError("malformed integer list: '" + text + "'");
        out.push_back(value);
    }
    if (out.empty()) throw InputError("empty integer list");
    return out;
}

}  // namespace

VarietySpec::VarietySpec(CurveSpec c) : v_(c) {
    if (c.genus < 0) throw InputError("curve genus must be nonnegative");
    if (c.degree < 1) throw InputError("curve embedding degree must be positive");
}

VarietySpec::VarietySpec(ProductProjSpec p) : v_(std::move(p)) {
    const auto& pp = std::get<ProductProjSpec>(v_);
    if (pp.ring.factorDims.empty()) throw InputError("product of projective spaces needs factors");
    if (pp.degrees.size() != pp.ring.factorDims.size())
        throw InputError("line-bundle multidegree arity does not match factor count");
    for (long d : pp.degrees)
        if (d < 1) throw InputError("line-bundle multidegree entries must be positive");
}

VarietySpec VarietySpec::productProj(std::vector<int> dims, std::vector<long> degrees) {
    return ProductProjSpec{RingSpec(std::move(dims)), std::move(degrees)};
}

long VarietySpec::dimension() const {
    if (isCurve()) return 1;
    return productProj().ring.totalDim();
}

size_t VarietySpec::arity() const {
    if (isCurve()) return 1;
    return productProj().ring.factorDims.size();
}

std::string VarietySpec::canonical() const {
    std::ostringstream os;
    if (isCurve()) {
        os << "curve(genus=" << curve().genus << ",degree=" << curve().degree << ")";
        return os.str();
    }
    const auto& pp = productProj();
    os << "pps(dims=";
    for (size_t i = 0; i < pp.ring.factorDims.size(); ++i)
        os << (i ? "," : "") << pp.ring.factorDims[i];
    os << ";degrees=";
    for (size_t i = 0; i < pp.degrees.size(); ++i) os << (i ? "," : "") << pp.degrees[i];
    os << ")";
    return os.str();
}

VarietySpec VarietySpec::fromCanonical(const std::string& text) {
    auto expect = [&](bool ok) {
        if (!ok) throw InputError("malformed variety spec: '" + text + "'");
    };
    expect(!text.empty() && text.back() == ')');
    const auto open = text.find('(');
    expect(open != std::string::npos);
    const std::string kind = text.substr(0, open);
    const std::string body = text.substr(open + 1, text.size() - open - 2);
    if (kind == "curve") {
        const std::string genusKey = "genus=";
        const std::string degreeKey = ",degree=";
        expect(body.rfind(genusKey, 0) == 0);
        const auto comma = body.find(degreeKey);
        expect(comma != std::string::npos);
        long g = std::stol(body.substr(genusKey.size(), comma - genusKey.size()));
        long d = std::stol(body.substr(comma + degreeKey.size()));
        return CurveSpec{g, d};
    }
    if (kind == "pps") {
        const std::string dimsKey = "dims=";
        const std::string degreesKey = ";degrees=";
        expect(body.rfind(dimsKey, 0) == 0);
        const auto semi = body.find(degreesKey);
        expect(semi != std::string::npos);
        auto dimsLong = parseLongList(body.substr(dimsKey.size(), semi - dimsKey.size()));
        auto degrees = parseLongList(body.substr(semi + degreesKey.size()));
        std::vector<int> dims(dimsLong.begin(), dimsLong.end());
        return productProj(std::move(dims), std::move(degrees));
    }
    throw InputError("unknown variety kind: '" + kind + "'");
}

}  // namespace secant
