#include "secant/manifest.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "secant/errors.hpp"

namespace secant {

namespace {

const std::vector<std::string> kKnownComputations = {"poly1", "poly2", "table2", "table3",
                                                     "degree"};

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> splitCommaList(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

long parseLong(const std::string& value, int line) {
    try {
        size_t pos = 0;
        long v = std::stol(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw InputError("manifest line " + std::to_string(line) + ": malformed integer '" +
                         value + "'");
    }
}

struct RawEntry {
    std::map<std::string, std::string> pairs;
    std::map<std::string, int> lines;
    int startLine = 0;
};

ManifestEntry buildEntry(const RawEntry& raw) {
    auto lineFor = [&](const std::string& key) {
        auto it = raw.lines.find(key);
        return it == raw.lines.end() ? raw.startLine : it->second;
    };
    auto get = [&](const std::string& key) -> std::optional<std::string> {
        auto it = raw.pairs.find(key);
        if (it == raw.pairs.end()) return std::nullopt;
        return it->second;
    };
    auto require = [&](const std::string& key) {
        auto v = get(key);
        if (!v)
            throw InputError("manifest line " + std::to_string(raw.startLine) +
                             ": entry is missing key '" + key + "'");
        return *v;
    };

    for (const auto& [key, value] : raw.pairs) {
        static const std::vector<std::string> known = {"space",        "genus",  "degree", "dims",
                                                       "degrees",      "computations", "ell",
                                                       "secant"};
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw InputError("manifest line " + std::to_string(lineFor(key)) +
                             ": unknown key '" + key + "'");
    }

    const std::string space = require("space");
    std::optional<VarietySpec> variety;
    if (space == "curve") {
        variety = VarietySpec::curve(parseLong(require("genus"), lineFor("genus")),
                                     parseLong(require("degree"), lineFor("degree")));
    } else if (space == "pps") {
        std::vector<int> dims;
        for (const auto& d : splitCommaList(require("dims")))
            dims.push_back(static_cast<int>(parseLong(d, lineFor("dims"))));
        std::vector<long> degrees;
        for (const auto& d : splitCommaList(require("degrees")))
            degrees.push_back(parseLong(d, lineFor("degrees")));
        variety = VarietySpec::productProj(std::move(dims), std::move(degrees));
    } else {
        throw InputError("manifest line " + std::to_string(lineFor("space")) +
                         ": space must be 'curve' or 'pps'");
    }

    ManifestEntry entry{*variety, splitCommaList(require("computations")), 1, 1, 1};
    if (entry.computations.empty())
        throw InputError("manifest line " + std::to_string(lineFor("computations")) +
                         ": empty computation list");
    for (const auto& c : entry.computations)
        if (std::find(kKnownComputations.begin(), kKnownComputations.end(), c) ==
            kKnownComputations.end())
            throw InputError("manifest line " + std::to_string(lineFor("computations")) +
                             ": unknown computation '" + c + "'");

    const bool wantsTable =
        std::find(entry.computations.begin(), entry.computations.end(), "table2") !=
            entry.computations.end() ||
        std::find(entry.computations.begin(), entry.computations.end(), "table3") !=
            entry.computations.end();
    if (auto ell = get("ell")) {
        const auto dots = ell->find("..");
        if (dots == std::string::npos) {
            entry.ellLo = entry.ellHi = parseLong(trim(*ell), lineFor("ell"));
        } else {
            entry.ellLo = parseLong(trim(ell->substr(0, dots)), lineFor("ell"));
            entry.ellHi = parseLong(trim(ell->substr(dots + 2)), lineFor("ell"));
        }
    } else if (wantsTable) {
        throw InputError("manifest line " + std::to_string(raw.startLine) +
                         ": table computations need an 'ell = A..B' range");
    }
    if (auto secant = get("secant")) {
        const long s = parseLong(*secant, lineFor("secant"));
        if (s != 1 && s != 2)
            throw InputError("manifest line " + std::to_string(lineFor("secant")) +
                             ": secant must be 1 or 2");
        entry.secantIndex = static_cast<int>(s);
    }
    return entry;
}

}  // namespace

Manifest parseManifest(std::istream& in) {
    Manifest manifest;
    std::optional<RawEntry> current;
    std::string line;
    int lineNo = 0;
    auto flush = [&] {
        if (current) manifest.entries.push_back(buildEntry(*current));
        current.reset();
    };
    while (std::getline(in, line)) {
        ++lineNo;
        const std::string text = trim(line);
        if (text.empty() || text[0] == '#') continue;
        if (text == "[entry]") {
            flush();
            current = RawEntry{};
            current->startLine = lineNo;
            continue;
        }
        const auto eq = text.find('=');
        if (eq == std::string::npos)
            throw InputError("manifest line " + std::to_string(lineNo) +
                             ": expected 'key = value' or '[entry]'");
        if (!current)
            throw InputError("manifest line " + std::to_string(lineNo) +
                             ": key outside of an [entry] block");
        const std::string key = trim(text.substr(0, eq));
        const std::string value = trim(text.substr(eq + 1));
        if (!current->pairs.emplace(key, value).second)
            throw InputError("manifest line " + std::to_string(lineNo) + ": duplicate key '" +
                             key + "'");
        current->lines[key] = lineNo;
    }
    flush();
    return manifest;
}

Manifest parseManifestFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open manifest '" + path + "'");
    return parseManifest(in);
}

}  // namespace secant
