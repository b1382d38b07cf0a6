#pragma once

#include <istream>
#include <string>
#include <vector>

#include "secant/variety.hpp"

namespace secant {

/// One batch request: a variety, the computations to run on it, the twist
/// window for table computations, and the secant index for the bare degree
/// computation.
struct ManifestEntry {
    VarietySpec variety;
    std::vector<std::string> computations;
    long ellLo = 1;
    long ellHi = 1;
    int secantIndex = 1;
};

struct Manifest {
    std::vector<ManifestEntry> entries;
};

/// Parses the line-oriented manifest format: one `[entry]` block per entry,
/// `key = value` lines, `#` comments. Keys: space (curve|pps), genus, degree,
/// dims, degrees, computations (comma list of poly1, poly2, table2, table3,
/// degree), ell (A..B, required by table computations), secant (1|2, used by
/// the degree computation). Throws InputError with a line reference.
Manifest parseManifest(std::istream& in);
Manifest parseManifestFile(const std::string& path);

}  // namespace secant
