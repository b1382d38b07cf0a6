#pragma once

#include <json.hpp>

#include <string>

#include "secant/euler_data.hpp"
#include "secant/variety.hpp"

namespace secant {

using Json = nlohmann::ordered_json;

/// One self-describing computation result: what tool produced it, for which
/// variety, which computation, its payload, and the positivity status of the
/// input. Round-trips losslessly through its JSON form.
struct ResultEnvelope {
    std::string toolVersion;
    VarietySpec variety;
    std::string computation;
    Json payload;
    Positivity positivity;
};

bool operator==(const ResultEnvelope& a, const ResultEnvelope& b);

Json varietyToJson(const VarietySpec& v);
VarietySpec varietyFromJson(const Json& j);

Json envelopeToJson(const ResultEnvelope& env);
ResultEnvelope envelopeFromJson(const Json& j);

/// The exact bytes `batch` writes for an envelope (two-space indented JSON
/// plus a trailing newline); byte-identical across runs and thread counts.
std::string envelopeBytes(const ResultEnvelope& env);

/// Runs one named computation: "poly1", "poly2", "table2", "table3" or
/// "degree". ellLo/ellHi are consumed by the table computations,
/// degreeSecant by "degree".
ResultEnvelope computeEnvelope(const VarietySpec& v, const std::string& computation, long ellLo,
                               long ellHi, int degreeSecant);

/// Deterministic output filename "<computation>-<hash>.json", hashed over the
/// canonical variety string, the computation id, and its parameters.
std::string envelopeFilename(const VarietySpec& v, const std::string& computation, long ellLo,
                             long ellHi, int degreeSecant);

}  // namespace secant
