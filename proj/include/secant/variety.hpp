#pragma once

#include <string>
#include <variant>
#include <vector>

#include "secant/graded_ring.hpp"

namespace secant {

/// Smooth projective curve of genus g, embedded by a line bundle of degree d.
struct CurveSpec {
    long genus = 0;
    long degree = 1;

    bool operator==(const CurveSpec&) const = default;
};

/// Product of projective spaces with the multidegree line bundle
/// L = O(d_1, ..., d_k).
struct ProductProjSpec {
    RingSpec ring;
    std::vector<long> degrees;

    bool operator==(const ProductProjSpec&) const = default;
};

/// The input variety/embedding pair every computation is keyed on.
class VarietySpec {
public:
    VarietySpec(CurveSpec c);             // NOLINT: implicit conversions intended
    VarietySpec(ProductProjSpec p);       // NOLINT

    static VarietySpec curve(long genus, long degree) { return CurveSpec{genus, degree}; }
    static VarietySpec productProj(std::vector<int> dims, std::vector<long> degrees);

    bool isCurve() const { return std::holds_alternative<CurveSpec>(v_); }
    const CurveSpec& curve() const { return std::get<CurveSpec>(v_); }
    const ProductProjSpec& productProj() const { return std::get<ProductProjSpec>(v_); }

    long dimension() const;
    /// Length of a line-bundle multidegree: 1 for a curve, the factor count
    /// for a product of projective spaces.
    size_t arity() const;

    /// Canonical one-line form, e.g. "curve(genus=0,degree=4)" or
    /// "pps(dims=1,1;degrees=4,4)". Stable across runs; used in cache keys.
    std::string canonical() const;
    /// Inverse of canonical(); throws InputError on malformed text.
    static VarietySpec fromCanonical(const std::string& text);

    bool operator==(const VarietySpec&) const = default;

private:
    std::variant<CurveSpec, ProductProjSpec> v_;
};

}  // namespace secant
