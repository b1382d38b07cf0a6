#pragma once

#include <string>
#include <vector>

#include "secant/variety.hpp"

namespace secant {

enum class VerifySuite { Default, Extended };

struct CheckResult {
    std::string name;
    bool passed = true;
    /// On failure: the first counterexample's inputs and both values.
    std::string detail;
};

/// The shipped test corpus: three curves and three products of projective
/// spaces exercising genus 0..2 and dimensions 1..2.
std::vector<VarietySpec> verifyCorpus();

/// Runs the self-verification checks: ring laws, dual-path evaluation of the
/// Euler data and the secant nodes, polynomiality beyond the interpolation
/// nodes, the catalecticant oracles for rational normal curves, the
/// projective-normality anchor P(1) = l(1), the alternating-sum consistency
/// of the cohomology tables, and table structure. The extended suite adds
/// the classical degree law over a (genus, degree) grid, the interpolation
/// denominator bound, and larger varieties. When cacheDir is nonempty every
/// cached envelope found there is recomputed and byte-compared.
std::vector<CheckResult> runVerifySuite(VerifySuite suite, const std::string& cacheDir = "");

}  // namespace secant
