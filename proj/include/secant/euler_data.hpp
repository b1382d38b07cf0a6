#pragma once

#include <gmpxx.h>

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "secant/graded_ring.hpp"
#include "secant/kclass.hpp"
#include "secant/rational.hpp"
#include "secant/variety.hpp"

namespace secant {

/// The dimensions h^i(X, O_X), i = 0..dim X. h^0 is always 1 (X connected).
struct HodgeVector {
    std::vector<long> dims;

    explicit HodgeVector(std::vector<long> d);
    /// h^i, with 0 for i out of range.
    long operator[](size_t i) const { return i < dims.size() ? dims[i] : 0; }
    size_t size() const { return dims.size(); }
};

struct Positivity {
    bool ok = true;
    std::string message;
};

/// Exact Euler-characteristic primitives of a polarized variety (X, L):
/// l(a) = chi(L^a), s1(a,b) = chi(S^a Omega_X (x) L^b) and
/// s2(a,b,c) = chi(S^a Omega_X (x) S^b Omega_X (x) L^c), together with the
/// Hodge data of O_X. These are the only inputs the secant Hilbert-polynomial
/// formulas consume.
///
/// Two independent evaluation paths are provided for products of projective
/// spaces: the primary one reduces S^j Omega to line-bundle classes through
/// the Euler sequence and sums chi of line bundles; chiHRR() recomputes the
/// same chi by integrating ch against the Todd class in the truncated
/// cohomology ring. They must agree exactly.
///
/// All values are memoized per instance; the caches are write-once maps safe
/// under concurrent reads and idempotent concurrent writes.
class EulerData {
public:
    explicit EulerData(VarietySpec v);

    EulerData(const EulerData&) = delete;
    EulerData& operator=(const EulerData&) = delete;

    const VarietySpec& variety() const { return variety_; }
    long dimension() const { return variety_.dimension(); }

    /// chi of a single line bundle. For a curve the argument is the plain
    /// degree of the bundle (a one-entry vector); for a product of projective
    /// spaces it is the multidegree. Valid for all integer entries.
    Rational chiLine(const std::vector<long>& e) const;

    Rational l(long a) const;
    Rational s1(long a, long b) const;
    Rational s2(long a, long b, long c) const;

    /// [S^j Omega_X] expanded into line-bundle classes. On a single factor
    /// P^n the Euler sequence gives
    ///   [S^j Omega] = C(j+n, n) [O(-j)] - C(j+n-1, n) [O(-j+1)],
    /// and on a product Omega splits, so S^j is the convolution over
    /// compositions j_1 + ... + j_k = j. Products of projective spaces only.
    KClass symOmegaKClass(long j) const;

    /// chi of a virtual bundle twisted by L^twist, via the line-bundle sum.
    Rational chiK(const KClass& k, long twist) const;

    /// Same chi through Riemann-Roch: integrate ch(O(e + twist*d)) * td(X)
    /// in the truncated cohomology ring. Products of projective spaces only.
    Rational chiHRR(const KClass& k, long twist) const;

    /// Todd class of the product of projective spaces, prod_i
    /// (h_i / (1 - e^{-h_i}))^{n_i + 1}, expanded exactly in the truncated ring.
    const GradedClass& toddClass() const;

    HodgeVector hodgeVector() const;
    /// sum_{i=1}^{n} (-1)^i h^i(X, O_X) = chi(O_X) - 1.
    Rational gamma() const;

    /// Positivity gate for the secant formulas (secantIndex 1 or 2). Never
    /// hard-fails: callers decide whether a warning is an error.
    Positivity validatePositivity(int secantIndex) const;

private:
    using Multidegree = std::vector<long>;
    using Term = std::pair<Multidegree, mpz_class>;

    mpz_class chiLineZ(const Multidegree& e) const;
    mpz_class lZ(long a) const;
    mpz_class s1Z(long a, long b) const;
    mpz_class s2Z(long a, long b, long c) const;
    mpz_class factorS2Z(int factor, long a, long b, long t) const;
    /// Memoized [S^j Omega] term list; integer coefficients by construction.
    const std::vector<Term>& symOmegaTerms(long j) const;
    const RingSpec& ringSpec() const;
    Multidegree scaledPolarization(long twist) const;

    VarietySpec variety_;

    mutable std::mutex cacheMu_;
    mutable std::map<long, mpz_class> lCache_;
    mutable std::map<std::tuple<long, long, long>, mpz_class> s2Cache_;
    mutable std::map<std::tuple<int, long, long, long>, mpz_class> factorS2Cache_;
    mutable std::map<long, std::vector<Term>> symOmegaCache_;
    mutable std::optional<GradedClass> toddCache_;
};

}  // namespace secant
