#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "secant/euler_data.hpp"
#include "secant/hilbert_polynomial.hpp"
#include "secant/kclass.hpp"
#include "secant/variety.hpp"

namespace secant {

/// Everything a consumer needs about one secant variety Sigma_k of an
/// embedded variety: its Hilbert polynomial, dimension (the polynomial
/// degree, expected kn+k-1), projective degree (leading coefficient times
/// dimension factorial), the node values the polynomial was interpolated
/// through, and the positivity status of the input.
struct SecantReport {
    VarietySpec variety;
    int secantIndex = 1;
    HilbertPolynomial polynomial;
    long dimension = 0;
    Rational degree;
    bool fillsAmbient = false;
    std::vector<std::pair<long, Rational>> nodeValues;
    Positivity positivity;
};

/// Hilbert polynomials of the first and second secant varieties of (X, L),
/// computed from the Euler-characteristic primitives l, s1, s2 alone.
///
/// The first secant polynomial is interpolated through its values at the odd
/// arguments 2m+1, m = 0..2n+1; the second through the arguments 3m+2,
/// m = 0..3n+2. Each node value has two independent assemblies (sigma2Node
/// and sigma2NodeAlt) whose exact agreement guards against transcription
/// drift in the many nested sums.
class SecantCalculator {
public:
    explicit SecantCalculator(VarietySpec v);

    EulerData& euler() { return *euler_; }
    const EulerData& euler() const { return *euler_; }
    const VarietySpec& variety() const { return euler_->variety(); }

    /// Value of the first secant Hilbert polynomial at 2m+1:
    ///   l(2m+1) + sum_{i=1}^{m} ( l(2m+1-i) l(i) - sum_{j=0}^{2i-1} s1(j, 2m+1) ).
    Rational sigma1Node(long m);
    const HilbertPolynomial& sigma1Polynomial();

    /// Value of the second secant Hilbert polynomial at 3m+2, assembled from
    /// the fully expanded nested sums over l, s1, s2, Gamma and the first
    /// secant polynomial.
    Rational sigma2Node(long m);
    /// Same value assembled through chiTautSym / chiConormalSym instead of
    /// the expanded sums; an independent evaluation path.
    Rational sigma2NodeAlt(long m);
    const HilbertPolynomial& sigma2Polynomial();

    /// chi(S^a E_{2,L} (x) A_{2,L}^b) on the Hilbert square:
    ///   P1(a+2b) + Gamma l(a+2b)
    ///     - sum_{i=1}^{b} ( l(b-i) l(a+b+i) - sum_{j=0}^{2(b-i)-1} s1(j, a+2b) ).
    Rational chiTautSym(long a, long b);

    /// chi(S^a N^v (x) (tau* L^b (x) res* L^c)(-d F)) on the blow-up of X x X
    /// along the diagonal, N the conormal bundle of the exceptional divisor's
    /// base:
    ///   s1(a,c) l(b) - sum_{i=1}^{d} s2(a, d-i, b+c)
    ///              - sum_{j=1}^{a} s2(a-j, d+2j-1, b+c).
    Rational chiConormalSym(long a, long b, long c, long d);

    /// chi( (tau*(L^a (x) F) (x) res*(L^b (x) G))(-c F_1) ) on the blow-up of
    /// X x X along the diagonal:
    ///   chi(L^a F) chi(L^b G) - sum_{i=0}^{c-1} chi(S^i Omega (x) F (x) G (x) L^{a+b}).
    /// Pass std::nullopt for a trivial factor; nontrivial K-classes require a
    /// product of projective spaces.
    Rational chiBlowupProduct(const std::optional<KClass>& f, const std::optional<KClass>& g,
                              long a, long b, long c);

    SecantReport report(int secantIndex);

private:
    struct Interpolation {
        HilbertPolynomial polynomial;
        std::vector<std::pair<long, Rational>> nodes;
    };

    const Interpolation& sigma1Data();
    const Interpolation& sigma2Data();

    std::unique_ptr<EulerData> euler_;
    std::mutex mu_;
    std::optional<Interpolation> sigma1_;
    std::optional<Interpolation> sigma2_;
};

}  // namespace secant
