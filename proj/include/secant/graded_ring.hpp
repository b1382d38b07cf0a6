#pragma once

#include <map>
#include <string>
#include <vector>

#include "secant/rational.hpp"

namespace secant {

/// A product of projective spaces P^{n_1} x ... x P^{n_k}, described by the
/// list of factor dimensions. Its cohomology ring is Q[h_1,...,h_k] modulo
/// h_i^{n_i + 1}.
struct RingSpec {
    std::vector<int> factorDims;

    RingSpec() = default;
    explicit RingSpec(std::vector<int> dims);

    int factorCount() const { return static_cast<int>(factorDims.size()); }
    int totalDim() const;

    bool operator==(const RingSpec&) const = default;
};

/// Element of the truncated cohomology ring of a product of projective
/// spaces: a sparse rational combination of monomials h_1^{e_1}...h_k^{e_k}
/// with 0 <= e_i <= n_i. Zero coefficients are never stored, and the term map
/// iterates in lexicographic exponent order, so serialization is reproducible.
///
/// Values are immutable in spirit: all operations return new classes, and the
/// in-place operators mutate only the left operand they are called on.
class GradedClass {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Rational>;

    explicit GradedClass(RingSpec spec) : spec_(std::move(spec)) {}

    static GradedClass zero(RingSpec spec) { return GradedClass(std::move(spec)); }
    static GradedClass one(const RingSpec& spec);
    static GradedClass monomial(const RingSpec& spec, const Exponents& exps, const Rational& c);
    /// The hyperplane class h_i of the given factor (0-based).
    static GradedClass hyperplane(const RingSpec& spec, int factor);

    const RingSpec& spec() const { return spec_; }
    const TermMap& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }

    Rational coefficient(const Exponents& exps) const;
    Rational constantTerm() const;

    GradedClass& operator+=(const GradedClass& o);
    GradedClass& operator-=(const GradedClass& o);
    GradedClass& operator*=(const Rational& c);

    bool operator==(const GradedClass&) const = default;

    std::string str() const;

private:
    friend GradedClass operator*(const GradedClass& a, const GradedClass& b);
    void insertTerm(const Exponents& exps, const Rational& c);

    RingSpec spec_;
    TermMap terms_;
};

GradedClass operator+(GradedClass a, const GradedClass& b);
GradedClass operator-(GradedClass a, const GradedClass& b);
/// Convolution product; monomials whose exponent exceeds a factor dimension
/// vanish by nilpotency and are dropped.
GradedClass operator*(const GradedClass& a, const GradedClass& b);
GradedClass operator*(const Rational& c, GradedClass a);

/// Coefficient of the top monomial h_1^{n_1}...h_k^{n_k} (the degree map).
Rational integrate(const GradedClass& a);

/// exp(a) = sum a^j / j!. Requires a to have no constant term, so the sum
/// terminates at j = totalDim by nilpotency; throws InputError otherwise.
GradedClass expSeries(const GradedClass& a);

/// Multiplicative inverse of a class with nonzero constant term, computed by
/// the finite geometric series in the nilpotent part. Throws InputError when
/// the constant term vanishes.
GradedClass inverseUnit(const GradedClass& a);

}  // namespace secant
