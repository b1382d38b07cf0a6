#pragma once

#include <map>
#include <string>
#include <vector>

#include "secant/graded_ring.hpp"
#include "secant/rational.hpp"

namespace secant {

/// Virtual bundle on a product of projective spaces, expanded as a finite
/// rational combination of line-bundle classes sum c_e [O(e)] indexed by
/// multidegree e in Z^k. Multidegrees are unbounded and may be negative.
/// Zero coefficients are never stored.
class KClass {
public:
    using Multidegree = std::vector<long>;
    using TermMap = std::map<Multidegree, Rational>;

    explicit KClass(RingSpec spec) : spec_(std::move(spec)) {}

    static KClass zero(RingSpec spec) { return KClass(std::move(spec)); }
    /// The structure sheaf class [O].
    static KClass trivial(const RingSpec& spec);
    static KClass lineBundle(const RingSpec& spec, const Multidegree& e, const Rational& c = 1);

    const RingSpec& spec() const { return spec_; }
    const TermMap& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }

    /// Virtual rank: the sum of all coefficients.
    Rational rank() const;
    Rational coefficient(const Multidegree& e) const;

    KClass& operator+=(const KClass& o);
    KClass& operator-=(const KClass& o);
    KClass& operator*=(const Rational& c);
    /// Twist by the line bundle O(e): shifts every multidegree by e.
    KClass twist(const Multidegree& e) const;

    bool operator==(const KClass&) const = default;

    std::string str() const;

private:
    friend KClass operator*(const KClass& a, const KClass& b);
    void insertTerm(const Multidegree& e, const Rational& c);

    RingSpec spec_;
    TermMap terms_;
};

KClass operator+(KClass a, const KClass& b);
KClass operator-(KClass a, const KClass& b);
/// Tensor product: [O(e)] . [O(f)] = [O(e+f)], extended bilinearly.
KClass operator*(const KClass& a, const KClass& b);
KClass operator*(const Rational& c, KClass a);

}  // namespace secant
