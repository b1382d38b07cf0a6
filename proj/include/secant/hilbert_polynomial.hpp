#pragma once

#include <string>
#include <utility>
#include <vector>

#include "secant/rational.hpp"

namespace secant {

/// Univariate polynomial with exact rational coefficients, stored densely in
/// ascending order with length expectedDim + 1. Leading coefficients may be
/// zero (the polynomial's true degree can fall below expectedDim in
/// ambient-filling edge cases).
class HilbertPolynomial {
public:
    HilbertPolynomial() : coefficients_(1, Rational(0)), expectedDim_(0) {}
    HilbertPolynomial(std::vector<Rational> ascendingCoefficients, long expectedDim);

    const std::vector<Rational>& coefficients() const { return coefficients_; }
    long expectedDim() const { return expectedDim_; }

    /// Largest index with a nonzero coefficient (0 for the zero polynomial).
    long degree() const;
    Rational leadingCoefficient() const;

    Rational evaluate(const Rational& x) const;
    Rational evaluate(long x) const { return evaluate(Rational(x)); }

    /// Monomial-basis rendering with exact fractions, descending powers,
    /// e.g. "(1/2)l^3 + (3/2)l^2 + 2l + 1".
    std::string render(const std::string& variable = "l") const;

    bool operator==(const HilbertPolynomial&) const = default;

private:
    std::vector<Rational> coefficients_;
    long expectedDim_;
};

/// The unique polynomial of degree < #nodes through the given (abscissa,
/// value) nodes, by classical Lagrange interpolation over the rationals.
/// Throws InputError on duplicate abscissae or an empty node list.
HilbertPolynomial lagrangeInterpolate(const std::vector<std::pair<long, Rational>>& nodes);

}  // namespace secant
