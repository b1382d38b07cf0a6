#include "secant/hilbert_polynomial.hpp"

#include <set>
#include <sstream>

#include "secant/errors.hpp"

namespace secant {

HilbertPolynomial::HilbertPolynomial(std::vector<Rational> ascendingCoefficients, long expectedDim)
    : coefficients_(std::move(ascendingCoefficients)), expectedDim_(expectedDim) {
    if (expectedDim_ < 0) throw InputError("polynomial expected dimension must be nonnegative");
    while (coefficients_.size() > 1 && coefficients_.back().isZero()) coefficients_.pop_back();
    if (coefficients_.size() > static_cast<size_t>(expectedDim_) + 1)
        throw ConsistencyError("polynomial degree exceeds its expected dimension");
    coefficients_.resize(static_cast<size_t>(expectedDim_) + 1, Rational(0));
}

long HilbertPolynomial::degree() const {
    for (size_t i = coefficients_.size(); i-- > 0;)
        if (!coefficients_[i].isZero()) return static_cast<long>(i);
    return 0;
}

Rational HilbertPolynomial::leadingCoefficient() const {
    return coefficients_[static_cast<size_t>(degree())];
}

Rational HilbertPolynomial::evaluate(const Rational& x) const {
    Rational acc = 0;
    for (size_t i = coefficients_.size(); i-- > 0;) acc = acc * x + coefficients_[i];
    return acc;
}

std::string HilbertPolynomial::render(const std::string& variable) const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = coefficients_.size(); i-- > 0;) {
        const Rational& c = coefficients_[i];
        if (c.isZero()) continue;
        const Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        const bool showCoefficient = i == 0 || mag != Rational(1);
        if (showCoefficient) {
            if (mag.isInteger())
                os << mag.str();
            else
                os << "(" << mag.str() << ")";
        }
        if (i > 0) {
            os << variable;
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

HilbertPolynomial lagrangeInterpolate(const std::vector<std::pair<long, Rational>>& nodes) {
    if (nodes.empty()) throw InputError("interpolation requires at least one node");
    {
        std::set<long> seen;
        for (const auto& [x, v] : nodes)
            if (!seen.insert(x).second)
                throw InputError("duplicate interpolation abscissa " + std::to_string(x));
    }
    const size_t n = nodes.size();
    std::vector<Rational> acc(n, Rational(0));
    std::vector<Rational> basis(n);
    for (size_t i = 0; i < n; ++i) {
        // basis(x) = prod_{j != i} (x - x_j), built by repeated multiplication.
        std::fill(basis.begin(), basis.end(), Rational(0));
        basis[0] = 1;
        size_t degreeSoFar = 0;
        Rational denom = 1;
        for (size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            const Rational root(nodes[j].first);
            ++degreeSoFar;
            for (size_t t = degreeSoFar + 1; t-- > 0;) {
                Rational shifted = t > 0 ? basis[t - 1] : Rational(0);
                basis[t] = shifted - root * basis[t];
            }
            denom *= Rational(nodes[i].first - nodes[j].first);
        }
        const Rational scale = nodes[i].second / denom;
        for (size_t t = 0; t < n; ++t) acc[t] += scale * basis[t];
    }
    return HilbertPolynomial(std::move(acc), static_cast<long>(n) - 1);
}

}  // namespace secant
