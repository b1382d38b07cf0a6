#include "secant/secant_poly.hpp"

#include <sstream>

#include "secant/errors.hpp"

namespace secant {

SecantCalculator::SecantCalculator(VarietySpec v)
    : euler_(std::make_unique<EulerData>(std::move(v))) {}

Rational SecantCalculator::sigma1Node(long m) {
    if (m < 0) throw InputError("node index must be nonnegative");
    const EulerData& e = euler();
    const long ell = 2 * m + 1;
    Rational total = e.l(ell);
    for (long i = 1; i <= m; ++i) {
        Rational bracket = e.l(ell - i) * e.l(i);
        for (long j = 0; j <= 2 * i - 1; ++j) bracket -= e.s1(j, ell);
        total += bracket;
    }
    return total;
}

const SecantCalculator::Interpolation& SecantCalculator::sigma1Data() {
    {
        std::lock_guard<std::mutex> lock(mu_);
        if (sigma1_) return *sigma1_;
    }
    const long n = variety().dimension();
    std::vector<std::pair<long, Rational>> nodes;
    nodes.reserve(static_cast<size_t>(2 * n + 2));
    for (long m = 0; m <= 2 * n + 1; ++m) nodes.emplace_back(2 * m + 1, sigma1Node(m));
    Interpolation data{lagrangeInterpolate(nodes), std::move(nodes)};
    std::lock_guard<std::mutex> lock(mu_);
    if (!sigma1_) sigma1_ = std::move(data);
    return *sigma1_;
}

const HilbertPolynomial& SecantCalculator::sigma1Polynomial() { return sigma1Data().polynomial; }

Rational SecantCalculator::chiTautSym(long a, long b) {
    if (a < 0 || b < 0) throw InputError("chiTautSym requires nonnegative arguments");
    const EulerData& e = euler();
    const long twist = a + 2 * b;
    Rational total = sigma1Polynomial().evaluate(twist) + e.gamma() * e.l(twist);
    for (long i = 1; i <= b; ++i) {
        Rational corr = e.l(b - i) * e.l(a + b + i);
        for (long j = 0; j <= 2 * (b - i) - 1; ++j) corr -= e.s1(j, twist);
        total -= corr;
    }
    return total;
}

Rational SecantCalculator::chiConormalSym(long a, long b, long c, long d) {
    if (a < 0 || b < 0 || c < 0 || d < 0)
        throw InputError("chiConormalSym requires nonnegative arguments");
    const EulerData& e = euler();
    Rational total = e.s1(a, c) * e.l(b);
    for (long i = 1; i <= d; ++i) total -= e.s2(a, d - i, b + c);
    for (long j = 1; j <= a; ++j) total -= e.s2(a - j, d + 2 * j - 1, b + c);
    return total;
}

Rational SecantCalculator::chiBlowupProduct(const std::optional<KClass>& f,
                                            const std::optional<KClass>& g, long a, long b,
                                            long c) {
    if (a < 0 || b < 0 || c < 0)
        throw InputError("chiBlowupProduct requires nonnegative arguments");
    const EulerData& e = euler();
    if (!f && !g) {
        Rational total = e.l(a) * e.l(b);
        for (long i = 0; i <= c - 1; ++i) total -= e.s1(i, a + b);
        return total;
    }
    if (variety().isCurve())
        throw InputError("nontrivial bundle factors require a product of projective spaces");
    const RingSpec& spec = variety().productProj().ring;
    const KClass fk = f ? *f : KClass::trivial(spec);
    const KClass gk = g ? *g : KClass::trivial(spec);
    Rational total = e.chiK(fk, a) * e.chiK(gk, b);
    const KClass fg = fk * gk;
    for (long i = 0; i <= c - 1; ++i) total -= e.chiK(e.symOmegaKClass(i) * fg, a + b);
    return total;
}

Rational SecantCalculator::sigma2Node(long m) {
    if (m < 0) throw InputError("node index must be nonnegative");
    const EulerData& e = euler();
    const HilbertPolynomial& p1 = sigma1Polynomial();
    const Rational gamma = e.gamma();
    const long ell = 3 * m + 2;

    Rational total = p1.evaluate(ell);

    // First bracketed sum, weighted by l(i).
    for (long i = 1; i <= m; ++i) {
        Rational bracket = p1.evaluate(3 * m - i + 2) + gamma * e.l(3 * m - i + 2);
        for (long p = 1; p <= i + 1; ++p) {
            Rational corr = e.l(i + 1 - p) * e.l(3 * m - 2 * i + 1 + p);
            for (long q = 0; q <= 2 * i - 2 * p + 1; ++q) corr -= e.s1(q, 3 * m - i + 2);
            bracket -= corr;
        }
        total += bracket * e.l(i);
    }

    // Second bracketed sum, weighted by l(3m-2i+2).
    for (long i = 1; i <= m; ++i) {
        Rational bracket = p1.evaluate(2 * i) + gamma * e.l(2 * i);
        for (long p = 1; p <= i; ++p) {
            Rational corr = e.l(i - p) * e.l(i + p);
            for (long q = 0; q <= 2 * i - 2 * p - 1; ++q) corr -= e.s1(q, 2 * i);
            bracket -= corr;
        }
        total += bracket * e.l(3 * m - 2 * i + 2);
    }

    // s2 correction sums and the subtracted s1*l sums.
    for (long i = 1; i <= m; ++i) {
        for (long j = 0; j <= 2 * i - 1; ++j) {
            for (long p = 1; p <= 2 * i; ++p) total += e.s2(j, 2 * i - p, ell);
            for (long p = 1; p <= j; ++p) total += e.s2(j - p, 2 * i + 2 * p - 1, ell);
            for (long k = 0; k <= 3 * m - 3 * i; ++k) {
                for (long p = 1; p <= k + 2 * i + 2; ++p)
                    total += e.s2(j, k + 2 * i - p + 2, ell);
                for (long p = 1; p <= j; ++p) total += e.s2(j - p, k + 2 * i + 2 * p + 1, ell);
            }
            total -= e.s1(j, 3 * m - i + 2) * e.l(i);
            for (long k = 0; k <= 3 * m - 3 * i; ++k)
                total -= e.s1(j, 3 * m - i - k + 1) * e.l(k + i + 1);
        }
    }
    return total;
}

Rational SecantCalculator::sigma2NodeAlt(long m) {
    if (m < 0) throw InputError("node index must be nonnegative");
    const EulerData& e = euler();
    Rational total = sigma1Polynomial().evaluate(3 * m + 2);
    for (long i = 1; i <= m; ++i) {
        total += chiTautSym(3 * m - 3 * i, i + 1) * e.l(i);
        total += chiTautSym(0, i) * e.l(3 * m - 2 * i + 2);
    }
    for (long i = 1; i <= m; ++i) {
        for (long j = 0; j <= 2 * i - 1; ++j) {
            total -= chiConormalSym(j, i, 3 * m - i + 2, 2 * i);
            for (long k = 0; k <= 3 * m - 3 * i; ++k)
                total -= chiConormalSym(j, k + i + 1, 3 * m - i - k + 1, k + 2 * i + 2);
        }
    }
    return total;
}

const SecantCalculator::Interpolation& SecantCalculator::sigma2Data() {
    {
        std::lock_guard<std::mutex> lock(mu_);
        if (sigma2_) return *sigma2_;
    }
    sigma1Data();  // the node formula references the first secant polynomial
    const long n = variety().dimension();
    std::vector<std::pair<long, Rational>> nodes;
    nodes.reserve(static_cast<size_t>(3 * n + 3));
    for (long m = 0; m <= 3 * n + 2; ++m) nodes.emplace_back(3 * m + 2, sigma2Node(m));
    Interpolation data{lagrangeInterpolate(nodes), std::move(nodes)};
    std::lock_guard<std::mutex> lock(mu_);
    if (!sigma2_) sigma2_ = std::move(data);
    return *sigma2_;
}

const HilbertPolynomial& SecantCalculator::sigma2Polynomial() { return sigma2Data().polynomial; }

SecantReport SecantCalculator::report(int secantIndex) {
    if (secantIndex != 1 && secantIndex != 2) throw InputError("secant index must be 1 or 2");
    const Interpolation& data = secantIndex == 1 ? sigma1Data() : sigma2Data();
    SecantReport r{variety(),
                   secantIndex,
                   data.polynomial,
                   data.polynomial.degree(),
                   Rational(0),
                   false,
                   data.nodes,
                   euler().validatePositivity(secantIndex)};
    r.degree = data.polynomial.leadingCoefficient() * Rational(factorial(r.dimension));
    const Rational ambient = euler().l(1) - Rational(1);
    r.fillsAmbient = ambient == Rational(r.dimension);
    if (r.positivity.ok && (!r.degree.isInteger() || r.degree.sign() <= 0)) {
        std::ostringstream os;
        os << "secant variety degree " << r.degree.str() << " for " << variety().canonical()
           << " (secant index " << secantIndex
           << ") is not a positive integer despite positivity; formula bug";
        throw ConsistencyError(os.str());
    }
    return r;
}

}  // namespace secant
