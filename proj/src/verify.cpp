#include "secant/verify.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include "secant/envelope.hpp"
#include "secant/errors.hpp"
#include "secant/euler_data.hpp"
#include "secant/graded_ring.hpp"
#include "secant/hilbert_polynomial.hpp"
#include "secant/secant_poly.hpp"
#include "secant/taut_cohomology.hpp"
#include "secant/version.hpp"

namespace secant {

namespace {

namespace fs = std::filesystem;

/// Expansion of the binomial coefficient C(x + shift, n) as a polynomial in x.
HilbertPolynomial binomialShiftPolynomial(long shift, long n) {
    std::vector<Rational> coefficients{Rational(1)};
    for (long j = 0; j < n; ++j) {
        // multiply by (x + shift - j)
        const Rational root(shift - j);
        coefficients.push_back(0);
        for (size_t t = coefficients.size(); t-- > 0;) {
            Rational carried = t > 0 ? coefficients[t - 1] : Rational(0);
            coefficients[t] = carried + root * coefficients[t];
        }
    }
    const Rational scale = Rational(1) / Rational(factorial(n));
    for (auto& c : coefficients) c *= scale;
    return HilbertPolynomial(std::move(coefficients), n);
}

GradedClass randomClass(std::mt19937_64& rng, const RingSpec& spec, bool nilpotent) {
    std::uniform_int_distribution<int> termCount(1, 4);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    GradedClass g = GradedClass::zero(spec);
    const int count = termCount(rng);
    for (int t = 0; t < count; ++t) {
        GradedClass::Exponents e(spec.factorDims.size());
        int total = 0;
        for (size_t i = 0; i < e.size(); ++i) {
            std::uniform_int_distribution<int> exp(0, spec.factorDims[i]);
            e[i] = exp(rng);
            total += e[i];
        }
        if (nilpotent && total == 0) continue;
        g += GradedClass::monomial(spec, e, Rational(num(rng), den(rng)));
    }
    return g;
}

CheckResult checkRingLaws() {
    CheckResult result{"graded-ring-laws", true, ""};
    std::mt19937_64 rng(0x5eca47);
    const std::vector<RingSpec> specs{RingSpec({2}), RingSpec({1, 1}), RingSpec({1, 2})};
    for (int trial = 0; trial < 60 && result.passed; ++trial) {
        const RingSpec& spec = specs[static_cast<size_t>(trial) % specs.size()];
        const GradedClass a = randomClass(rng, spec, false);
        const GradedClass b = randomClass(rng, spec, false);
        const GradedClass c = randomClass(rng, spec, false);
        auto fail = [&](const std::string& law) {
            result.passed = false;
            std::ostringstream os;
            os << law << " failed for a=" << a.str() << ", b=" << b.str() << ", c=" << c.str();
            result.detail = os.str();
        };
        if ((a * b) * c != a * (b * c)) fail("associativity");
        else if (a * b != b * a) fail("commutativity");
        else if (a * (b + c) != a * b + a * c) fail("distributivity");
        else {
            const Rational alpha(3, 2), beta(-2, 5);
            if (integrate(alpha * a + beta * b) !=
                alpha * integrate(a) + beta * integrate(b))
                fail("integrate linearity");
        }
        if (result.passed) {
            const GradedClass product = a * b;
            for (const auto& [e, coef] : product.terms())
                for (size_t i = 0; i < e.size(); ++i)
                    if (e[i] > spec.factorDims[i]) fail("truncation soundness");
        }
        if (result.passed) {
            const GradedClass na = randomClass(rng, spec, true);
            const GradedClass nb = randomClass(rng, spec, true);
            if (expSeries(na) * expSeries(nb) != expSeries(na + nb))
                fail("exp(a)exp(b) = exp(a+b)");
        }
    }
    return result;
}

CheckResult checkPathEquivalence(long aMax, long cLo, long cHi) {
    CheckResult result{"euler-path-equivalence", true, ""};
    for (const auto& v : verifyCorpus()) {
        if (v.isCurve()) continue;
        EulerData e(v);
        const RingSpec& spec = v.productProj().ring;
        for (long a = 0; a <= aMax && result.passed; ++a) {
            for (long b = 0; b <= aMax && result.passed; ++b) {
                for (long c = cLo; c <= cHi; ++c) {
                    const Rational kTheory = e.s2(a, b, c);
                    const Rational hrr = e.chiHRR(e.symOmegaKClass(a) * e.symOmegaKClass(b), c);
                    if (kTheory != hrr) {
                        result.passed = false;
                        std::ostringstream os;
                        os << v.canonical() << " s2(" << a << "," << b << "," << c
                           << "): K-theory " << kTheory.str() << " != chiHRR " << hrr.str();
                        result.detail = os.str();
                        break;
                    }
                    if (b == 0) {
                        const Rational s1k = e.s1(a, c);
                        const Rational s1h = e.chiHRR(e.symOmegaKClass(a), c);
                        if (s1k != s1h) {
                            result.passed = false;
                            result.detail = v.canonical() + " s1 path mismatch at a=" +
                                            std::to_string(a) + ", c=" + std::to_string(c);
                            break;
                        }
                    }
                    if (a == 0 && b == 0) {
                        const Rational lk = e.l(c);
                        const Rational lh = e.chiHRR(KClass::trivial(spec), c);
                        if (lk != lh) {
                            result.passed = false;
                            result.detail =
                                v.canonical() + " l path mismatch at c=" + std::to_string(c);
                            break;
                        }
                    }
                }
            }
        }
        if (!result.passed) break;
    }
    return result;
}

CheckResult checkCurveModelConsistency() {
    CheckResult result{"curve-model-consistency", true, ""};
    EulerData curve(VarietySpec::curve(0, 6));
    EulerData pps(VarietySpec::productProj({1}, {6}));
    for (long a = 0; a <= 6 && result.passed; ++a)
        for (long b = 0; b <= 6 && result.passed; ++b)
            for (long c = -3; c <= 8; ++c) {
                if (curve.s2(a, b, c) != pps.s2(a, b, c) || curve.s1(a, c) != pps.s1(a, c) ||
                    curve.l(c) != pps.l(c)) {
                    result.passed = false;
                    std::ostringstream os;
                    os << "curve(0,6) vs P^1+O(6) disagree at (a,b,c)=(" << a << "," << b << ","
                       << c << "): s2 " << curve.s2(a, b, c).str() << " vs "
                       << pps.s2(a, b, c).str();
                    result.detail = os.str();
                    break;
                }
            }
    return result;
}

CheckResult checkPolynomialOracle(const char* name, const VarietySpec& v, int secantIndex,
                                  const HilbertPolynomial& expected) {
    CheckResult result{name, true, ""};
    SecantCalculator calc(v);
    const HilbertPolynomial& actual =
        secantIndex == 1 ? calc.sigma1Polynomial() : calc.sigma2Polynomial();
    if (actual != expected) {
        result.passed = false;
        result.detail = v.canonical() + ": computed " + actual.render() + ", oracle " +
                        expected.render();
    }
    return result;
}

CheckResult checkSigma1Oracles() {
    auto r = checkPolynomialOracle("secant1-oracle-twisted-cubic", VarietySpec::curve(0, 3), 1,
                                   binomialShiftPolynomial(3, 3));
    if (!r.passed) return r;
    HilbertPolynomial quartic(
        [&] {
            auto a = binomialShiftPolynomial(4, 4).coefficients();
            const auto b = binomialShiftPolynomial(1, 4).coefficients();
            for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
            return a;
        }(),
        3);
    r = checkPolynomialOracle("secant1-oracle-quartic-catalecticant", VarietySpec::curve(0, 4), 1,
                              quartic);
    r.name = "secant1-oracles";
    return r;
}

CheckResult checkSigma2Oracles() {
    auto r = checkPolynomialOracle("secant2-oracle-quintic", VarietySpec::curve(0, 5), 2,
                                   binomialShiftPolynomial(5, 5));
    if (!r.passed) return r;
    HilbertPolynomial sextic(
        [&] {
            auto a = binomialShiftPolynomial(6, 6).coefficients();
            const auto b = binomialShiftPolynomial(2, 6).coefficients();
            for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
            return a;
        }(),
        5);
    r = checkPolynomialOracle("secant2-oracle-sextic-catalecticant", VarietySpec::curve(0, 6), 2,
                              sextic);
    r.name = "secant2-oracles";
    return r;
}

CheckResult checkDualPath(const std::vector<VarietySpec>& varieties) {
    CheckResult result{"secant2-dual-path", true, ""};
    for (const auto& v : varieties) {
        SecantCalculator calc(v);
        const long n = v.dimension();
        for (long m = 0; m <= 3 * n + 2; ++m) {
            const Rational direct = calc.sigma2Node(m);
            const Rational alt = calc.sigma2NodeAlt(m);
            if (direct != alt) {
                result.passed = false;
                std::ostringstream os;
                os << v.canonical() << " m=" << m << ": expanded " << direct.str()
                   << " != assembled " << alt.str();
                result.detail = os.str();
                return result;
            }
        }
    }
    return result;
}

CheckResult checkPolynomialityBeyondNodes(const std::vector<VarietySpec>& varieties) {
    CheckResult result{"polynomiality-beyond-nodes", true, ""};
    for (const auto& v : varieties) {
        SecantCalculator calc(v);
        const long n = v.dimension();
        for (long m : {2 * n + 2, 2 * n + 3}) {
            const Rational node = calc.sigma1Node(m);
            const Rational poly = calc.sigma1Polynomial().evaluate(2 * m + 1);
            if (node != poly) {
                result.passed = false;
                std::ostringstream os;
                os << v.canonical() << " sigma1 m=" << m << ": node " << node.str()
                   << " != polynomial " << poly.str();
                result.detail = os.str();
                return result;
            }
        }
        const long m = 3 * n + 3;
        const Rational node = calc.sigma2Node(m);
        const Rational poly = calc.sigma2Polynomial().evaluate(3 * m + 2);
        if (node != poly) {
            result.passed = false;
            std::ostringstream os;
            os << v.canonical() << " sigma2 m=" << m << ": node " << node.str()
               << " != polynomial " << poly.str();
            result.detail = os.str();
            return result;
        }
    }
    return result;
}

CheckResult checkAnchors() {
    CheckResult result{"projective-normality-anchor", true, ""};
    for (const auto& v : verifyCorpus()) {
        SecantCalculator calc(v);
        const Rational h0 = calc.euler().l(1);
        const Rational p1 = calc.sigma1Polynomial().evaluate(1);
        const Rational p2 = calc.sigma2Polynomial().evaluate(1);
        if (p1 != h0 || p2 != h0) {
            result.passed = false;
            std::ostringstream os;
            os << v.canonical() << ": P1(1)=" << p1.str() << ", P2(1)=" << p2.str()
               << ", l(1)=" << h0.str();
            result.detail = os.str();
            return result;
        }
    }
    return result;
}

CheckResult checkEulerChecks() {
    CheckResult result{"table-euler-check", true, ""};
    for (const auto& v : verifyCorpus()) {
        SecantCalculator calc(v);
        for (long ell = 1; ell <= 6; ++ell) {
            try {
                const Rational total = tautEulerCheck(calc, 2, ell);
                const Rational expected = calc.chiTautSym(ell, 0);
                if (total != expected) {
                    result.passed = false;
                    result.detail = v.canonical() + " ell=" + std::to_string(ell);
                    return result;
                }
            } catch (const ConsistencyError& ex) {
                result.passed = false;
                result.detail = ex.what();
                return result;
            }
        }
    }
    return result;
}

CheckResult checkTableStructure() {
    CheckResult result{"table-structure", true, ""};
    for (const auto& v : verifyCorpus()) {
        for (int k : {2, 3}) {
            SecantCalculator calc(v);
            if (!calc.euler().validatePositivity(k - 1).ok) continue;
            const long n = v.dimension();
            for (long ell = 1; ell <= 6; ++ell) {
                // construction rejects negative or fractional entries
                const auto column = tautTableColumn(calc, k, ell);
                for (long i = (k - 1) * n + 1; i <= k * n + 1; ++i) {
                    if (tautTableEntry(calc, k, i, ell) != 0) {
                        result.passed = false;
                        std::ostringstream os;
                        os << v.canonical() << " k=" << k << " i=" << i << " ell=" << ell
                           << ": expected vanishing";
                        result.detail = os.str();
                        return result;
                    }
                }
                if (v.isCurve()) {
                    const long g = v.curve().genus;
                    const long d = v.curve().degree;
                    const mpz_class hL(ell * d + 1 - g);
                    const mpz_class expected =
                        k == 2 ? mpz_class(g * hL) : mpz_class(binomial(g, 2) * hL);
                    const long row = k == 2 ? 1 : 2;
                    if (column[static_cast<size_t>(row)] != expected) {
                        result.passed = false;
                        std::ostringstream os;
                        os << v.canonical() << " k=" << k << " row " << row << " ell=" << ell
                           << ": got " << column[static_cast<size_t>(row)].get_str()
                           << ", closed form " << expected.get_str();
                        result.detail = os.str();
                        return result;
                    }
                }
            }
        }
    }
    return result;
}

CheckResult checkDegreeLaw() {
    CheckResult result{"secant1-degree-law", true, ""};
    for (long g = 0; g <= 3; ++g) {
        for (long d = 2 * g + 4; d <= 2 * g + 9; ++d) {
            SecantCalculator calc(VarietySpec::curve(g, d));
            if (!calc.euler().validatePositivity(1).ok) continue;
            const SecantReport r = calc.report(1);
            const Rational expected(binomial(d - 1, 2) - g);
            if (r.degree != expected) {
                result.passed = false;
                std::ostringstream os;
                os << "curve(genus=" << g << ",degree=" << d << "): degree " << r.degree.str()
                   << " != C(d-1,2) - g = " << expected.str();
                result.detail = os.str();
                return result;
            }
        }
    }
    return result;
}

CheckResult checkDenominatorBound() {
    CheckResult result{"interpolation-denominator-bound", true, ""};
    for (const auto& v : verifyCorpus()) {
        SecantCalculator calc(v);
        for (int secantIndex : {1, 2}) {
            const SecantReport r = calc.report(secantIndex);
            mpz_class lcm = 1;
            for (const auto& [x, value] : r.nodeValues) {
                mpz_class prod = 1;
                for (const auto& [y, other] : r.nodeValues)
                    if (y != x) prod *= mpz_class(x > y ? x - y : y - x);
                mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), prod.get_mpz_t());
            }
            for (const auto& c : r.polynomial.coefficients()) {
                if (!mpz_divisible_p(lcm.get_mpz_t(), c.denominator().get_mpz_t())) {
                    result.passed = false;
                    std::ostringstream os;
                    os << v.canonical() << " secant " << secantIndex << ": denominator "
                       << c.denominator().get_str() << " does not divide node-product lcm "
                       << lcm.get_str();
                    result.detail = os.str();
                    return result;
                }
            }
        }
    }
    return result;
}

CheckResult checkCache(const std::string& cacheDir) {
    CheckResult result{"cache-validation", true, ""};
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(cacheDir))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    int checked = 0, stale = 0;
    for (const auto& path : files) {
        std::ifstream in(path, std::ios::binary);
        std::stringstream buffer;
        buffer << in.rdbuf();
        const std::string bytes = buffer.str();
        std::optional<ResultEnvelope> env;
        try {
            env = envelopeFromJson(Json::parse(bytes));
        } catch (const std::exception& ex) {
            result.passed = false;
            result.detail = path.filename().string() + ": unreadable envelope (" + ex.what() + ")";
            return result;
        }
        if (env->toolVersion != kToolVersion) {
            ++stale;
            continue;
        }
        long ellLo = 1, ellHi = 1;
        int degreeSecant = 1;
        if (env->computation == "table2" || env->computation == "table3") {
            ellLo = env->payload.at("ell_lo").get<long>();
            ellHi = env->payload.at("ell_hi").get<long>();
        } else if (env->computation == "degree") {
            degreeSecant = env->payload.at("secant").get<int>();
        }
        const ResultEnvelope fresh =
            computeEnvelope(env->variety, env->computation, ellLo, ellHi, degreeSecant);
        if (envelopeBytes(fresh) != bytes) {
            result.passed = false;
            result.detail = path.filename().string() +
                            ": cached bytes differ from recomputation (" +
                            env->variety.canonical() + ", " + env->computation + ")";
            return result;
        }
        ++checked;
    }
    std::ostringstream os;
    os << checked << " entries verified";
    if (stale > 0) os << ", " << stale << " stale entries skipped";
    result.detail = os.str();
    return result;
}

}  // namespace

std::vector<VarietySpec> verifyCorpus() {
    return {VarietySpec::curve(0, 6),
            VarietySpec::curve(1, 8),
            VarietySpec::curve(2, 9),
            VarietySpec::productProj({1}, {6}),
            VarietySpec::productProj({2}, {8}),
            VarietySpec::productProj({1, 1}, {4, 4})};
}

std::vector<CheckResult> runVerifySuite(VerifySuite suite, const std::string& cacheDir) {
    std::vector<CheckResult> results;
    results.push_back(checkRingLaws());
    results.push_back(checkPathEquivalence(6, -3, 8));
    results.push_back(checkCurveModelConsistency());
    results.push_back(checkSigma1Oracles());
    results.push_back(checkSigma2Oracles());
    results.push_back(checkDualPath(verifyCorpus()));
    results.push_back(checkPolynomialityBeyondNodes(verifyCorpus()));
    results.push_back(checkAnchors());
    results.push_back(checkEulerChecks());
    results.push_back(checkTableStructure());
    if (suite == VerifySuite::Extended) {
        results.push_back(checkDegreeLaw());
        results.push_back(checkDenominatorBound());
        results.push_back(
            checkDualPath({VarietySpec::curve(3, 12), VarietySpec::productProj({3}, {10})}));
        results.back().name = "secant2-dual-path-extended";
    }
    if (!cacheDir.empty()) results.push_back(checkCache(cacheDir));
    return results;
}

}  // namespace secant
