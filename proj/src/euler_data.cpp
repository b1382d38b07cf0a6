#include "secant/euler_data.hpp"

#include <algorithm>
#include <sstream>

#include "secant/errors.hpp"

namespace secant {

HodgeVector::HodgeVector(std::vector<long> d) : dims(std::move(d)) {
    if (dims.empty() || dims[0] != 1)
        throw ConsistencyError("Hodge vector must start with h^0 = 1");
    for (long h : dims)
        if (h < 0) throw ConsistencyError("negative Hodge number");
}

EulerData::EulerData(VarietySpec v) : variety_(std::move(v)) {}

const RingSpec& EulerData::ringSpec() const {
    if (variety_.isCurve())
        throw InputError("operation requires a product of projective spaces");
    return variety_.productProj().ring;
}

EulerData::Multidegree EulerData::scaledPolarization(long twist) const {
    const auto& degrees = variety_.productProj().degrees;
    Multidegree e(degrees.size());
    for (size_t i = 0; i < degrees.size(); ++i) e[i] = twist * degrees[i];
    return e;
}

mpz_class EulerData::chiLineZ(const Multidegree& e) const {
    if (e.size() != variety_.arity())
        throw InputError("line-bundle degree arity does not match the variety");
    if (variety_.isCurve()) {
        // Riemann-Roch on a curve: chi(O(D)) = deg D + 1 - g.
        return mpz_class(e[0] + 1 - variety_.curve().genus);
    }
    const auto& dims = ringSpec().factorDims;
    mpz_class chi = 1;
    for (size_t i = 0; i < dims.size(); ++i) chi *= binomial(e[i] + dims[i], dims[i]);
    return chi;
}

Rational EulerData::chiLine(const std::vector<long>& e) const { return Rational(chiLineZ(e)); }

mpz_class EulerData::lZ(long a) const {
    {
        std::lock_guard<std::mutex> lock(cacheMu_);
        auto it = lCache_.find(a);
        if (it != lCache_.end()) return it->second;
    }
    mpz_class value;
    if (variety_.isCurve()) {
        const auto& c = variety_.curve();
        value = a * c.degree + 1 - c.genus;
    } else {
        value = chiLineZ(scaledPolarization(a));
    }
    std::lock_guard<std::mutex> lock(cacheMu_);
    return lCache_.emplace(a, std::move(value)).first->second;
}

const std::vector<EulerData::Term>& EulerData::symOmegaTerms(long j) const {
    if (j < 0) throw InputError("symmetric power index must be nonnegative");
    const auto& dims = ringSpec().factorDims;
    {
        std::lock_guard<std::mutex> lock(cacheMu_);
        auto it = symOmegaCache_.find(j);
        if (it != symOmegaCache_.end()) return it->second;
    }

    // Terms of [S^t Omega_{P^n}] placed at factor position `pos`.
    auto factorTerms = [&](size_t pos, long t) {
        std::vector<Term> out;
        const int n = dims[pos];
        Multidegree e(dims.size(), 0);
        e[pos] = -t;
        out.emplace_back(e, binomial(t + n, n));
        mpz_class second = binomial(t + n - 1, n);
        if (second != 0) {
            e[pos] = -t + 1;
            out.emplace_back(e, -second);
        }
        return out;
    };

    std::map<Multidegree, mpz_class> acc;
    // Convolve over compositions j_1 + ... + j_k = j, enumerated
    // lexicographically for a deterministic traversal.
    std::vector<long> parts(dims.size(), 0);
    auto recurse = [&](auto&& self, size_t pos, long remaining,
                       const std::vector<Term>& partial) -> void {
        if (pos + 1 == dims.size()) {
            for (const auto& [e, c] : factorTerms(pos, remaining)) {
                for (const auto& [pe, pc] : partial) {
                    Multidegree sum(e.size());
                    for (size_t i = 0; i < e.size(); ++i) sum[i] = e[i] + pe[i];
                    acc[sum] += c * pc;
                }
            }
            return;
        }
        for (long t = 0; t <= remaining; ++t) {
            std::vector<Term> next;
            for (const auto& [e, c] : factorTerms(pos, t)) {
                for (const auto& [pe, pc] : partial) {
                    Multidegree sum(e.size());
                    for (size_t i = 0; i < e.size(); ++i) sum[i] = e[i] + pe[i];
                    next.emplace_back(sum, c * pc);
                }
            }
            self(self, pos + 1, remaining - t, next);
        }
    };
    std::vector<Term> unit{{Multidegree(dims.size(), 0), mpz_class(1)}};
    recurse(recurse, 0, j, unit);

    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (c != 0) terms.emplace_back(e, std::move(c));

    std::lock_guard<std::mutex> lock(cacheMu_);
    return symOmegaCache_.emplace(j, std::move(terms)).first->second;
}

KClass EulerData::symOmegaKClass(long j) const {
    KClass k(ringSpec());
    for (const auto& [e, c] : symOmegaTerms(j)) k += KClass::lineBundle(ringSpec(), e, Rational(c));
    return k;
}

// chi(S^a Omega (x) S^b Omega (x) O(t)) on a single factor P^n, through the
// two-term Euler-sequence expansion of each symmetric power.
mpz_class EulerData::factorS2Z(int factor, long a, long b, long t) const {
    {
        std::lock_guard<std::mutex> lock(cacheMu_);
        auto it = factorS2Cache_.find({factor, a, b, t});
        if (it != factorS2Cache_.end()) return it->second;
    }
    const int n = ringSpec().factorDims[static_cast<size_t>(factor)];
    auto chi = [&](long e) { return binomial(e + n, n); };
    mpz_class value = 0;
    const mpz_class a0 = binomial(a + n, n), a1 = binomial(a + n - 1, n);
    const mpz_class b0 = binomial(b + n, n), b1 = binomial(b + n - 1, n);
    value += a0 * b0 * chi(-a - b + t);
    value -= a0 * b1 * chi(-a - b + 1 + t);
    value -= a1 * b0 * chi(-a - b + 1 + t);
    value += a1 * b1 * chi(-a - b + 2 + t);
    std::lock_guard<std::mutex> lock(cacheMu_);
    return factorS2Cache_.emplace(std::make_tuple(factor, a, b, t), std::move(value))
        .first->second;
}

mpz_class EulerData::s1Z(long a, long b) const {
    if (a < 0) throw InputError("s1 requires a nonnegative symmetric power");
    if (variety_.isCurve()) {
        // S^a Omega = omega^a of degree a(2g-2).
        const auto& c = variety_.curve();
        return mpz_class(a * (2 * c.genus - 2) + b * c.degree + 1 - c.genus);
    }
    return s2Z(a, 0, b);
}

mpz_class EulerData::s2Z(long a, long b, long c) const {
    if (a < 0 || b < 0) throw InputError("s2 requires nonnegative symmetric powers");
    {
        std::lock_guard<std::mutex> lock(cacheMu_);
        auto it = s2Cache_.find({a, b, c});
        if (it != s2Cache_.end()) return it->second;
    }
    mpz_class value;
    if (variety_.isCurve()) {
        const auto& cv = variety_.curve();
        value = (a + b) * (2 * cv.genus - 2) + c * cv.degree + 1 - cv.genus;
    } else {
        // Omega splits across the factors, so S^a and S^b distribute over
        // compositions and chi is multiplicative by Kuenneth.
        const auto& degrees = variety_.productProj().degrees;
        const int factors = static_cast<int>(degrees.size());
        auto recurse = [&](auto&& self, int factor, long aRem, long bRem) -> mpz_class {
            const long twist = c * degrees[static_cast<size_t>(factor)];
            if (factor + 1 == factors) return factorS2Z(factor, aRem, bRem, twist);
            mpz_class total = 0;
            for (long ai = 0; ai <= aRem; ++ai)
                for (long bi = 0; bi <= bRem; ++bi) {
                    const mpz_class head = factorS2Z(factor, ai, bi, twist);
                    if (head == 0) continue;
                    total += head * self(self, factor + 1, aRem - ai, bRem - bi);
                }
            return total;
        };
        value = recurse(recurse, 0, a, b);
    }
    std::lock_guard<std::mutex> lock(cacheMu_);
    return s2Cache_.emplace(std::make_tuple(a, b, c), std::move(value)).first->second;
}

Rational EulerData::l(long a) const { return Rational(lZ(a)); }
Rational EulerData::s1(long a, long b) const { return Rational(s1Z(a, b)); }
Rational EulerData::s2(long a, long b, long c) const { return Rational(s2Z(a, b, c)); }

Rational EulerData::chiK(const KClass& k, long twist) const {
    if (k.spec() != ringSpec()) throw InputError("K-class ring spec does not match the variety");
    const Multidegree shift = scaledPolarization(twist);
    Rational total = 0;
    Multidegree e(shift.size());
    for (const auto& [f, c] : k.terms()) {
        for (size_t i = 0; i < e.size(); ++i) e[i] = f[i] + shift[i];
        total += c * Rational(chiLineZ(e));
    }
    return total;
}

const GradedClass& EulerData::toddClass() const {
    const RingSpec& spec = ringSpec();
    {
        std::lock_guard<std::mutex> lock(cacheMu_);
        if (toddCache_) return *toddCache_;
    }
    // Per factor: h/(1 - e^{-h}) = 1 / (sum_{t>=0} (-1)^t h^t / (t+1)!),
    // raised to the power n_i + 1, one per Chern root of T_{P^{n_i}}.
    GradedClass td = GradedClass::one(spec);
    for (int factor = 0; factor < spec.factorCount(); ++factor) {
        GradedClass denom = GradedClass::zero(spec);
        const int n = spec.factorDims[static_cast<size_t>(factor)];
        GradedClass::Exponents e(spec.factorDims.size(), 0);
        for (int t = 0; t <= n; ++t) {
            e[static_cast<size_t>(factor)] = t;
            Rational coef = Rational(1, 1) / Rational(factorial(t + 1));
            if (t % 2 == 1) coef = -coef;
            denom += GradedClass::monomial(spec, e, coef);
        }
        const GradedClass q = inverseUnit(denom);
        for (int p = 0; p <= n; ++p) td = td * q;
    }
    std::lock_guard<std::mutex> lock(cacheMu_);
    if (!toddCache_) toddCache_ = std::move(td);
    return *toddCache_;
}

Rational EulerData::chiHRR(const KClass& k, long twist) const {
    const RingSpec& spec = ringSpec();
    if (k.spec() != spec) throw InputError("K-class ring spec does not match the variety");
    const GradedClass& td = toddClass();
    const Multidegree shift = scaledPolarization(twist);
    Rational total = 0;
    for (const auto& [e, c] : k.terms()) {
        GradedClass linear = GradedClass::zero(spec);
        for (int factor = 0; factor < spec.factorCount(); ++factor) {
            const long d = e[static_cast<size_t>(factor)] + shift[static_cast<size_t>(factor)];
            if (d == 0) continue;
            linear += Rational(d) * GradedClass::hyperplane(spec, factor);
        }
        total += c * integrate(expSeries(linear) * td);
    }
    return total;
}

HodgeVector EulerData::hodgeVector() const {
    if (variety_.isCurve()) return HodgeVector({1, variety_.curve().genus});
    std::vector<long> dims(static_cast<size_t>(dimension()) + 1, 0);
    dims[0] = 1;
    return HodgeVector(std::move(dims));
}

Rational EulerData::gamma() const {
    const HodgeVector h = hodgeVector();
    Rational total = 0;
    for (size_t i = 1; i < h.size(); ++i) {
        if (i % 2 == 0)
            total += Rational(h[i]);
        else
            total -= Rational(h[i]);
    }
    return total;
}

Positivity EulerData::validatePositivity(int secantIndex) const {
    if (secantIndex != 1 && secantIndex != 2) throw InputError("secant index must be 1 or 2");
    const long n = dimension();
    std::ostringstream msg;
    bool ok = true;
    if (variety_.isCurve()) {
        const auto& c = variety_.curve();
        // d >= 2g - 2 + m with m >= 2n+2 (resp. 3n+3) for L = omega + m*A + B.
        const long adjBound = 2 * c.genus - 2 + (secantIndex == 1 ? 2 * n + 2 : 3 * n + 3);
        const long classicalBound = 2 * c.genus + 2 * secantIndex + 1;
        if (c.degree < adjBound) {
            ok = false;
            msg << "degree " << c.degree << " < " << adjBound
                << " (canonical-plus-multiple bound for secant index " << secantIndex << ")";
        }
        if (c.degree < classicalBound) {
            if (!ok) msg << "; ";
            ok = false;
            msg << "degree " << c.degree << " < " << classicalBound
                << " (classical d >= 2g+2k+1 bound for secant index " << secantIndex << ")";
        }
    } else {
        const auto& pp = variety_.productProj();
        long mMax = 0;
        for (size_t i = 0; i < pp.degrees.size(); ++i) {
            const long cap = pp.degrees[i] + pp.ring.factorDims[i] + 1;
            mMax = (i == 0) ? cap : std::min(mMax, cap);
        }
        const long need = secantIndex == 1 ? 2 * n + 2 : 3 * n + 3;
        if (mMax < need) {
            ok = false;
            msg << "min_i(d_i + n_i + 1) = " << mMax << " < " << need
                << " (very-ample multiple bound for secant index " << secantIndex << ")";
        }
    }
    return Positivity{ok, msg.str()};
}

}  // namespace secant
