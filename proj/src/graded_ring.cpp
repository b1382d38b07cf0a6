#include "secant/graded_ring.hpp"

#include <sstream>

#include "secant/errors.hpp"

namespace secant {

RingSpec::RingSpec(std::vector<int> dims) : factorDims(std::move(dims)) {
    if (factorDims.empty()) throw InputError("ring spec needs at least one projective factor");
    for (int n : factorDims)
        if (n < 1) throw InputError("projective factor dimensions must be positive");
}

int RingSpec::totalDim() const {
    int total = 0;
    for (int n : factorDims) total += n;
    return total;
}

GradedClass GradedClass::one(const RingSpec& spec) {
    return monomial(spec, Exponents(spec.factorDims.size(), 0), 1);
}

GradedClass GradedClass::monomial(const RingSpec& spec, const Exponents& exps, const Rational& c) {
    GradedClass g(spec);
    g.insertTerm(exps, c);
    return g;
}

GradedClass GradedClass::hyperplane(const RingSpec& spec, int factor) {
    if (factor < 0 || factor >= spec.factorCount())
        throw InputError("hyperplane factor index out of range");
    Exponents e(spec.factorDims.size(), 0);
    e[static_cast<size_t>(factor)] = 1;
    return monomial(spec, e, 1);
}

Rational GradedClass::coefficient(const Exponents& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational GradedClass::constantTerm() const {
    return coefficient(Exponents(spec_.factorDims.size(), 0));
}

void GradedClass::insertTerm(const Exponents& exps, const Rational& c) {
    if (exps.size() != spec_.factorDims.size())
        throw InputError("exponent arity does not match ring spec");
    for (size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] < 0) throw InputError("negative exponent in graded class");
        if (exps[i] > spec_.factorDims[i]) return;  // h_i^{n_i+1} = 0
    }
    if (c.isZero()) return;
    auto [it, inserted] = terms_.emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

GradedClass& GradedClass::operator+=(const GradedClass& o) {
    if (spec_ != o.spec_) throw InputError("graded class ring specs do not match");
    for (const auto& [e, c] : o.terms_) insertTerm(e, c);
    return *this;
}

GradedClass& GradedClass::operator-=(const GradedClass& o) {
    if (spec_ != o.spec_) throw InputError("graded class ring specs do not match");
    for (const auto& [e, c] : o.terms_) insertTerm(e, -c);
    return *this;
}

GradedClass& GradedClass::operator*=(const Rational& c) {
    if (c.isZero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

GradedClass operator+(GradedClass a, const GradedClass& b) { return a += b; }
GradedClass operator-(GradedClass a, const GradedClass& b) { return a -= b; }

GradedClass operator*(const GradedClass& a, const GradedClass& b) {
    if (a.spec() != b.spec()) throw InputError("graded class ring specs do not match");
    GradedClass result(a.spec());
    GradedClass::Exponents e(a.spec().factorDims.size());
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            result.insertTerm(e, ca * cb);
        }
    }
    return result;
}

GradedClass operator*(const Rational& c, GradedClass a) { return a *= c; }

Rational integrate(const GradedClass& a) {
    GradedClass::Exponents top(a.spec().factorDims.begin(), a.spec().factorDims.end());
    return a.coefficient(top);
}

GradedClass expSeries(const GradedClass& a) {
    if (!a.constantTerm().isZero())
        throw InputError("expSeries requires a nilpotent argument (zero constant term)");
    GradedClass acc = GradedClass::one(a.spec());
    GradedClass power = acc;
    const int cap = a.spec().totalDim();
    for (int j = 1; j <= cap; ++j) {
        power = power * a;
        if (power.isZero()) break;
        power *= Rational(1, j);
        acc += power;
    }
    return acc;
}

GradedClass inverseUnit(const GradedClass& a) {
    const Rational c0 = a.constantTerm();
    if (c0.isZero()) throw InputError("inverseUnit requires a nonzero constant term");
    // a = c0 (1 - u) with u nilpotent; a^{-1} = c0^{-1} sum u^j.
    GradedClass u = GradedClass::one(a.spec()) - Rational(1) / c0 * a;
    GradedClass acc = GradedClass::one(a.spec());
    GradedClass power = acc;
    const int cap = a.spec().totalDim();
    for (int j = 1; j <= cap; ++j) {
        power = power * u;
        if (power.isZero()) break;
        acc += power;
    }
    return Rational(1) / c0 * acc;
}

std::string GradedClass::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            os << "*h" << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

}  // namespace secant
