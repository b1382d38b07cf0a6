#include "secant/kclass.hpp"

#include <sstream>

#include "secant/errors.hpp"

namespace secant {

KClass KClass::trivial(const RingSpec& spec) {
    return lineBundle(spec, Multidegree(spec.factorDims.size(), 0));
}

KClass KClass::lineBundle(const RingSpec& spec, const Multidegree& e, const Rational& c) {
    KClass k(spec);
    k.insertTerm(e, c);
    return k;
}

Rational KClass::rank() const {
    Rational r = 0;
    for (const auto& [e, c] : terms_) r += c;
    return r;
}

Rational KClass::coefficient(const Multidegree& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void KClass::insertTerm(const Multidegree& e, const Rational& c) {
    if (e.size() != spec_.factorDims.size())
        throw InputError("multidegree arity does not match ring spec");
    if (c.isZero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

KClass& KClass::operator+=(const KClass& o) {
    if (spec_ != o.spec_) throw InputError("K-class ring specs do not match");
    for (const auto& [e, c] : o.terms_) insertTerm(e, c);
    return *this;
}

KClass& KClass::operator-=(const KClass& o) {
    if (spec_ != o.spec_) throw InputError("K-class ring specs do not match");
    for (const auto& [e, c] : o.terms_) insertTerm(e, -c);
    return *this;
}

KClass& KClass::operator*=(const Rational& c) {
    if (c.isZero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

KClass KClass::twist(const Multidegree& e) const {
    if (e.size() != spec_.factorDims.size())
        throw InputError("twist multidegree arity does not match ring spec");
    KClass result(spec_);
    Multidegree shifted(e.size());
    for (const auto& [f, c] : terms_) {
        for (size_t i = 0; i < e.size(); ++i) shifted[i] = f[i] + e[i];
        result.insertTerm(shifted, c);
    }
    return result;
}

KClass operator+(KClass a, const KClass& b) { return a += b; }
KClass operator-(KClass a, const KClass& b) { return a -= b; }

KClass operator*(const KClass& a, const KClass& b) {
    if (a.spec() != b.spec()) throw InputError("K-class ring specs do not match");
    KClass result(a.spec());
    KClass::Multidegree e(a.spec().factorDims.size());
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            result.insertTerm(e, ca * cb);
        }
    }
    return result;
}

KClass operator*(const Rational& c, KClass a) { return a *= c; }

std::string KClass::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str() << "*[O(";
        for (size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
        os << ")]";
    }
    return os.str();
}

}  // namespace secant
