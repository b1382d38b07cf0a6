#include "secant/rational.hpp"

#include <ostream>

#include "secant/errors.hpp"

namespace secant {

Rational::Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
    if (sgn(den) == 0) throw InputError("rational with zero denominator");
    q_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational Rational::fromString(const std::string& s) {
    if (s.empty()) throw InputError("empty rational literal");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(mpz_class(s));
        mpz_class num(s.substr(0, slash));
        mpz_class den(s.substr(slash + 1));
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw InputError("malformed rational literal: '" + s + "'");
    }
}

mpz_class Rational::asInteger() const {
    if (!isInteger()) throw ConsistencyError("expected integer, got " + fractionString());
    return q_.get_num();
}

std::string Rational::fractionString() const {
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::str() const {
    if (isInteger()) return q_.get_num().get_str();
    return fractionString();
}

Rational Rational::operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.isZero()) throw InputError("rational division by zero");
    q_ /= o.q_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

mpz_class factorial(long n) {
    if (n < 0) throw InputError("factorial of negative integer");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

mpz_class binomial(long top, long n) {
    if (n < 0) throw InputError("binomial with negative lower index");
    mpz_class num = 1;
    for (long j = 0; j < n; ++j) num *= mpz_class(top - j);
    mpz_class result;
    mpz_divexact(result.get_mpz_t(), num.get_mpz_t(), factorial(n).get_mpz_t());
    return result;
}

}  // namespace secant
