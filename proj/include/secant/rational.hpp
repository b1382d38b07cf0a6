#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace secant {

/// Exact rational number, always in lowest terms with positive denominator.
/// Thin value wrapper over GMP; every operation is exact, there is no
/// floating point anywhere in this library.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}  // implicit by design: integers embed in Q
    Rational(const mpz_class& n) : q_(n) {}
    Rational(const mpz_class& num, const mpz_class& den);
    Rational(long num, long den);

    /// Parses "num" or "num/den" (optional leading '-'). Throws InputError on
    /// malformed text or a zero denominator.
    static Rational fromString(const std::string& s);

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool isZero() const { return sgn(q_) == 0; }
    bool isInteger() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    /// Exact integer value; throws ConsistencyError when the denominator is not 1.
    mpz_class asInteger() const;

    /// "num/den" with the denominator always explicit ("5/1", "-1/2").
    std::string fractionString() const;
    /// Bare integer when the denominator is 1, otherwise "num/den".
    std::string str() const;

    Rational operator-() const;

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class q_;  // kept canonical at all times
};

/// n! as an exact integer; n must be nonnegative.
mpz_class factorial(long n);

/// Binomial coefficient C(top, n) extended as the degree-n polynomial
/// top(top-1)...(top-n+1)/n! in its top argument, valid for any integer top
/// (so e.g. C(-1, 1) = -1). Always an exact integer.
mpz_class binomial(long top, long n);

}  // namespace secant
