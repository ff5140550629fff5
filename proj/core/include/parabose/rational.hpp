#ifndef PARABOSE_RATIONAL_HPP
#define PARABOSE_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace parabose {

/// Arbitrary-precision rational. Always in lowest terms with a positive
/// denominator; zero is stored as 0/1.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(int n) : q_(n) {}
    Rational(long n) : q_(mpz_class(n)) {}
    Rational(long num, long den);
    Rational(mpz_class num, mpz_class den);
    explicit Rational(mpz_class n) : q_(std::move(n)) {}
    explicit Rational(mpq_class q);

    /// Parses "a" or "a/b" (optional leading sign, base 10). Throws
    /// std::invalid_argument on malformed input or zero denominator.
    static Rational parse(std::string_view text);

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }

    bool is_zero() const { return q_.get_num() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    double to_double() const { return q_.get_d(); }

    /// "a" when the denominator is 1, else "a/b".
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
    mpq_class q_;
};

Rational abs(const Rational& r);

/// r^k, with 0^0 = 1.
Rational pow(const Rational& r, unsigned k);

/// Classical n! as an exact rational.
Rational factorial(unsigned n);

}  // namespace parabose

#endif
