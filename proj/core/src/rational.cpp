#include "parabose/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace parabose {

namespace {

void require_nonzero_den(const mpq_class& q) {
    if (q.get_den() == 0) {
        throw std::invalid_argument("Rational: zero denominator");
    }
}

}  // namespace

Rational::Rational(long num, long den) : q_(mpz_class(num), mpz_class(den)) {
    require_nonzero_den(q_);
    q_.canonicalize();
}

Rational::Rational(mpz_class num, mpz_class den)
    : q_(std::move(num), std::move(den)) {
    require_nonzero_den(q_);
    q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
    require_nonzero_den(q_);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    size_t begin = text.find_first_not_of(" \t");
    size_t end = text.find_last_not_of(" \t");
    if (begin == std::string_view::npos) {
        throw std::invalid_argument("Rational::parse: empty input");
    }
    std::string_view body = text.substr(begin, end - begin + 1);

    // Strict grammar: [+-]digits[/digits]. mpq_set_str is laxer (it skips
    // embedded whitespace), so validate here first.
    size_t i = 0;
    if (body[i] == '+' || body[i] == '-') ++i;
    size_t digits = 0;
    while (i < body.size() && body[i] >= '0' && body[i] <= '9') { ++i; ++digits; }
    if (digits == 0) {
        throw std::invalid_argument("Rational::parse: malformed rational \"" + std::string(text) + "\"");
    }
    if (i < body.size()) {
        if (body[i] != '/') {
            throw std::invalid_argument("Rational::parse: malformed rational \"" + std::string(text) + "\"");
        }
        ++i;
        size_t den_digits = 0;
        while (i < body.size() && body[i] >= '0' && body[i] <= '9') { ++i; ++den_digits; }
        if (den_digits == 0 || i != body.size()) {
            throw std::invalid_argument("Rational::parse: malformed rational \"" + std::string(text) + "\"");
        }
    }

    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), std::string(body).c_str(), 10) != 0) {
        throw std::invalid_argument("Rational::parse: malformed rational \"" + std::string(text) + "\"");
    }
    require_nonzero_den(q);
    q.canonicalize();
    return Rational(std::move(q));
}

std::string Rational::str() const {
    if (is_integer()) {
        return q_.get_num().get_str();
    }
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::operator-() const {
    Rational r(*this);
    r.q_ = -r.q_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw std::invalid_argument("Rational: division by zero");
    }
    q_ /= o.q_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational abs(const Rational& r) {
    return r.sign() < 0 ? -r : r;
}

Rational pow(const Rational& r, unsigned k) {
    Rational acc(1);
    Rational base(r);
    while (k > 0) {
        if (k & 1u) acc *= base;
        base *= base;
        k >>= 1u;
    }
    return acc;
}

Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(std::move(f));
}

}  // namespace parabose
