#include "parabose/poly.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace parabose {

namespace {
const Rational kZero(0);
}

Poly::Poly(std::initializer_list<Rational> ascending)
    : coeffs_(ascending) {
    normalize();
}

Poly::Poly(std::vector<Rational> ascending)
    : coeffs_(std::move(ascending)) {
    normalize();
}

Poly Poly::constant(Rational c) {
    return monomial(0, std::move(c));
}

Poly Poly::monomial(int k, Rational c) {
    if (k < 0) {
        throw std::invalid_argument("Poly::monomial: negative exponent");
    }
    if (c.is_zero()) {
        return Poly();
    }
    std::vector<Rational> v(static_cast<size_t>(k) + 1);
    v.back() = std::move(c);
    return Poly(std::move(v));
}

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

std::optional<int> Poly::degree() const {
    if (coeffs_.empty()) {
        return std::nullopt;
    }
    return static_cast<int>(coeffs_.size()) - 1;
}

const Rational& Poly::coeff(int k) const {
    if (k < 0) {
        throw std::invalid_argument("Poly::coeff: negative index");
    }
    if (static_cast<size_t>(k) >= coeffs_.size()) {
        return kZero;
    }
    return coeffs_[static_cast<size_t>(k)];
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& c : r.coeffs_) {
        c = -c;
    }
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (coeffs_.size() < o.coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] += o.coeffs_[i];
    }
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (coeffs_.size() < o.coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] -= o.coeffs_[i];
    }
    normalize();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) {
        return Poly();
    }
    std::vector<Rational> prod(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Poly(std::move(prod));
}

Poly& Poly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) {
        x *= c;
    }
    return *this;
}

Poly Poly::shifted_up(int k) const {
    if (k < 0) {
        throw std::invalid_argument("Poly::shifted_up: negative shift");
    }
    if (is_zero() || k == 0) {
        return *this;
    }
    std::vector<Rational> v(coeffs_.size() + static_cast<size_t>(k));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        v[i + static_cast<size_t>(k)] = coeffs_[i];
    }
    return Poly(std::move(v));
}

Poly Poly::shifted_down(int k) const {
    if (k < 0) {
        throw std::invalid_argument("Poly::shifted_down: negative shift");
    }
    if (is_zero() || k == 0) {
        return *this;
    }
    if (coeffs_.size() < static_cast<size_t>(k)) {
        // Only zero coefficients would be dropped if the low ones vanish;
        // sizes below k mean the polynomial is x^j terms with j < k.
        throw std::invalid_argument("Poly::shifted_down: not divisible by x^" + std::to_string(k));
    }
    for (size_t i = 0; i < static_cast<size_t>(k); ++i) {
        if (!coeffs_[i].is_zero()) {
            throw std::invalid_argument("Poly::shifted_down: not divisible by x^" + std::to_string(k));
        }
    }
    return Poly(std::vector<Rational>(coeffs_.begin() + k, coeffs_.end()));
}

bool Poly::is_even() const {
    for (size_t i = 1; i < coeffs_.size(); i += 2) {
        if (!coeffs_[i].is_zero()) return false;
    }
    return true;
}

bool Poly::is_odd() const {
    for (size_t i = 0; i < coeffs_.size(); i += 2) {
        if (!coeffs_[i].is_zero()) return false;
    }
    return true;
}

Rational Poly::eval_exact(const Rational& x0) const {
    Rational acc(0);
    for (size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * x0 + coeffs_[i];
    }
    return acc;
}

double Poly::eval_double(double x0) const {
    if (!std::isfinite(x0)) {
        throw std::invalid_argument("Poly::eval_double: non-finite evaluation point");
    }
    double acc = 0.0;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * x0 + coeffs_[i].to_double();
    }
    return acc;
}

std::string Poly::str(std::string_view var) const {
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) continue;
        Rational mag = abs(c);
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (i == 0 || mag != Rational(1)) {
            os << mag.str();
        }
        if (i > 0) {
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::string Poly::coeff_csv() const {
    if (is_zero()) {
        return "0";
    }
    std::string out;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i > 0) out += ",";
        out += coeffs_[i].str();
    }
    return out;
}

Poly Poly::parse_coeff_csv(std::string_view text) {
    std::vector<Rational> coeffs;
    size_t pos = 0;
    while (true) {
        size_t comma = text.find(',', pos);
        std::string_view item = comma == std::string_view::npos
                                    ? text.substr(pos)
                                    : text.substr(pos, comma - pos);
        coeffs.push_back(Rational::parse(item));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Poly(std::move(coeffs));
}

std::pair<Poly, Poly> parity_split(const Poly& f) {
    std::vector<Rational> even(f.coeffs().size());
    std::vector<Rational> odd(f.coeffs().size());
    for (size_t i = 0; i < f.coeffs().size(); ++i) {
        (i % 2 == 0 ? even : odd)[i] = f.coeffs()[i];
    }
    return {Poly(std::move(even)), Poly(std::move(odd))};
}

Poly reflect(const Poly& f) {
    std::vector<Rational> v = f.coeffs();
    for (size_t i = 1; i < v.size(); i += 2) {
        v[i] = -v[i];
    }
    return Poly(std::move(v));
}

Poly classical_derivative(const Poly& f) {
    if (f.is_zero() || f.coeffs().size() == 1) {
        return Poly();
    }
    std::vector<Rational> v(f.coeffs().size() - 1);
    for (size_t i = 1; i < f.coeffs().size(); ++i) {
        v[i - 1] = f.coeffs()[i] * Rational(static_cast<long>(i));
    }
    return Poly(std::move(v));
}

}  // namespace parabose
