#ifndef PARABOSE_POLY_HPP
#define PARABOSE_POLY_HPP

#include "parabose/rational.hpp"

#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace parabose {

/// Dense univariate polynomial over Rational, coefficients stored in
/// ascending degree order. The vector is kept normalized: it is either
/// empty (the zero polynomial) or ends in a nonzero coefficient.
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Rational> ascending);
    explicit Poly(std::vector<Rational> ascending);

    static Poly constant(Rational c);
    static Poly x() { return monomial(1); }
    static Poly monomial(int k, Rational c = Rational(1));

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree, or nullopt for the zero polynomial.
    std::optional<int> degree() const;

    /// Coefficient of x^k; zero above the degree. Throws on negative k.
    const Rational& coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const Rational& c);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Multiplication by x^k.
    Poly shifted_up(int k) const;

    /// Exact division by x^k; throws unless the k lowest coefficients vanish.
    Poly shifted_down(int k) const;

    bool is_even() const;  // no odd-degree terms
    bool is_odd() const;   // no even-degree terms

    /// Exact Horner evaluation.
    Rational eval_exact(const Rational& x0) const;

    /// Double-precision Horner evaluation; throws on non-finite x0. Kept
    /// separate from the exact path so the two are never mixed silently.
    double eval_double(double x0) const;

    /// Human-readable form in descending degree, e.g. "2x^2 - 1".
    std::string str(std::string_view var = "x") const;

    /// Canonical machine form: comma-separated ascending coefficients,
    /// each "a" or "a/b". The zero polynomial renders as "0".
    std::string coeff_csv() const;
    static Poly parse_coeff_csv(std::string_view text);

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

/// (even-power part, odd-power part); the parts sum back to f.
std::pair<Poly, Poly> parity_split(const Poly& f);

/// f(-x): flips the sign of every odd-degree coefficient.
Poly reflect(const Poly& f);

/// Ordinary (undeformed) derivative d/dx.
Poly classical_derivative(const Poly& f);

}  // namespace parabose

#endif
