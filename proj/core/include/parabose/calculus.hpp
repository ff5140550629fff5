#ifndef PARABOSE_CALCULUS_HPP
#define PARABOSE_CALCULUS_HPP

#include "parabose/deformation.hpp"
#include "parabose/poly.hpp"

namespace parabose {

/// The deformed derivative D and its inverse, acting on polynomials.
///
/// On monomials D x^n = [n] x^(n-1); equivalently D f = f' plus the
/// parity correction (p-1)/(2x) (f - f(-x)). The correction never needs a
/// rational-function type: f - f(-x) is odd, so dividing by x is an exact
/// coefficient shift. At p = 1, D is the ordinary derivative.
///
/// The Leibniz rule D(fg) = (Df)g + f(Dg) holds when f or g is even; it
/// can fail for two odd factors.
class DOperator {
public:
    explicit DOperator(DeformationParameter p) : p_(std::move(p)) {}

    const DeformationParameter& parameter() const { return p_; }

    /// Termwise c_n x^n -> c_n [n] x^(n-1).
    Poly derivative(const Poly& f) const;

    /// D^order; order 0 is the identity. Throws on negative order.
    Poly derivative(const Poly& f, int order) const;

    /// Termwise c_n x^n -> c_n x^(n+1)/[n+1], integration constant 0.
    /// Left inverse of nothing, right inverse of D: D(antiderivative(f)) = f.
    Poly antiderivative(const Poly& f) const;

    /// Definite deformed integral, evaluated as F(b) - F(a) with
    /// F = antiderivative(f). For odd f it coincides with the classical
    /// integral; on symmetric intervals odd integrands give exactly 0.
    Rational integrate(const Poly& f, const Rational& a, const Rational& b) const;

private:
    DeformationParameter p_;
};

}  // namespace parabose

#endif
