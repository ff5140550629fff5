#include "parabose/calculus.hpp"

#include <stdexcept>

namespace parabose {

Poly DOperator::derivative(const Poly& f) const {
    if (f.is_zero() || f.coeffs().size() == 1) {
        return Poly();
    }
    std::vector<Rational> v(f.coeffs().size() - 1);
    for (size_t n = 1; n < f.coeffs().size(); ++n) {
        v[n - 1] = f.coeffs()[n] * bracket(static_cast<long>(n), p_);
    }
    return Poly(std::move(v));
}

Poly DOperator::derivative(const Poly& f, int order) const {
    if (order < 0) {
        throw std::invalid_argument("DOperator::derivative: negative order");
    }
    Poly g = f;
    for (int k = 0; k < order; ++k) {
        g = derivative(g);
    }
    return g;
}

Poly DOperator::antiderivative(const Poly& f) const {
    if (f.is_zero()) {
        return Poly();
    }
    std::vector<Rational> v(f.coeffs().size() + 1);
    for (size_t n = 0; n < f.coeffs().size(); ++n) {
        v[n + 1] = f.coeffs()[n] / bracket(static_cast<long>(n) + 1, p_);
    }
    return Poly(std::move(v));
}

Rational DOperator::integrate(const Poly& f, const Rational& a, const Rational& b) const {
    Poly primitive = antiderivative(f);
    return primitive.eval_exact(b) - primitive.eval_exact(a);
}

}  // namespace parabose
