#include "parabose/deformation.hpp"

#include <stdexcept>

namespace parabose {

DeformationParameter::DeformationParameter(Rational p) : p_(std::move(p)) {
    if (p_.sign() <= 0) {
        throw std::invalid_argument("DeformationParameter: p must be positive, got " + p_.str());
    }
}

DeformationParameter DeformationParameter::parse(std::string_view text) {
    return DeformationParameter(Rational::parse(text));
}

Rational bracket(long n, const DeformationParameter& p) {
    if (n < 0) {
        throw std::invalid_argument("bracket: index must be non-negative");
    }
    Rational value(n);
    if (n % 2 != 0) {
        value += p.value() - Rational(1);
    }
    return value;
}

Rational bracket_factorial(long n, const DeformationParameter& p) {
    if (n < 0) {
        throw std::invalid_argument("bracket_factorial: index must be non-negative");
    }
    Rational acc(1);
    for (long k = 1; k <= n; ++k) {
        acc *= bracket(k, p);
    }
    return acc;
}

}  // namespace parabose
