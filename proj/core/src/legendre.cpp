#include "parabose/legendre.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

namespace parabose {

namespace {

void require_index(int n, const char* where) {
    if (n < 0) {
        throw std::invalid_argument(std::string(where) + ": index must be non-negative");
    }
}

Rational mu(int n, const DeformationParameter& p) {
    return bracket(n, p) * bracket(n + 1, p);
}

}  // namespace

const char* generator_name(Generator g) {
    switch (g) {
        case Generator::ExplicitSum: return "explicit_sum";
        case Generator::Rodrigues: return "rodrigues";
        case Generator::Recursion: return "recursion";
    }
    return "unknown";
}

Poly legendre_explicit(int n, const DeformationParameter& p) {
    require_index(n, "legendre_explicit");
    Poly sum;
    const Rational two_pow_n = pow(Rational(2), static_cast<unsigned>(n));
    for (int k = 0; 2 * k <= n; ++k) {
        Rational c = bracket_factorial(2 * n - 2 * k, p) /
                     (two_pow_n * factorial(static_cast<unsigned>(k)) *
                      factorial(static_cast<unsigned>(n - k)) *
                      bracket_factorial(n - 2 * k, p));
        if (k % 2 != 0) {
            c = -c;
        }
        sum += Poly::monomial(n - 2 * k, std::move(c));
    }
    return sum;
}

Poly legendre_rodrigues(int n, const DeformationParameter& p) {
    require_index(n, "legendre_rodrigues");
    const Poly base{Rational(-1), Rational(0), Rational(1)};  // x^2 - 1
    Poly power = Poly::constant(Rational(1));
    for (int k = 0; k < n; ++k) {
        power *= base;
    }
    DOperator d(p);
    Poly result = d.derivative(power, n);
    result *= Rational(1) / (pow(Rational(2), static_cast<unsigned>(n)) *
                             factorial(static_cast<unsigned>(n)));
    return result;
}

LegendreFamily legendre_recursion(int n_max, const DeformationParameter& p) {
    return LegendreFamily::build(n_max, p, Generator::Recursion);
}

LegendreFamily LegendreFamily::build(int n_max, DeformationParameter p, Generator g) {
    require_index(n_max, "LegendreFamily::build");
    LegendreFamily family(std::move(p), g);
    family.polys_.reserve(static_cast<size_t>(n_max) + 1);
    family.eigenvalues_.reserve(static_cast<size_t>(n_max) + 1);

    switch (g) {
        case Generator::Recursion: {
            family.polys_.push_back(Poly::constant(Rational(1)));
            if (n_max >= 1) {
                family.polys_.push_back(Poly::x());
            }
            for (int n = 1; n < n_max; ++n) {
                Poly next = Poly::x() * family.polys_[static_cast<size_t>(n)];
                next *= bracket(2 * n + 1, family.p_);
                next -= bracket(n, family.p_) * family.polys_[static_cast<size_t>(n) - 1];
                next *= Rational(1) / bracket(n + 1, family.p_);
                family.polys_.push_back(std::move(next));
            }
            break;
        }
        case Generator::ExplicitSum: {
            for (int n = 0; n <= n_max; ++n) {
                family.polys_.push_back(legendre_explicit(n, family.p_));
            }
            break;
        }
        case Generator::Rodrigues: {
            for (int n = 0; n <= n_max; ++n) {
                family.polys_.push_back(legendre_rodrigues(n, family.p_));
            }
            break;
        }
    }

    for (int n = 0; n <= n_max; ++n) {
        family.eigenvalues_.push_back(mu(n, family.p_));
    }
    return family;
}

const Poly& LegendreFamily::poly(int n) const {
    if (n < 0 || n > max_index()) {
        throw std::invalid_argument("LegendreFamily::poly: index out of range");
    }
    return polys_[static_cast<size_t>(n)];
}

const Rational& LegendreFamily::eigenvalue(int n) const {
    if (n < 0 || n > max_index()) {
        throw std::invalid_argument("LegendreFamily::eigenvalue: index out of range");
    }
    return eigenvalues_[static_cast<size_t>(n)];
}

const LegendreFamily& shared_family(const DeformationParameter& p, int n_max) {
    require_index(n_max, "shared_family");
    static std::mutex mutex;
    static std::map<std::pair<std::string, int>, std::unique_ptr<const LegendreFamily>> cache;

    const auto key = std::make_pair(p.value().str(), n_max);
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it == cache.end()) {
        it = cache.emplace(key, std::make_unique<const LegendreFamily>(
                                    legendre_recursion(n_max, p)))
                 .first;
    }
    return *it->second;
}

Poly ode_residual(int n, const DeformationParameter& p) {
    require_index(n, "ode_residual");
    const LegendreFamily& family = shared_family(p, n);
    DOperator d(p);
    const Poly one_minus_x2{Rational(1), Rational(0), Rational(-1)};
    Poly inner = one_minus_x2 * d.derivative(family.poly(n));
    return d.derivative(inner) + family.eigenvalue(n) * family.poly(n);
}

Poly ode_residual_classical_form(int n, const DeformationParameter& p) {
    require_index(n, "ode_residual_classical_form");
    const Poly& f = shared_family(p, n).poly(n);
    const Rational pm1 = p.value() - Rational(1);
    const Poly x = Poly::x();
    const Poly x2 = Poly::monomial(2);
    const Poly x3 = Poly::monomial(3);

    const Poly df = classical_derivative(f);
    const Poly ddf = classical_derivative(df);

    Poly residual = (x2 - Poly::monomial(4)) * ddf;
    residual -= (Rational(2) * x3 - pm1 * (x - x3)) * df;
    const Poly weight = (pm1 / Rational(2)) * (x2 + Poly::constant(Rational(1)));
    residual -= weight * f;
    residual += weight * reflect(f);
    residual += mu(n, p) * (x2 * f);
    return residual;
}

Rational norm_squared(int n, const DeformationParameter& p) {
    require_index(n, "norm_squared");
    return Rational(2) / bracket(2 * n + 1, p);
}

Rational inner_product(int n, int m, const DeformationParameter& p) {
    require_index(n, "inner_product");
    require_index(m, "inner_product");
    const LegendreFamily& family = shared_family(p, std::max(n, m));
    DOperator d(p);
    return d.integrate(family.poly(n) * family.poly(m), Rational(-1), Rational(1));
}

Rational moment_x(int n, int m, const DeformationParameter& p) {
    require_index(n, "moment_x");
    require_index(m, "moment_x");
    if (m == n - 1) {
        return Rational(2) * bracket(n, p) /
               (bracket(2 * n - 1, p) * bracket(2 * n + 1, p));
    }
    if (m == n + 1) {
        return Rational(2) * bracket(n + 1, p) /
               (bracket(2 * n + 1, p) * bracket(2 * n + 3, p));
    }
    return Rational(0);
}

Rational moment_x_integrated(int n, int m, const DeformationParameter& p) {
    require_index(n, "moment_x_integrated");
    require_index(m, "moment_x_integrated");
    const LegendreFamily& family = shared_family(p, std::max(n, m));
    DOperator d(p);
    return d.integrate(Poly::x() * family.poly(m) * family.poly(n),
                       Rational(-1), Rational(1));
}

bool RecursionResiduals::all_zero() const {
    return three_term.is_zero() && derivative_step_up.is_zero() &&
           derivative_step_down.is_zero() && derivative_difference.is_zero() &&
           weighted_derivative.is_zero();
}

RecursionResiduals recursion_residuals(int n, const DeformationParameter& p) {
    if (n < 1) {
        throw std::invalid_argument("recursion_residuals: index must be >= 1");
    }
    const LegendreFamily& family = shared_family(p, n + 1);
    DOperator d(p);
    const Poly& prev = family.poly(n - 1);
    const Poly& cur = family.poly(n);
    const Poly& next = family.poly(n + 1);
    const Poly d_prev = d.derivative(prev);
    const Poly d_cur = d.derivative(cur);
    const Poly d_next = d.derivative(next);
    const Poly x = Poly::x();
    const Poly x2_minus_1{Rational(-1), Rational(0), Rational(1)};

    RecursionResiduals r;
    r.three_term = bracket(n + 1, p) * next - bracket(2 * n + 1, p) * (x * cur) +
                   bracket(n, p) * prev;
    r.derivative_step_up = d_next - x * d_cur - bracket(n + 1, p) * cur;
    r.derivative_step_down = x * d_cur - d_prev - bracket(n, p) * cur;
    r.derivative_difference = d_next - d_prev - bracket(2 * n + 1, p) * cur;
    r.weighted_derivative = x2_minus_1 * d_cur - bracket(n, p) * (x * cur) +
                            bracket(n, p) * prev;
    return r;
}

}  // namespace parabose
