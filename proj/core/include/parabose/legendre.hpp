#ifndef PARABOSE_LEGENDRE_HPP
#define PARABOSE_LEGENDRE_HPP

#include "parabose/calculus.hpp"
#include "parabose/deformation.hpp"
#include "parabose/poly.hpp"

#include <vector>

namespace parabose {

/// Which of the three equivalent constructions produced a family.
enum class Generator { ExplicitSum, Rodrigues, Recursion };

const char* generator_name(Generator g);

/// The polynomials P_0..P_N for a fixed p, with their eigenvalues
/// mu_n = [n][n+1]. Entry n has degree exactly n and parity (-1)^n, takes
/// the value 1 at x = 1, and the three constructions agree coefficientwise.
class LegendreFamily {
public:
    static LegendreFamily build(int n_max, DeformationParameter p,
                                Generator g = Generator::Recursion);

    int max_index() const { return static_cast<int>(polys_.size()) - 1; }
    const DeformationParameter& parameter() const { return p_; }
    Generator generator() const { return generator_; }

    const Poly& poly(int n) const;
    const Rational& eigenvalue(int n) const;

private:
    LegendreFamily(DeformationParameter p, Generator g)
        : p_(std::move(p)), generator_(g) {}

    DeformationParameter p_;
    Generator generator_;
    std::vector<Poly> polys_;
    std::vector<Rational> eigenvalues_;
};

/// Explicit finite sum: P_n(x) = sum_k (-1)^k [2n-2k]! /
/// (2^n k! (n-k)! [n-2k]!) x^(n-2k), k = 0..floor(n/2). The plain
/// factorials are classical; only the bracketed ones are deformed.
Poly legendre_explicit(int n, const DeformationParameter& p);

/// P_n(x) = D^n (x^2 - 1)^n / (2^n n!).
Poly legendre_rodrigues(int n, const DeformationParameter& p);

/// Family built from P_0 = 1, P_1 = x via
/// P_(n+1) = ([2n+1] x P_n - [n] P_(n-1)) / [n+1].
LegendreFamily legendre_recursion(int n_max, const DeformationParameter& p);

/// Process-wide cache of recursion-built families keyed by (p, n_max).
/// Entries are write-once; concurrent lookups are safe.
const LegendreFamily& shared_family(const DeformationParameter& p, int n_max);

/// D((1 - x^2) D P_n) + [n][n+1] P_n, computed on the product polynomial
/// directly. Identically zero.
Poly ode_residual(int n, const DeformationParameter& p);

/// The same equation written with ordinary derivatives and the reflected
/// argument, cleared of its 1/x^2 denominators:
///   x^2 (1-x^2) f'' - (2x^3 - (p-1)(x - x^3)) f'
///   - (p-1)/2 (x^2+1) f + (p-1)/2 (x^2+1) f(-x) + mu x^2 f,
/// with f = P_n. Identically zero.
Poly ode_residual_classical_form(int n, const DeformationParameter& p);

/// Closed-form squared norm 2/[2n+1]; equals the deformed integral of
/// P_n^2 over [-1, 1].
Rational norm_squared(int n, const DeformationParameter& p);

/// Exact deformed integral of P_n P_m over [-1, 1]; zero for n != m and
/// norm_squared(n, p) on the diagonal.
Rational inner_product(int n, int m, const DeformationParameter& p);

/// Closed form of the first-moment integral of x P_m P_n over [-1, 1]:
/// 2[n]/([2n-1][2n+1]) for m = n-1, 2[n+1]/([2n+1][2n+3]) for m = n+1,
/// zero otherwise.
Rational moment_x(int n, int m, const DeformationParameter& p);

/// The same moment by direct exact integration; the two routes are
/// checked against each other rather than trusting either.
Rational moment_x_integrated(int n, int m, const DeformationParameter& p);

/// Left-hand sides of the five recursion relations at index n >= 1.
/// All identically zero.
struct RecursionResiduals {
    Poly three_term;             // [n+1] P_(n+1) - [2n+1] x P_n + [n] P_(n-1)
    Poly derivative_step_up;     // D P_(n+1) - x D P_n - [n+1] P_n
    Poly derivative_step_down;   // x D P_n - D P_(n-1) - [n] P_n
    Poly derivative_difference;  // D P_(n+1) - D P_(n-1) - [2n+1] P_n
    Poly weighted_derivative;    // (x^2-1) D P_n - [n] x P_n + [n] P_(n-1)

    bool all_zero() const;
};

RecursionResiduals recursion_residuals(int n, const DeformationParameter& p);

}  // namespace parabose

#endif
