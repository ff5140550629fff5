#ifndef PARABOSE_DEFORMATION_HPP
#define PARABOSE_DEFORMATION_HPP

#include "parabose/rational.hpp"

namespace parabose {

/// Order parameter p of the deformation, p > 0. p = 1 is the undeformed
/// (Bose) case and every quantity in the library reduces to its classical
/// value there. Positive integers are the physically motivated choices;
/// any positive rational is accepted since all formulas stay rational in p.
class DeformationParameter {
public:
    explicit DeformationParameter(Rational p);
    explicit DeformationParameter(long p) : DeformationParameter(Rational(p)) {}

    /// Parses "a" or "a/b" and checks positivity.
    static DeformationParameter parse(std::string_view text);

    const Rational& value() const { return p_; }
    bool is_classical() const { return p_ == Rational(1); }

    friend bool operator==(const DeformationParameter& a, const DeformationParameter& b) {
        return a.p_ == b.p_;
    }

private:
    Rational p_;
};

/// The deformed integer [n]: n for even n, n + p - 1 for odd n. [0] = 0
/// and [n] > 0 for n >= 1. Throws on negative n.
Rational bracket(long n, const DeformationParameter& p);

/// [n]! = [n][n-1]...[1] with [0]! = 1. Throws on negative n.
Rational bracket_factorial(long n, const DeformationParameter& p);

}  // namespace parabose

#endif
