#ifndef PARABOSE_FOCK_HPP
#define PARABOSE_FOCK_HPP

#include "parabose/deformation.hpp"

#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <vector>

namespace parabose {

/// Raised when a truncated Fock basis is too small to hold a state to the
/// requested tail tolerance.
class TruncationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Ladder and reflection operators on the truncated number basis
/// |0> .. |dim-1>:
///
///   a_dag |n> = sqrt([n+1]) |n+1>,   a |n> = sqrt([n]) |n-1>,
///   R |n> = (-1)^n |n>,
///
/// so that [a, a_dag] = 1 + (p-1) R away from the truncation edge, and
/// a a_dag |0> = p |0>. Only the band coefficients sqrt([n]) are stored;
/// state application walks the band, and full matrices are materialized
/// on demand for algebra checks.
class FockOperators {
public:
    FockOperators(DeformationParameter p, int dim);

    int dim() const { return dim_; }
    const DeformationParameter& parameter() const { return p_; }

    /// sqrt([n]) for 0 <= n <= dim.
    double sqrt_bracket(int n) const;

    /// a_dag applied to an amplitude vector. The amplitude at dim-1 has
    /// nowhere to go and is dropped; callers guard the loss.
    Eigen::VectorXd raise(const Eigen::VectorXd& amps) const;

    /// a applied to an amplitude vector.
    Eigen::VectorXd lower(const Eigen::VectorXd& amps) const;

    Eigen::MatrixXd a_matrix() const;
    Eigen::MatrixXd a_dag_matrix() const;
    Eigen::MatrixXd parity_matrix() const;

private:
    DeformationParameter p_;
    int dim_;
    std::vector<double> sqrt_bracket_;  // index 0..dim
};

/// Amplitudes over |0> .. |dim-1> for a fixed p.
struct FockState {
    DeformationParameter p;
    Eigen::VectorXd amps;

    int dim() const { return static_cast<int>(amps.size()); }
    double squared_norm() const { return amps.squaredNorm(); }
};

struct SqueezeOptions {
    int dim = 400;        // starting truncation
    int max_dim = 8192;   // doubling cap
    double tail_tolerance = 1e-14;
};

/// Squeezed vacuum |r,0> at a fixed truncation. Amplitude at index 2k is
///   (sech r)^(p/2) (tanh r / 2)^k sqrt([2k]!) / k!,
/// built by ratio recurrence; odd indices are zero. Throws TruncationError
/// if the last retained even amplitude exceeds the tail tolerance.
FockState squeezed_vacuum(double r, const DeformationParameter& p, int dim,
                          double tail_tolerance = 1e-14);

/// Squeezed vacuum with the truncation doubled from opts.dim until the
/// tail criterion holds; throws TruncationError past opts.max_dim.
FockState squeezed_vacuum_auto(double r, const DeformationParameter& p,
                               const SqueezeOptions& opts = {});

/// (a_dag)^m applied to a state; the result is generally unnormalized.
/// Throws TruncationError if the relative amplitude mass pushed past the
/// truncation edge exceeds the tolerance.
FockState excite(const FockState& state, int m, const FockOperators& ops,
                 double lost_mass_tolerance = 1e-12);

/// Closed-form squared norm of the m-fold excitation on |r,0>:
/// [m]! (cosh r)^m P_m(cosh r). The polynomial is evaluated at
/// cosh r >= 1, i.e. on its continuation beyond [-1, 1].
double closed_form_norm(double r, int m, const DeformationParameter& p);

/// Both sides of the two-step norm recurrence
///   N_m = -cosh^2(r) [m-1]^2 N_(m-2)
///         + cosh^2(r) (2[m-1] + 1 + (p-1)(-1)^(m-1)) N_(m-1),
/// all three norms taken from the closed form. Requires m >= 2.
std::pair<double, double> norm_recurrence_check(double r, int m,
                                                const DeformationParameter& p);

/// One row of the numeric-versus-closed-form norm comparison. The numeric
/// value is taken at twice the auto-selected truncation; `stability` is
/// the relative difference between the two truncations.
struct NormComparison {
    double r = 0.0;
    int m = 0;
    int dim = 0;  // the doubled truncation actually used
    double numeric = 0.0;
    double closed = 0.0;
    double rel_err = 0.0;
    double stability = 0.0;
};

NormComparison compare_excitation_norm(double r, int m, const DeformationParameter& p,
                                       const SqueezeOptions& opts = {});

/// Per-identity maximum relative deviation for the operator algebra on
/// the retained block:
///  - [a, a_dag] = 1 + (p-1) R, {R, a} = {R, a_dag} = 0, R^2 = 1,
///  - [a, a_dag^n] = a_dag^(n-1) (n + (p-1)/2 (1-(-1)^n) R) for n <= 6,
///  - a |r,0> = tanh(r) a_dag |r,0> on a squeezed vacuum.
/// Deviations are reported, never thrown.
struct AlgebraReport {
    struct Check {
        std::string name;
        double max_deviation = 0.0;
    };
    std::vector<Check> checks;

    double worst() const;
};

AlgebraReport commutator_suite(const FockOperators& ops, double squeeze_r = 0.5);

}  // namespace parabose

#endif
