#pragma once

#include <utility>

#include "harmdiff/cusp.hpp"
#include "harmdiff/laurent.hpp"

namespace harmdiff {

/// Minimize the L2 norm over the harmonic (Laurent) family on an annulus,
/// subject to a prescribed period. Restricting to the harmonic family
/// loses nothing: the minimizer over all closed forms in the class is
/// harmonic, so it already lies in this family. The boundary conditions
/// under which that holds are satisfied automatically by every member of
/// the family on the annulus, so nothing about them is enforced
/// numerically.
///
/// The norm is a diagonal positive-definite quadratic in the real
/// coordinates (Re a_n, Im a_n); the period is one linear equation. The
/// window must contain n = -1 or the constraint is infeasible for p != 0.
struct MinimizationProblem {
    double p;
    Annulus annulus;
    int n_min;
    int n_max;

    MinimizationProblem(double p_, Annulus annulus_, int n_min_, int n_max_);
};

/// Direct KKT solve of the equality-constrained quadratic program (no
/// hand-substitution). The unique solution is the flat-cylinder form:
/// every coefficient zero except Im(a_{-1}) = -p/(2*pi).
LaurentSeries minimize_in_class(const MinimizationProblem& problem);

/// Euclidean magnitude of the norm-squared gradient at `series`,
/// projected onto the period constraint's null space. Zero (to solver
/// tolerance) exactly at the constrained minimizer.
double projected_gradient_norm(const MinimizationProblem& problem,
                               const LaurentSeries& series);

/// First-order optimality cross-check: central finite differences of
/// norm_sq against the analytic gradient, max relative disagreement.
double gradient_fd_max_error(const MinimizationProblem& problem,
                             const LaurentSeries& series, double step);

/// Compares the flat form p*dt against a competitor with the same period
/// on a finite band: returns (|p dt|^2, |competitor|^2) on the band's
/// annulus image. Throws std::invalid_argument when the competitor's
/// period does not match p within zero tolerance.
std::pair<double, double> band_minimality_check(double p, const CuspBand& band,
                                                const LaurentSeries& competitor);

} // namespace harmdiff
