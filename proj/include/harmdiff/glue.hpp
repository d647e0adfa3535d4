#pragma once

#include "harmdiff/gridded_form.hpp"
#include "harmdiff/laurent.hpp"

namespace harmdiff {

/// Canonical smooth cutoff: 1 on (-inf, -1/2], 0 on [0, inf),
/// nonincreasing, C-infinity. Built from h(s) = exp(-1/s) (s > 0):
/// g(r) = h(-r) / (h(-r) + h(r + 1/2)).
double bump(double r);

/// Analytic derivative of bump; identically zero on both plateaus.
double bump_derivative(double r);

/// Grid shape for the glue construction. The grid always starts at the
/// cusp mouth r = -ln 2 and must reach past the cutoff support (r_hi > 0).
struct GlueGrid {
    double r_hi = 0.5;
    int n_r = 129;
    int n_t = 128;

    void validate() const;
};

/// From a form omega with period p near the cusp mouth, build the closed
/// form alpha = p*dt + d(g*phi), where d(phi) = omega - p*dt. On the grid:
/// alpha equals the pullback of omega for r <= -1/2 and equals (0, p)
/// exactly for r >= 0. The differential d(g*phi) = g'*phi dr + g*d(phi)
/// is sampled with the analytic g' and term-wise exact partials of phi.
///
/// The construction is local to one cusp; a surface with several cusps is
/// handled by independent invocations, one per cusp with its own period.
GriddedForm build_alpha(const LaurentSeries& omega, double p, const GlueGrid& grid);

/// Maximum over grid rows of |horocycle period - p|; closedness makes
/// the row period independent of r, including across the cutoff zone.
double alpha_period_check(const GriddedForm& alpha, double p);

} // namespace harmdiff
