#pragma once

#include "harmdiff/laurent.hpp"

namespace harmdiff {

/// Mouth of the glue region: the cusp model extends down to r = -ln 2,
/// where the band maps to an annulus with outer radius above 1.
inline const double kCuspMouthR = -0.69314718055994530941723212145818; // -ln 2

/// Point in cusp coordinates: depth r, horocycle coordinate t in [0,1).
struct CuspPoint {
    double r;
    double t;

    CuspPoint(double r_, double t_);
};

/// r-interval of a cusp; r_hi may be +infinity where the norm converges.
struct CuspBand {
    double r_lo;
    double r_hi;

    CuspBand(double r_lo_, double r_hi_);
    double length() const { return r_hi - r_lo; }
};

/// The conformal identification z = exp(2*pi*i*(t + i*r)), so that
/// |z| = exp(-2*pi*r) and dt pulls back to Re(dz / (2*pi*i*z)).
Complex disk_from_cusp(const CuspPoint& pt);

/// Inverse of disk_from_cusp on z != 0.
CuspPoint cusp_from_disk(Complex z);

/// rho(r) = exp(-2*pi*r): strictly decreasing, 1 at r = 0, -> 0 as r -> inf.
double rho_of_r(double r);

/// Inner/outer radii of the annulus image of a band.
double band_rho_in(const CuspBand& band);
double band_rho_out(const CuspBand& band);

/// L2 norm squared of Re(f dz) over the annulus image of the band.
double band_norm_sq(const LaurentSeries& series, const CuspBand& band);

/// Norm of p*dt over a finite band [r_lo, r_hi] with 0 <= r_lo, computed
/// through the annulus formulas and checked against the flat-cylinder
/// value p^2 * (r_hi - r_lo). Returns the annulus-side value.
double dt_pullback_check(double p, const CuspBand& band);

} // namespace harmdiff
