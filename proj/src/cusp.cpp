#include "harmdiff/cusp.hpp"

#include <cmath>
#include <stdexcept>

namespace harmdiff {

CuspPoint::CuspPoint(double r_, double t_) : r(r_), t(t_) {
    if (!std::isfinite(r)) {
        throw std::invalid_argument("CuspPoint: r must be finite");
    }
    if (!(t >= 0.0 && t < 1.0)) {
        throw std::invalid_argument("CuspPoint: t must lie in [0,1)");
    }
}

CuspBand::CuspBand(double r_lo_, double r_hi_) : r_lo(r_lo_), r_hi(r_hi_) {
    if (std::isnan(r_lo) || std::isnan(r_hi) || std::isinf(r_lo) || !(r_lo < r_hi)) {
        throw std::invalid_argument("CuspBand: need finite r_lo < r_hi");
    }
}

Complex disk_from_cusp(const CuspPoint& pt) {
    const double mag = std::exp(-kTwoPi * pt.r);
    const double theta = kTwoPi * pt.t;
    return Complex(mag * std::cos(theta), mag * std::sin(theta));
}

CuspPoint cusp_from_disk(Complex z) {
    if (z == Complex(0.0, 0.0)) {
        throw std::domain_error("cusp_from_disk: the puncture z = 0 has no cusp coordinates");
    }
    const double r = -std::log(std::abs(z)) / kTwoPi;
    double t = std::arg(z) / kTwoPi;
    if (t < 0.0) t += 1.0;
    if (t >= 1.0) t = 0.0;
    return CuspPoint(r, t);
}

double rho_of_r(double r) { return std::exp(-kTwoPi * r); }

double band_rho_in(const CuspBand& band) { return rho_of_r(band.r_hi); }

double band_rho_out(const CuspBand& band) { return rho_of_r(band.r_lo); }

double band_norm_sq(const LaurentSeries& series, const CuspBand& band) {
    return norm_sq_band(series, band_rho_in(band), band_rho_out(band));
}

double dt_pullback_check(double p, const CuspBand& band) {
    if (!(band.r_lo >= 0.0) || std::isinf(band.r_hi)) {
        throw std::invalid_argument("dt_pullback_check: need 0 <= r_lo < r_hi < inf");
    }
    const double via_annulus = band_norm_sq(dt_series(p), band);
    const double flat = p * p * band.length();
    if (std::abs(via_annulus - flat) > 1e-12 * (1.0 + std::abs(flat))) {
        throw std::logic_error("dt_pullback_check: annulus and cylinder norms disagree");
    }
    return via_annulus;
}

} // namespace harmdiff
