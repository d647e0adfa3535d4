#include "harmdiff/glue.hpp"

#include <cmath>
#include <stdexcept>

#include "harmdiff/cusp.hpp"

namespace harmdiff {

namespace {

double h(double s) { return s > 0.0 ? std::exp(-1.0 / s) : 0.0; }

double h_prime(double s) {
    if (s <= 0.0) return 0.0;
    const double e = std::exp(-1.0 / s);
    return e / (s * s);
}

} // namespace

double bump(double r) {
    const double a = h(-r);
    const double d = h(r + 0.5);
    if (a == 0.0) return 0.0;
    if (d == 0.0) return 1.0;
    return a / (a + d);
}

double bump_derivative(double r) {
    const double a = h(-r);
    const double d = h(r + 0.5);
    if (a == 0.0 || d == 0.0) return 0.0;
    const double ap = -h_prime(-r);
    const double dp = h_prime(r + 0.5);
    const double denom = a + d;
    return (ap * d - a * dp) / (denom * denom);
}

void GlueGrid::validate() const {
    if (!(r_hi > 0.0) || !std::isfinite(r_hi)) {
        throw std::invalid_argument("GlueGrid: r_hi must be positive (grid must cover the cutoff support)");
    }
    if (n_r < 3 || n_t < 4) {
        throw std::invalid_argument("GlueGrid: grid too small");
    }
}

GriddedForm build_alpha(const LaurentSeries& omega, double p, const GlueGrid& grid) {
    grid.validate();
    if (std::abs(period(omega) - p) > kTwoPi * zero_tolerance(omega)) {
        throw std::invalid_argument(
            "build_alpha: period of omega does not match p, the difference is not exact");
    }
    const LaurentSeries diff = subtract(omega, dt_series(p));
    const Antiderivative anti = antiderivative(diff);

    GriddedForm alpha(kCuspMouthR, grid.r_hi, grid.n_r, grid.n_t);
    for (int i = 0; i < grid.n_r; ++i) {
        const double r = alpha.r_value(i);
        const double g = bump(r);
        const double gp = bump_derivative(r);
        for (int j = 0; j < grid.n_t; ++j) {
            if (g == 0.0 && gp == 0.0) {
                alpha.comp_r()(i, j) = 0.0;
                alpha.comp_t()(i, j) = p;
                continue;
            }
            const Complex z = disk_from_cusp(CuspPoint(r, alpha.t_value(j)));
            // phi(z) = Re(F(z)) + c ln|z|, with ln|z| = -2*pi*r exactly.
            const double phi = eval(anti.primitive, z).real() - kTwoPi * anti.log_coeff * r;
            // d(phi) components are the pullback of Re(f_diff dz).
            const Complex fz = eval(diff, z) * z;
            const double phi_r = -kTwoPi * fz.real();
            const double phi_t = -kTwoPi * fz.imag();
            alpha.comp_r()(i, j) = gp * phi + g * phi_r;
            alpha.comp_t()(i, j) = p + g * phi_t;
        }
    }
    return alpha;
}

double alpha_period_check(const GriddedForm& alpha, double p) {
    double worst = 0.0;
    for (int i = 0; i < alpha.n_r(); ++i) {
        worst = std::max(worst, std::abs(horocycle_period(alpha, i) - p));
    }
    return worst;
}

} // namespace harmdiff
