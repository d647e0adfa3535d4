#pragma once

#include <random>

#include "harmdiff/cusp.hpp"
#include "harmdiff/laurent.hpp"

namespace harmdiff {

/// Uniform draw from the closed unit disk.
inline Complex random_unit_disk(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (;;) {
        const Complex c(u(rng), u(rng));
        if (std::norm(c) <= 1.0) return c;
    }
}

/// Random series with unit-disk coefficients on the window.
inline LaurentSeries random_series(std::mt19937& rng, int n_min, int n_max) {
    std::vector<Complex> coeffs(static_cast<size_t>(n_max - n_min + 1));
    for (Complex& c : coeffs) c = random_unit_disk(rng);
    return LaurentSeries(n_min, std::move(coeffs));
}

/// Random series with coefficients scaled so each term's pulled-back
/// component magnitude stays O(1) over the cusp band [r_lo, r_hi]
/// (|a_n| |z|^{n+1} <= 1 on the band). Keeps band norms of wild windows
/// bounded, which is the family the growth bounds are about.
inline LaurentSeries band_normalized_series(std::mt19937& rng, int n_min, int n_max,
                                            double r_lo, double r_hi) {
    const double rho_out = rho_of_r(r_lo);
    const double rho_in = rho_of_r(r_hi);
    std::vector<Complex> coeffs(static_cast<size_t>(n_max - n_min + 1));
    for (int n = n_min; n <= n_max; ++n) {
        const double reach =
            std::max(std::pow(rho_in, n + 1), std::pow(rho_out, n + 1));
        coeffs[static_cast<size_t>(n - n_min)] = random_unit_disk(rng) / reach;
    }
    return LaurentSeries(n_min, std::move(coeffs));
}

/// Pins the period of a series to p by overwriting Im(a_{-1}).
inline LaurentSeries with_period(const LaurentSeries& series, double p) {
    const int lo = std::min(series.n_min(), -1);
    const int hi = std::max(series.n_max(), -1);
    std::vector<Complex> coeffs(static_cast<size_t>(hi - lo + 1));
    for (int n = lo; n <= hi; ++n) {
        coeffs[static_cast<size_t>(n - lo)] = series.coeff(n);
    }
    Complex& pivot = coeffs[static_cast<size_t>(-1 - lo)];
    pivot = Complex(pivot.real(), -p / kTwoPi);
    return LaurentSeries(lo, std::move(coeffs));
}

} // namespace harmdiff
