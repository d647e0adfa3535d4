#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "harmdiff/cusp.hpp"
#include "harmdiff/gridded_form.hpp"
#include "harmdiff/laurent.hpp"

namespace harmdiff {

/// Node counts for the independent verification integrals. Radial nodes
/// are Gauss-Legendre (the integrand is smooth but not periodic in r);
/// angular and contour nodes are uniform trapezoid points, spectrally
/// accurate on trigonometric integrands.
struct QuadratureSpec {
    int radial_nodes = 64;
    int angular_nodes = 256;
    int contour_nodes = 256;

    void validate() const;
};

/// Gauss-Legendre nodes and weights on [-1, 1].
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n);

/// Trapezoid approximation of the period integral of Re(f dz) over the
/// circle |z| = radius. Radius-independent up to quadrature error.
double contour_period(const LaurentSeries& series, double radius,
                      const QuadratureSpec& spec);

/// Tensor-product quadrature of |f|^2 over the annulus in polar
/// coordinates. Node evaluations may run on HARMDIFF_WORKERS threads;
/// the reduction order is fixed, so the result is worker-independent.
double annulus_norm_sq(const LaurentSeries& series, const Annulus& annulus,
                       const QuadratureSpec& spec);

/// Same integral computed in cusp coordinates from the pulled-back
/// components (conformal invariance makes the two agree).
double cusp_band_norm_sq(const LaurentSeries& series, const CuspBand& band,
                         const QuadratureSpec& spec);

/// Centered-difference curl (d_r comp_t - d_t comp_r) on the grid;
/// second-order one-sided stencils on the first and last r rows, periodic
/// in t. Sup-norm is O(h^2) for closed smooth forms.
Eigen::MatrixXd grid_exterior_derivative(const GriddedForm& form);

} // namespace harmdiff
