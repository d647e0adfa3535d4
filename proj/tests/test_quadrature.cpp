#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <random>

#include "harmdiff/quadrature.hpp"
#include "harmdiff/random_forms.hpp"
#include "test_helpers.hpp"

using namespace harmdiff;
using testutil::rel_err;

TEST_CASE("gauss_legendre: exactness on polynomials") {
    const auto [nodes, weights] = gauss_legendre(12);
    double wsum = 0.0;
    for (double w : weights) wsum += w;
    CHECK(rel_err(wsum, 2.0) < 1e-14);
    for (size_t i = 0; i < nodes.size(); ++i) {
        CHECK(nodes[i] == doctest::Approx(-nodes[nodes.size() - 1 - i]).epsilon(1e-14));
    }
    // Exact through degree 2*12-1.
    for (int deg : {2, 8, 14, 22}) {
        double got = 0.0;
        for (size_t i = 0; i < nodes.size(); ++i) got += weights[i] * std::pow(nodes[i], deg);
        CHECK(rel_err(got, 2.0 / (deg + 1)) < 1e-13);
    }
}

TEST_CASE("contour_period: anchors") {
    QuadratureSpec spec;
    spec.contour_nodes = 64;
    CHECK(std::abs(contour_period(dt_series(kTwoPi), 0.5, spec) - kTwoPi) < 1e-12);
    CHECK(std::abs(contour_period(LaurentSeries::single(0, Complex(1, 0)), 0.7, spec)) <
          1e-12);
    CHECK(std::abs(contour_period(LaurentSeries::single(-1, Complex(1, 0)), 0.5, spec)) <
          1e-12);
    CHECK_THROWS_AS(contour_period(dt_series(1.0), 0.0, spec), std::invalid_argument);
}

TEST_CASE("contour_period: spectral decay and radius independence") {
    // Geometric coefficients mimic 1/(2 - z): the aliasing error decays
    // geometrically with the node count until it hits rounding.
    std::vector<Complex> coeffs;
    for (int n = 0; n <= 30; ++n) coeffs.push_back(Complex(0.0, std::pow(2.0, -(n + 1))));
    LaurentSeries geo(0, std::move(coeffs));
    geo = add(geo, dt_series(3.0)); // nonzero target period
    QuadratureSpec spec;
    double prev_err = -1.0;
    for (int nodes : {4, 8, 16}) {
        spec.contour_nodes = nodes;
        const double err = std::abs(contour_period(geo, 0.5, spec) - 3.0);
        if (prev_err > 1e-12) CHECK(err <= prev_err / 10.0);
        prev_err = err;
    }
    spec.contour_nodes = 64;
    CHECK(std::abs(contour_period(geo, 0.5, spec) - 3.0) < 1e-13);

    std::mt19937 rng(53);
    for (int trial = 0; trial < 20; ++trial) {
        const LaurentSeries s = random_series(rng, -10, 10);
        spec.contour_nodes = 256;
        const double p0 = contour_period(s, 0.3, spec);
        const double p1 = contour_period(s, 0.5, spec);
        const double p2 = contour_period(s, 0.8, spec);
        CHECK(std::abs(p0 - p1) < 1e-10);
        CHECK(std::abs(p1 - p2) < 1e-10);
        CHECK(std::abs(p1 - period(s)) < 1e-10);
    }
}

TEST_CASE("annulus_norm_sq: anchors") {
    QuadratureSpec spec;
    CHECK(rel_err(annulus_norm_sq(LaurentSeries::single(0, Complex(1, 0)), Annulus(0.5), spec),
                  3.0 * kPi / 4.0) < 1e-10);
    CHECK(rel_err(annulus_norm_sq(LaurentSeries::single(-1, Complex(0, -1)),
                                  Annulus(std::exp(-1.0)), spec),
                  kTwoPi) < 1e-10);
    CHECK(annulus_norm_sq(LaurentSeries::zero(), Annulus(0.4), spec) == 0.0);
}

TEST_CASE("annulus_norm_sq: agrees with the coefficient formula") {
    std::mt19937 rng(59);
    QuadratureSpec spec;
    std::uniform_real_distribution<double> rho_dist(0.1, 0.9);
    std::uniform_int_distribution<int> lo(-10, -1), hi(-1, 10);
    for (int trial = 0; trial < 200; ++trial) {
        const LaurentSeries s = random_series(rng, lo(rng), hi(rng));
        const Annulus annulus(trial < 5 ? 0.3 : rho_dist(rng));
        CHECK(rel_err(annulus_norm_sq(s, annulus, spec), norm_sq(s, annulus)) < 1e-8);
    }
}

TEST_CASE("annulus_norm_sq: worker count never changes bits") {
    std::mt19937 rng(61);
    const LaurentSeries s = random_series(rng, -6, 6);
    QuadratureSpec spec;
    setenv("HARMDIFF_WORKERS", "1", 1);
    const double serial = annulus_norm_sq(s, Annulus(0.2), spec);
    setenv("HARMDIFF_WORKERS", "4", 1);
    const double threaded = annulus_norm_sq(s, Annulus(0.2), spec);
    setenv("HARMDIFF_WORKERS", "7", 1);
    const double odd = annulus_norm_sq(s, Annulus(0.2), spec);
    unsetenv("HARMDIFF_WORKERS");
    CHECK(serial == threaded);
    CHECK(serial == odd);
}

TEST_CASE("grid_exterior_derivative: closed forms") {
    // Constant dt form.
    GriddedForm flat(0.0, 1.0, 33, 32);
    flat.comp_t().setConstant(2.5);
    CHECK(grid_exterior_derivative(flat).cwiseAbs().maxCoeff() == 0.0);

    // d(r t) on the universal cover: comp_r = t, comp_t = r. The t seam
    // columns see the cover discontinuity, so the check stays interior.
    const auto seamless_sup = [](int n) {
        GriddedForm form(0.0, 1.0, n, n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                form.comp_r()(i, j) = form.t_value(j);
                form.comp_t()(i, j) = form.r_value(i);
            }
        }
        const Eigen::MatrixXd curl = grid_exterior_derivative(form);
        return curl.block(0, 1, n, n - 2).cwiseAbs().maxCoeff();
    };
    CHECK(seamless_sup(32) < 1e-12);

    CHECK_THROWS_AS(grid_exterior_derivative(GriddedForm(0.0, 1.0, 2, 8)),
                    std::invalid_argument);
}

TEST_CASE("quadrature spec validates") {
    QuadratureSpec spec;
    spec.radial_nodes = 3;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
}
