#include "harmdiff/quadrature.hpp"

#include <cmath>
#include <stdexcept>

#include "harmdiff/parallel.hpp"
#include "harmdiff/stable_sum.hpp"

namespace harmdiff {

void QuadratureSpec::validate() const {
    if (radial_nodes < 4 || angular_nodes < 4 || contour_nodes < 4) {
        throw std::invalid_argument("QuadratureSpec: all node counts must be >= 4");
    }
}

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n must be positive");
    std::vector<double> nodes(n);
    std::vector<double> weights(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Tricomi initial guess, then Newton on P_n.
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) {
                // One polishing step after convergence.
                p0 = 1.0;
                p1 = x;
                for (int k = 2; k <= n; ++k) {
                    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (x * p1 - p0) / (x * x - 1.0);
                x -= p1 / dp;
                break;
            }
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) nodes[n / 2] = 0.0;
    return {nodes, weights};
}

double contour_period(const LaurentSeries& series, double radius,
                      const QuadratureSpec& spec) {
    spec.validate();
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw std::invalid_argument("contour_period: radius must be positive and finite");
    }
    const int n = spec.contour_nodes;
    StableSum sum;
    for (int j = 0; j < n; ++j) {
        const double theta = kTwoPi * j / n;
        const Complex z = radius * Complex(std::cos(theta), std::sin(theta));
        // Re(f(z) dz) with dz = i z dtheta.
        const Complex fz = eval(series, z);
        sum.add((Complex(0.0, 1.0) * z * fz).real());
    }
    return sum.result() * kTwoPi / n;
}

double annulus_norm_sq(const LaurentSeries& series, const Annulus& annulus,
                       const QuadratureSpec& spec) {
    spec.validate();
    const auto [nodes, weights] = gauss_legendre(spec.radial_nodes);
    const int m = spec.angular_nodes;
    const double lo = annulus.rho;
    const double hw = 0.5 * (1.0 - lo);
    std::vector<double> line_integrals(nodes.size());
    parallel_for(static_cast<int>(nodes.size()), worker_count(), [&](int i) {
        const double r = lo + hw * (nodes[static_cast<size_t>(i)] + 1.0);
        StableSum line;
        for (int j = 0; j < m; ++j) {
            const double theta = kTwoPi * j / m;
            const Complex z = r * Complex(std::cos(theta), std::sin(theta));
            line.add(std::norm(eval(series, z)));
        }
        line_integrals[static_cast<size_t>(i)] =
            weights[static_cast<size_t>(i)] * r * line.result();
    });
    StableSum total;
    for (double v : line_integrals) total.add(v);
    return total.result() * hw * kTwoPi / m;
}

double cusp_band_norm_sq(const LaurentSeries& series, const CuspBand& band,
                         const QuadratureSpec& spec) {
    spec.validate();
    if (std::isinf(band.r_hi)) {
        throw std::invalid_argument("cusp_band_norm_sq: band must be finite");
    }
    const auto [nodes, weights] = gauss_legendre(spec.radial_nodes);
    const int m = spec.angular_nodes;
    const double hw = 0.5 * band.length();
    const double mid = 0.5 * (band.r_lo + band.r_hi);
    std::vector<double> line_integrals(nodes.size());
    parallel_for(static_cast<int>(nodes.size()), worker_count(), [&](int i) {
        const double r = mid + hw * nodes[static_cast<size_t>(i)];
        StableSum line;
        for (int j = 0; j < m; ++j) {
            const Complex z = disk_from_cusp(CuspPoint(r, static_cast<double>(j) / m));
            const Complex fz = eval(series, z) * z;
            // Flat-cylinder density of the pulled-back form.
            line.add(kTwoPi * kTwoPi * std::norm(fz));
        }
        line_integrals[static_cast<size_t>(i)] =
            weights[static_cast<size_t>(i)] * line.result();
    });
    StableSum total;
    for (double v : line_integrals) total.add(v);
    return total.result() * hw / m;
}

Eigen::MatrixXd grid_exterior_derivative(const GriddedForm& form) {
    const int nr = form.n_r();
    const int nt = form.n_t();
    if (nr < 3) {
        throw std::invalid_argument("grid_exterior_derivative: need at least 3 r rows");
    }
    const double dr = form.dr();
    const double dt = form.dt();
    const Eigen::MatrixXd& wr = form.comp_r();
    const Eigen::MatrixXd& wt = form.comp_t();
    Eigen::MatrixXd curl(nr, nt);
    for (int i = 0; i < nr; ++i) {
        for (int j = 0; j < nt; ++j) {
            double d_r;
            if (i == 0) {
                d_r = (-3.0 * wt(0, j) + 4.0 * wt(1, j) - wt(2, j)) / (2.0 * dr);
            } else if (i == nr - 1) {
                d_r = (3.0 * wt(nr - 1, j) - 4.0 * wt(nr - 2, j) + wt(nr - 3, j)) / (2.0 * dr);
            } else {
                d_r = (wt(i + 1, j) - wt(i - 1, j)) / (2.0 * dr);
            }
            const int jp = (j + 1) % nt;
            const int jm = (j + nt - 1) % nt;
            const double d_t = (wr(i, jp) - wr(i, jm)) / (2.0 * dt);
            curl(i, j) = d_r - d_t;
        }
    }
    return curl;
}

} // namespace harmdiff
