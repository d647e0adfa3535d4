#include "harmdiff/hodge_min.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace harmdiff {

namespace {

// Real coordinates: x[2k] = Re a_n, x[2k+1] = Im a_n with n = n_min + k.
// norm_sq = sum w_n (Re^2 + Im^2), so the Hessian is 2*diag(w).
Eigen::VectorXd norm_weights(const MinimizationProblem& problem) {
    const int dim = problem.n_max - problem.n_min + 1;
    Eigen::VectorXd w(dim);
    for (int k = 0; k < dim; ++k) {
        w[k] = term_norm_sq(problem.n_min + k, Complex(1.0, 0.0), problem.annulus);
    }
    return w;
}

int im_index(const MinimizationProblem& problem, int n) {
    return 2 * (n - problem.n_min) + 1;
}

} // namespace

MinimizationProblem::MinimizationProblem(double p_, Annulus annulus_, int n_min_,
                                         int n_max_)
    : p(p_), annulus(annulus_), n_min(n_min_), n_max(n_max_) {
    if (n_min > n_max) {
        throw std::invalid_argument("MinimizationProblem: n_min must not exceed n_max");
    }
    if (!(n_min <= -1 && -1 <= n_max)) {
        throw std::invalid_argument(
            "MinimizationProblem: window must contain n = -1 (period constraint "
            "infeasible otherwise)");
    }
    if (!std::isfinite(p)) {
        throw std::invalid_argument("MinimizationProblem: p must be finite");
    }
}

LaurentSeries minimize_in_class(const MinimizationProblem& problem) {
    const Eigen::VectorXd w = norm_weights(problem);
    const int dim = static_cast<int>(w.size());
    const int nvars = 2 * dim;
    if (!w.allFinite()) {
        throw std::overflow_error(
            "minimize_in_class: a window weight overflows on this annulus");
    }

    // KKT system [H  A^T; A  0] [x; lambda] = [0; p] with H = 2*diag(w)
    // and the single constraint row A = -2*pi * e_{Im a_{-1}}.
    Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(nvars + 1, nvars + 1);
    for (int k = 0; k < dim; ++k) {
        kkt(2 * k, 2 * k) = 2.0 * w[k];
        kkt(2 * k + 1, 2 * k + 1) = 2.0 * w[k];
    }
    const int ic = im_index(problem, -1);
    kkt(nvars, ic) = -kTwoPi;
    kkt(ic, nvars) = -kTwoPi;
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(nvars + 1);
    rhs[nvars] = problem.p;

    // Symmetric equilibration: deep annuli spread the weights over
    // hundreds of orders of magnitude, which would defeat the rank
    // handling of any pivoted factorization.
    Eigen::VectorXd scale(nvars + 1);
    for (int i = 0; i <= nvars; ++i) {
        const double row_max = kkt.row(i).cwiseAbs().maxCoeff();
        scale[i] = 1.0 / std::sqrt(row_max);
    }
    const Eigen::MatrixXd balanced = scale.asDiagonal() * kkt * scale.asDiagonal();
    const Eigen::VectorXd b = scale.asDiagonal() * rhs;
    const auto qr = balanced.colPivHouseholderQr();
    Eigen::VectorXd y = qr.solve(b);
    // One step of iterative refinement clears the residual noise that the
    // huge weight spread would otherwise leave in the flat coordinates.
    y += qr.solve((b - balanced * y).eval());
    const Eigen::VectorXd sol = scale.asDiagonal() * y;

    std::vector<Complex> coeffs(static_cast<size_t>(dim));
    for (int k = 0; k < dim; ++k) {
        coeffs[static_cast<size_t>(k)] = Complex(sol[2 * k], sol[2 * k + 1]);
    }
    return LaurentSeries(problem.n_min, std::move(coeffs));
}

double projected_gradient_norm(const MinimizationProblem& problem,
                               const LaurentSeries& series) {
    if (series.n_min() < problem.n_min || series.n_max() > problem.n_max) {
        throw std::invalid_argument(
            "projected_gradient_norm: series window exceeds the problem window");
    }
    const Eigen::VectorXd w = norm_weights(problem);
    const int dim = static_cast<int>(w.size());
    Eigen::VectorXd grad(2 * dim);
    for (int k = 0; k < dim; ++k) {
        const Complex a = series.coeff(problem.n_min + k);
        grad[2 * k] = 2.0 * w[k] * a.real();
        grad[2 * k + 1] = 2.0 * w[k] * a.imag();
    }
    // The constraint normal is the Im a_{-1} axis; projection just
    // removes that component.
    grad[im_index(problem, -1)] = 0.0;
    return grad.norm();
}

double gradient_fd_max_error(const MinimizationProblem& problem,
                             const LaurentSeries& series, double step) {
    const Eigen::VectorXd w = norm_weights(problem);
    const int dim = static_cast<int>(w.size());
    const Annulus& ann = problem.annulus;

    std::vector<Complex> base(static_cast<size_t>(dim));
    for (int k = 0; k < dim; ++k) base[static_cast<size_t>(k)] = series.coeff(problem.n_min + k);

    const auto norm_at = [&](const std::vector<Complex>& c) {
        return norm_sq(LaurentSeries(problem.n_min, c), ann);
    };

    double worst = 0.0;
    for (int k = 0; k < dim; ++k) {
        for (int part = 0; part < 2; ++part) {
            const Complex a = base[static_cast<size_t>(k)];
            const double analytic =
                2.0 * w[k] * (part == 0 ? a.real() : a.imag());
            std::vector<Complex> up = base;
            std::vector<Complex> dn = base;
            const Complex delta = part == 0 ? Complex(step, 0.0) : Complex(0.0, step);
            up[static_cast<size_t>(k)] += delta;
            dn[static_cast<size_t>(k)] -= delta;
            const double fd = (norm_at(up) - norm_at(dn)) / (2.0 * step);
            const double scale = std::max({1.0, std::abs(analytic), std::abs(fd)});
            worst = std::max(worst, std::abs(fd - analytic) / scale);
        }
    }
    return worst;
}

std::pair<double, double> band_minimality_check(double p, const CuspBand& band,
                                                const LaurentSeries& competitor) {
    if (std::isinf(band.r_hi)) {
        throw std::invalid_argument("band_minimality_check: band must be finite");
    }
    const double mismatch = std::abs(period(competitor) - p);
    if (mismatch > kTwoPi * zero_tolerance(competitor)) {
        throw std::invalid_argument(
            "band_minimality_check: competitor period does not match p");
    }
    const double flat = band_norm_sq(dt_series(p), band);
    const double other = band_norm_sq(competitor, band);
    return {flat, other};
}

} // namespace harmdiff
