#pragma once

#include <Eigen/Dense>

#include "harmdiff/laurent.hpp"

namespace harmdiff {

/// A real 1-form omega = comp_r dr + comp_t dt sampled on a uniform
/// (r, t) cusp grid. r runs over [r_lo, r_hi] inclusive (n_r rows);
/// t runs over {0, 1/n_t, ..., (n_t-1)/n_t}, periodic.
class GriddedForm {
public:
    GriddedForm(double r_lo, double r_hi, int n_r, int n_t);

    double r_lo() const { return r_lo_; }
    double r_hi() const { return r_hi_; }
    int n_r() const { return n_r_; }
    int n_t() const { return n_t_; }

    double dr() const { return (r_hi_ - r_lo_) / (n_r_ - 1); }
    double dt() const { return 1.0 / n_t_; }
    double r_value(int i) const { return r_lo_ + i * dr(); }
    double t_value(int j) const { return static_cast<double>(j) / n_t_; }

    Eigen::MatrixXd& comp_r() { return comp_r_; }
    Eigen::MatrixXd& comp_t() { return comp_t_; }
    const Eigen::MatrixXd& comp_r() const { return comp_r_; }
    const Eigen::MatrixXd& comp_t() const { return comp_t_; }

private:
    double r_lo_;
    double r_hi_;
    int n_r_;
    int n_t_;
    Eigen::MatrixXd comp_r_; // n_r x n_t
    Eigen::MatrixXd comp_t_;
};

/// Samples the pullback of Re(f dz) to cusp coordinates:
/// comp_r = -2*pi*Re(f(z) z), comp_t = -2*pi*Im(f(z) z) at
/// z = disk_from_cusp(r, t).
GriddedForm sample_pullback(const LaurentSeries& series, double r_lo, double r_hi,
                            int n_r, int n_t);

/// Trapezoid line integral of the form over the horocycle r = r_value(row)
/// (exact for trigonometric polynomials below the aliasing degree).
double horocycle_period(const GriddedForm& form, int row);

/// L2 norm squared of the form over grid rows [row_lo, row_hi]:
/// composite trapezoid in r, exact uniform rule in t, on the flat
/// cylinder metric (the conformally invariant norm).
double grid_norm_sq(const GriddedForm& form, int row_lo, int row_hi);

} // namespace harmdiff
