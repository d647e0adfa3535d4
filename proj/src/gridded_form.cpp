#include "harmdiff/gridded_form.hpp"

#include <cmath>
#include <stdexcept>

#include "harmdiff/cusp.hpp"
#include "harmdiff/stable_sum.hpp"

namespace harmdiff {

GriddedForm::GriddedForm(double r_lo, double r_hi, int n_r, int n_t)
    : r_lo_(r_lo), r_hi_(r_hi), n_r_(n_r), n_t_(n_t) {
    if (!(std::isfinite(r_lo) && std::isfinite(r_hi) && r_lo < r_hi)) {
        throw std::invalid_argument("GriddedForm: need finite r_lo < r_hi");
    }
    if (n_r < 2 || n_t < 2) {
        throw std::invalid_argument("GriddedForm: need at least 2 nodes per direction");
    }
    comp_r_ = Eigen::MatrixXd::Zero(n_r, n_t);
    comp_t_ = Eigen::MatrixXd::Zero(n_r, n_t);
}

GriddedForm sample_pullback(const LaurentSeries& series, double r_lo, double r_hi,
                            int n_r, int n_t) {
    GriddedForm form(r_lo, r_hi, n_r, n_t);
    for (int i = 0; i < n_r; ++i) {
        const double r = form.r_value(i);
        for (int j = 0; j < n_t; ++j) {
            const Complex z = disk_from_cusp(CuspPoint(r, form.t_value(j)));
            const Complex fz = eval(series, z) * z;
            form.comp_r()(i, j) = -kTwoPi * fz.real();
            form.comp_t()(i, j) = -kTwoPi * fz.imag();
        }
    }
    return form;
}

double horocycle_period(const GriddedForm& form, int row) {
    if (row < 0 || row >= form.n_r()) {
        throw std::out_of_range("horocycle_period: row outside the grid");
    }
    StableSum s;
    for (int j = 0; j < form.n_t(); ++j) s.add(form.comp_t()(row, j));
    return s.result() / form.n_t();
}

double grid_norm_sq(const GriddedForm& form, int row_lo, int row_hi) {
    if (row_lo < 0 || row_hi >= form.n_r() || row_lo >= row_hi) {
        throw std::out_of_range("grid_norm_sq: bad row range");
    }
    StableSum total;
    for (int i = row_lo; i <= row_hi; ++i) {
        StableSum line;
        for (int j = 0; j < form.n_t(); ++j) {
            const double u = form.comp_r()(i, j);
            const double v = form.comp_t()(i, j);
            line.add(u * u + v * v);
        }
        const double w = (i == row_lo || i == row_hi) ? 0.5 : 1.0;
        total.add(w * line.result() / form.n_t());
    }
    return total.result() * form.dr();
}

} // namespace harmdiff
