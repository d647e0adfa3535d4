#include "harmdiff/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "harmdiff/stable_sum.hpp"

namespace harmdiff {

namespace {

bool finite(Complex c) {
    return std::isfinite(c.real()) && std::isfinite(c.imag());
}

// z^n by binary exponentiation; 0^0 = 1.
Complex pow_int(Complex z, int n) {
    if (n == 0) return Complex(1.0, 0.0);
    const bool invert = n < 0;
    unsigned long long e = invert ? -static_cast<long long>(n) : n;
    Complex base = z;
    Complex acc(1.0, 0.0);
    while (e > 0) {
        if (e & 1ULL) acc *= base;
        base *= base;
        e >>= 1ULL;
    }
    return invert ? Complex(1.0, 0.0) / acc : acc;
}

} // namespace

Annulus::Annulus(double rho_) : rho(rho_) {
    if (!(rho > 0.0 && rho < 1.0)) {
        throw std::invalid_argument("Annulus: rho must lie in (0,1)");
    }
}

LaurentSeries::LaurentSeries() : n_min_(0), coeffs_{Complex(0.0, 0.0)} {}

LaurentSeries::LaurentSeries(int n_min, std::vector<Complex> coeffs)
    : n_min_(n_min), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw std::invalid_argument("LaurentSeries: empty coefficient list");
    }
    for (Complex c : coeffs_) {
        if (!finite(c)) {
            throw std::invalid_argument("LaurentSeries: non-finite coefficient");
        }
    }
}

LaurentSeries LaurentSeries::single(int n, Complex a) {
    return LaurentSeries(n, {a});
}

Complex LaurentSeries::coeff(int n) const {
    if (n < n_min_ || n > n_max()) return Complex(0.0, 0.0);
    return coeffs_[static_cast<size_t>(n - n_min_)];
}

bool LaurentSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](Complex c) { return c == Complex(0.0, 0.0); });
}

double LaurentSeries::max_abs_coeff() const {
    double m = 0.0;
    for (Complex c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

double LaurentSeries::sum_sq_coeffs() const {
    StableSum s;
    for (Complex c : coeffs_) s.add(std::norm(c));
    return s.result();
}

LaurentSeries LaurentSeries::normalized() const {
    size_t lo = 0;
    size_t hi = coeffs_.size();
    while (lo < hi && coeffs_[lo] == Complex(0.0, 0.0)) ++lo;
    while (hi > lo && coeffs_[hi - 1] == Complex(0.0, 0.0)) --hi;
    if (lo == hi) return zero();
    return LaurentSeries(n_min_ + static_cast<int>(lo),
                         std::vector<Complex>(coeffs_.begin() + lo, coeffs_.begin() + hi));
}

double zero_tolerance(const LaurentSeries& series) {
    return 1e-12 * (1.0 + series.max_abs_coeff());
}

Complex eval(const LaurentSeries& series, Complex z) {
    if (series.n_min() < 0 && z == Complex(0.0, 0.0)) {
        throw std::domain_error("eval: z = 0 with negative powers present");
    }
    StableSum re;
    StableSum im;
    Complex zn = pow_int(z, series.n_min());
    for (Complex a : series.coeffs()) {
        const Complex term = a * zn;
        re.add(term.real());
        im.add(term.imag());
        zn *= z;
    }
    return Complex(re.result(), im.result());
}

double period(const LaurentSeries& series) {
    const double p = -kTwoPi * series.coeff(-1).imag();
    return p == 0.0 ? 0.0 : p; // never surface -0
}

double term_norm_sq_band(int n, Complex a, double rho_in, double rho_out) {
    if (!(rho_in >= 0.0) || !(rho_out > rho_in)) {
        throw std::invalid_argument("term_norm_sq_band: need 0 <= rho_in < rho_out");
    }
    const double a_sq = std::norm(a);
    if (a_sq == 0.0) return 0.0;
    if (n == -1) {
        return kTwoPi * a_sq * std::log(rho_out / rho_in);
    }
    if (rho_in == 0.0 && n < -1) return INFINITY;
    const double e = 2.0 * (n + 1);
    return kTwoPi * a_sq * (std::pow(rho_out, e) - std::pow(rho_in, e)) / e;
}

double term_norm_sq(int n, Complex a, const Annulus& annulus) {
    return term_norm_sq_band(n, a, annulus.rho, 1.0);
}

double norm_sq_band(const LaurentSeries& series, double rho_in, double rho_out) {
    if (!(rho_in >= 0.0) || !(rho_out > rho_in)) {
        throw std::invalid_argument("norm_sq_band: need 0 <= rho_in < rho_out");
    }
    const int lo = series.n_min();
    const int hi = series.n_max();
    const int reach = std::max(std::abs(lo), std::abs(hi));
    StableSum sum;
    bool infinite = false;
    const auto accumulate = [&](int n) {
        if (n < lo || n > hi) return;
        const double t = term_norm_sq_band(n, series.coeff(n), rho_in, rho_out);
        if (std::isinf(t)) {
            if (rho_in > 0.0) {
                throw std::overflow_error(
                    "norm_sq_band: term overflows the largest representable real");
            }
            infinite = true;
            return;
        }
        sum.add(t);
    };
    // Ascending |n| so the accumulation order is pinned.
    accumulate(0);
    for (int k = 1; k <= reach; ++k) {
        accumulate(-k);
        accumulate(k);
    }
    if (infinite) return INFINITY;
    const double r = sum.result();
    if (std::isinf(r) && rho_in > 0.0) {
        throw std::overflow_error("norm_sq_band: sum overflows the largest representable real");
    }
    return r;
}

double norm_sq(const LaurentSeries& series, const Annulus& annulus) {
    return norm_sq_band(series, annulus.rho, 1.0);
}

LaurentSeries dt_series(double p) {
    if (p == 0.0) return LaurentSeries::zero();
    if (!std::isfinite(p)) throw std::invalid_argument("dt_series: p must be finite");
    // Pin the period round trip where the rounding lattice allows it:
    // nudge the coefficient until -2*pi*im reproduces p (possible unless
    // the product lattice skips p, in which case stay within one ulp).
    double im = -p / kTwoPi;
    if (-kTwoPi * im != p) {
        double up = im;
        double down = im;
        for (int k = 0; k < 2; ++k) {
            up = std::nextafter(up, INFINITY);
            down = std::nextafter(down, -INFINITY);
            if (-kTwoPi * up == p) {
                im = up;
                break;
            }
            if (-kTwoPi * down == p) {
                im = down;
                break;
            }
        }
    }
    return LaurentSeries::single(-1, Complex(0.0, im));
}

LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b) {
    const int lo = std::min(a.n_min(), b.n_min());
    const int hi = std::max(a.n_max(), b.n_max());
    std::vector<Complex> coeffs(static_cast<size_t>(hi - lo + 1));
    for (int n = lo; n <= hi; ++n) {
        coeffs[static_cast<size_t>(n - lo)] = a.coeff(n) + b.coeff(n);
    }
    return LaurentSeries(lo, std::move(coeffs));
}

LaurentSeries subtract(const LaurentSeries& a, const LaurentSeries& b) {
    return add(a, scale(b, Complex(-1.0, 0.0)));
}

LaurentSeries scale(const LaurentSeries& a, Complex c) {
    std::vector<Complex> coeffs(a.coeffs());
    for (Complex& x : coeffs) x *= c;
    return LaurentSeries(a.n_min(), std::move(coeffs));
}

Antiderivative antiderivative(const LaurentSeries& series) {
    const Complex a_m1 = series.coeff(-1);
    if (std::abs(a_m1.imag()) > zero_tolerance(series)) {
        throw std::domain_error(
            "antiderivative: nonzero period, the form is not exact");
    }
    const int lo = series.n_min();
    const int hi = series.n_max();
    std::vector<Complex> coeffs(static_cast<size_t>(hi - lo + 1));
    for (int n = lo; n <= hi; ++n) {
        if (n == -1) continue;
        coeffs[static_cast<size_t>(n - lo)] = series.coeff(n) / static_cast<double>(n + 1);
    }
    // Primitive exponents are n+1; the n = -1 slot feeds the log weight.
    Antiderivative result;
    result.primitive = LaurentSeries(lo + 1, std::move(coeffs)).normalized();
    result.log_coeff = a_m1.real();
    return result;
}

} // namespace harmdiff
