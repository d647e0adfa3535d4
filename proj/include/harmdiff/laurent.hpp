#pragma once

#include <complex>
#include <vector>

namespace harmdiff {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

/// A_{rho,1} = { rho < |z| < 1 }, the disk-coordinate image of a finite
/// cusp band with mouth at |z| = 1.
struct Annulus {
    double rho;

    explicit Annulus(double rho_);
};

/// Finite window of Laurent coefficients a_n, n in [n_min, n_max].
/// Represents the holomorphic function f(z) = sum a_n z^n behind the
/// harmonic differential Re(f(z) dz). Coefficients must be finite.
class LaurentSeries {
public:
    /// The zero series, window [0, 0].
    LaurentSeries();

    LaurentSeries(int n_min, std::vector<Complex> coeffs);

    static LaurentSeries zero() { return LaurentSeries(); }

    /// Single-term series a_n z^n.
    static LaurentSeries single(int n, Complex a);

    int n_min() const { return n_min_; }
    int n_max() const { return n_min_ + static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }

    /// Coefficient a_n; zero outside the window.
    Complex coeff(int n) const;

    bool is_zero() const;
    double max_abs_coeff() const;

    /// Sum of |a_n|^2 over the window.
    double sum_sq_coeffs() const;

    /// Canonical form: trims exact-zero edge coefficients so that
    /// a_{n_min} != 0 and a_{n_max} != 0, unless identically zero.
    LaurentSeries normalized() const;

private:
    int n_min_;
    std::vector<Complex> coeffs_;
};

/// Scale-aware threshold below which a coefficient (or the imaginary part
/// feeding an exactness precondition) counts as zero:
/// 1e-12 * (1 + max |a_n|).
double zero_tolerance(const LaurentSeries& series);

/// Pointwise sum a_n z^n over the window, ascending n, compensated
/// accumulation. Requires z != 0 when the window has negative powers.
Complex eval(const LaurentSeries& series, Complex z);

/// Period of Re(f dz) on the cycle surrounding the origin:
/// -2*pi*Im(a_{-1}).
double period(const LaurentSeries& series);

/// L2 norm squared of a_n z^n (as the differential Re(a z^n dz)) on the
/// general annulus rho_in < |z| < rho_out. rho_in = 0 is admitted: the
/// result is +infinity when the term does not converge at the puncture.
double term_norm_sq_band(int n, Complex a, double rho_in, double rho_out);

/// Same on A_{rho,1}.
double term_norm_sq(int n, Complex a, const Annulus& annulus);

/// Sum of term norms over the window, ascending |n|, compensated.
/// Throws std::overflow_error when a term overflows on a band with
/// rho_in > 0 (deep negative powers at tiny rho).
double norm_sq_band(const LaurentSeries& series, double rho_in, double rho_out);

double norm_sq(const LaurentSeries& series, const Annulus& annulus);

/// The series of the flat-cylinder form p*dt: the single coefficient
/// a_{-1} = p/(2*pi*i). period(dt_series(p)) == p exactly.
LaurentSeries dt_series(double p);

LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries subtract(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries scale(const LaurentSeries& a, Complex c);

struct Antiderivative {
    /// F with F' matching the input on all n != -1 terms.
    LaurentSeries primitive;
    /// Real weight of the logarithmic part: the potential of the form is
    /// phi(z) = Re(F(z)) + log_coeff * ln|z|.
    double log_coeff = 0.0;
};

/// Potential construction for an exact form: requires |Im(a_{-1})| within
/// zero_tolerance (zero period). Throws std::domain_error otherwise.
Antiderivative antiderivative(const LaurentSeries& series);

} // namespace harmdiff
