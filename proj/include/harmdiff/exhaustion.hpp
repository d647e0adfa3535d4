#pragma once

#include <optional>
#include <string>
#include <vector>

#include "harmdiff/glue.hpp"
#include "harmdiff/laurent.hpp"

namespace harmdiff {

/// Norm growth of a series as the annulus deepens toward the puncture.
struct GrowthRecord {
    std::vector<double> rho_values;  // strictly decreasing, in (0,1)
    std::vector<double> norm_values; // |f|^2 on A_{rho,1}
    double p = 0.0;                  // period of the scanned series
};

enum class SingularityTag {
    RemovableModDt,  // a_{-n} = 0 for n >= 2 and Re(a_{-1}) = 0
    LogDivergent,    // excess log growth: Re(a_{-1}) != 0
    PowerDivergent,  // some a_{-n} != 0 with n >= 2
};

std::string to_string(SingularityTag tag);

struct SingularityClass {
    SingularityTag tag;
    double fitted_log_coefficient = 0.0;
    double fitted_constant = 0.0;
};

/// Closed-form norms at each rho, deepest last. Overflow from deep
/// negative powers at tiny rho propagates as std::overflow_error.
GrowthRecord growth_scan(const LaurentSeries& series, std::vector<double> rho_values);

/// Coefficient threshold below which the ground-truth predicate treats a
/// coefficient as zero.
inline constexpr double kCoeffZeroThreshold = 1e-12;

/// The exact coefficient-level class, directly readable from the series.
SingularityTag coefficient_class(const LaurentSeries& series);

/// Fit-based classification of the growth record:
///   - fit norm(rho) ~ c*ln(1/rho) + d on the deepest half of the samples;
///   - PowerDivergent when successive slope differences on the deepest
///     samples grow past the doubling-ratio threshold;
///   - else LogDivergent when c exceeds 2*pi*Im(a_{-1})^2 by more than a
///     scale-aware tolerance;
///   - else RemovableModDt.
/// Needs at least 4 samples reaching rho <= 1e-4, on a geometric grid
/// (step ratio >= sqrt(2)) for the doubling test to separate classes.
SingularityClass classify(const GrowthRecord& record, const LaurentSeries& series);

struct InequalityRecord {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0; // rhs - lhs
    bool pass = false;
};

struct InequalityReport {
    double p = 0.0;
    double a = 0.0;
    double r = 0.0;
    double R = 0.0;
    double core_constant = 0.0;
    std::vector<InequalityRecord> records;

    bool all_pass() const;
};

/// Default pass threshold for slacks; HARMDIFF_SLACK_TOL overrides.
double slack_tolerance();

/// Band-level checks of the norm-comparison chain for a form omega with
/// period p on nested cusp bands 0 <= a <= r <= R:
///   - flat-form minimality of p*dt against omega on [a,R], [r,R], [0,r];
///   - the glued form's norm over [0, r_hi] equals the flat form's
///     (both directions);
///   - the tail-absorption step that turns the chained bound into one
///     independent of R;
///   - the growth bound constants (raw core constant and the full
///     right-hand side), reported as nonnegative slacks.
/// The core term the ambient surface would contribute is modeled as a
/// supplied nonnegative constant; by default it is the glued form's norm
/// over the mouth band [-ln 2, 0].
InequalityReport inequality_suite(const LaurentSeries& omega, double p, double a,
                                  double r, double R,
                                  std::optional<double> core_constant = std::nullopt);

/// Core-band norms of the per-R constrained minimizers (window
/// [n_min, n_max], core band [-ln 2, a]); constant in R up to solver
/// tolerance.
std::vector<double> minimizing_family_core_norms(double p, double a,
                                                 const std::vector<double>& R_values,
                                                 int n_min, int n_max);

std::string report_to_csv(const InequalityReport& report);

} // namespace harmdiff
