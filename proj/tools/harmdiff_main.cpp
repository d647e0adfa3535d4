// harmdiff: harmonic differentials on annuli and cusp bands via Laurent
// series. Closed-form periods and norms, an independent quadrature oracle,
// constrained norm minimization, the cutoff-glue construction, growth
// scans with singularity classification, and a norm-inequality verifier.

#include <cmath>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "harmdiff/cusp.hpp"
#include "harmdiff/exhaustion.hpp"
#include "harmdiff/glue.hpp"
#include "harmdiff/hodge_min.hpp"
#include "harmdiff/laurent.hpp"
#include "harmdiff/num_format.hpp"
#include "harmdiff/quadrature.hpp"
#include "harmdiff/random_forms.hpp"
#include "harmdiff/serialize.hpp"

namespace {

using namespace harmdiff;

constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitVerification = 4;

void emit_error(int code, const std::string& type, const std::string& message) {
    std::cerr << "{\"error\":{\"code\":" << code << ",\"type\":\"" << type
              << "\",\"message\":\"" << message << "\"}}\n";
}

struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::pair<int, int> parse_window(const std::string& text) {
    const auto pos = text.find(':');
    if (pos == std::string::npos) {
        throw ParseError("window must look like n_min:n_max");
    }
    try {
        const int lo = std::stoi(text.substr(0, pos));
        const int hi = std::stoi(text.substr(pos + 1));
        return {lo, hi};
    } catch (const std::exception&) {
        throw ParseError("window bounds must be integers");
    }
}

// "x:y" or "x:y:count": log-spaced from x down to y; the default count
// steps by decades.
std::vector<double> parse_rho_list(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() != 2 && parts.size() != 3) {
        throw ParseError("rho list must look like x:y or x:y:count");
    }
    double x = 0.0, y = 0.0;
    int count = 0;
    try {
        x = std::stod(parts[0]);
        y = std::stod(parts[1]);
        count = parts.size() == 3 ? std::stoi(parts[2])
                                  : static_cast<int>(std::lround(std::log10(x / y))) + 1;
    } catch (const std::exception&) {
        throw ParseError("rho list entries must be numeric");
    }
    if (!(x > y && y > 0.0 && x < 1.0) || count < 2) {
        throw ParseError("rho list needs 0 < y < x < 1 and count >= 2");
    }
    std::vector<double> rhos(static_cast<size_t>(count));
    const double step = (std::log(y) - std::log(x)) / (count - 1);
    for (int k = 0; k < count; ++k) {
        rhos[static_cast<size_t>(k)] = std::exp(std::log(x) + k * step);
    }
    rhos.front() = x;
    rhos.back() = y;
    return rhos;
}

void sink_output(const std::string& text, const std::string& out_path) {
    std::cout << text;
    if (!out_path.empty()) write_file(out_path, text);
}

int run_norm(const std::string& series_path, double rho, int radial, int angular,
             const std::string& out_path) {
    const LaurentSeries series = series_from_json(read_file(series_path));
    const Annulus annulus(rho);
    QuadratureSpec spec;
    spec.radial_nodes = radial;
    spec.angular_nodes = angular;
    const double closed = norm_sq(series, annulus);
    const double oracle = annulus_norm_sq(series, annulus, spec);
    const double gap = std::abs(closed - oracle) / std::max(1e-300, std::abs(closed));
    std::ostringstream os;
    os << "closed_form=" << format_double(closed) << "\n"
       << "oracle=" << format_double(oracle) << "\n"
       << "relative_gap=" << format_double(gap) << "\n";
    sink_output(os.str(), out_path);
    return 0;
}

int run_period(const std::string& series_path, double radius, int nodes,
               const std::string& out_path) {
    const LaurentSeries series = series_from_json(read_file(series_path));
    QuadratureSpec spec;
    spec.contour_nodes = nodes;
    const double closed = period(series);
    const double contour = contour_period(series, radius, spec);
    std::ostringstream os;
    os << "closed_form=" << format_double(closed) << "\n"
       << "contour=" << format_double(contour) << "\n"
       << "gap=" << format_double(std::abs(closed - contour)) << "\n";
    sink_output(os.str(), out_path);
    return 0;
}

int run_minimize(double p, double rho, const std::string& window,
                 const std::string& out_path) {
    const auto [lo, hi] = parse_window(window);
    const MinimizationProblem problem(p, Annulus(rho), lo, hi);
    const LaurentSeries minimizer = minimize_in_class(problem);
    const std::string doc = series_to_json(minimizer);
    if (!out_path.empty()) write_file(out_path, doc);
    std::ostringstream os;
    os << "norm_sq=" << format_double(norm_sq(minimizer, problem.annulus)) << "\n"
       << "projected_gradient=" << format_double(projected_gradient_norm(problem, minimizer))
       << "\n"
       << "period=" << format_double(period(minimizer)) << "\n";
    if (out_path.empty()) os << doc;
    std::cout << os.str();
    return 0;
}

int run_glue(const std::string& series_path, double p, double r_hi, int n_r, int n_t,
             const std::string& out_path) {
    const LaurentSeries omega = series_from_json(read_file(series_path));
    GlueGrid grid;
    grid.r_hi = r_hi;
    grid.n_r = n_r;
    grid.n_t = n_t;
    const GriddedForm alpha = build_alpha(omega, p, grid);
    if (!out_path.empty()) write_file(out_path, gridded_form_to_json(alpha));
    const Eigen::MatrixXd curl = grid_exterior_derivative(alpha);
    std::ostringstream os;
    os << "period_max_deviation=" << format_double(alpha_period_check(alpha, p)) << "\n"
       << "curl_sup=" << format_double(curl.cwiseAbs().maxCoeff()) << "\n";
    std::cout << os.str();
    return 0;
}

int run_scan(const std::string& series_path, const std::string& rho_list,
             const std::string& out_path) {
    const LaurentSeries series = series_from_json(read_file(series_path));
    const GrowthRecord record = growth_scan(series, parse_rho_list(rho_list));
    const SingularityClass cls = classify(record, series);
    std::ostringstream csv;
    csv << "rho,norm_sq\n";
    for (size_t k = 0; k < record.rho_values.size(); ++k) {
        csv << format_double(record.rho_values[k]) << ","
            << format_double(record.norm_values[k]) << "\n";
    }
    if (!out_path.empty()) write_file(out_path, csv.str());
    std::ostringstream os;
    os << "tag=" << to_string(cls.tag) << "\n"
       << "fitted_log_coefficient=" << format_double(cls.fitted_log_coefficient) << "\n"
       << "fitted_constant=" << format_double(cls.fitted_constant) << "\n"
       << "period=" << format_double(record.p) << "\n";
    if (out_path.empty()) os << csv.str();
    std::cout << os.str();
    return 0;
}

int run_verify(double p, const std::string& window, unsigned seed, int trials,
               const std::string& out_path) {
    const auto [lo, hi] = parse_window(window);
    if (!(lo <= -1 && -1 <= hi)) {
        throw std::invalid_argument("verify: window must contain -1");
    }
    std::mt19937 rng(seed);
    std::ostringstream all;
    all << "a,r,R,form,name,lhs,rhs,slack,pass\n";
    bool ok = true;
    const double tol = slack_tolerance();
    for (double a : {0.0, 1.0}) {
        for (double r : {1.0, 2.0}) {
            for (double R : {2.0, 4.0, 8.0}) {
                for (int trial = 0; trial < trials; ++trial) {
                    const LaurentSeries omega = with_period(
                        band_normalized_series(rng, lo, hi, kCuspMouthR, R), p);
                    const InequalityReport report =
                        inequality_suite(omega, p, a, r, R);
                    ok = ok && report.all_pass();
                    for (const InequalityRecord& rec : report.records) {
                        all << format_double(a) << "," << format_double(r) << ","
                            << format_double(R) << "," << trial << "," << rec.name << ","
                            << format_double(rec.lhs) << "," << format_double(rec.rhs)
                            << "," << format_double(rec.slack) << ","
                            << (rec.pass ? "true" : "false") << "\n";
                    }
                }
            }
        }
    }
    // Core-band norms of the constrained minimizers must not move with R.
    for (double a : {0.0, 1.0}) {
        const std::vector<double> norms =
            minimizing_family_core_norms(p, a, {2.0, 4.0, 8.0}, std::max(lo, -3), hi);
        double spread = 0.0;
        for (double v : norms) {
            for (double w : norms) spread = std::max(spread, std::abs(v - w));
        }
        const bool pass = spread <= tol;
        ok = ok && pass;
        all << format_double(a) << ",,,-,minimizer_core_constancy,"
            << format_double(norms.front()) << "," << format_double(norms.back()) << ","
            << format_double(spread) << "," << (pass ? "true" : "false") << "\n";
    }
    if (!out_path.empty()) write_file(out_path, all.str());
    std::cout << (ok ? "verify=pass\n" : "verify=fail\n");
    if (out_path.empty()) std::cout << all.str();
    if (!ok) throw VerificationFailure("negative slack beyond tolerance");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Harmonic differentials on annuli and cusp bands: closed-form periods "
        "and norms with an independent quadrature oracle, constrained norm "
        "minimization, the cutoff-glue construction, growth scans, and an "
        "inequality verifier."};
    app.require_subcommand(1);

    std::string series_path, out_path, window = "-10:10", rho_list = "1e-1:1e-6";
    double rho = 0.5, radius = 0.5, p = 1.0, r_hi = 0.5;
    int radial = 64, angular = 256, contour = 256, n_r = 129, n_t = 128, trials = 5;
    unsigned seed = 20260801;

    auto* norm_cmd = app.add_subcommand(
        "norm", "Closed-form and quadrature norms of a series on A_{rho,1}");
    norm_cmd->add_option("--series", series_path, "series JSON file")->required();
    norm_cmd->add_option("--rho", rho, "inner radius in (0,1)")->required();
    norm_cmd->add_option("--radial", radial, "radial quadrature nodes");
    norm_cmd->add_option("--angular", angular, "angular quadrature nodes");
    norm_cmd->add_option("--out", out_path, "also write the report here");

    auto* period_cmd =
        app.add_subcommand("period", "Closed-form and contour periods of a series");
    period_cmd->add_option("--series", series_path, "series JSON file")->required();
    period_cmd->add_option("--radius", radius, "contour radius");
    period_cmd->add_option("--contour-nodes", contour, "contour nodes");
    period_cmd->add_option("--out", out_path, "also write the report here");

    auto* min_cmd = app.add_subcommand(
        "minimize", "Norm minimizer with prescribed period over a coefficient window");
    min_cmd->add_option("--p", p, "prescribed period")->required();
    min_cmd->add_option("--rho", rho, "inner radius in (0,1)")->required();
    min_cmd->add_option("--window", window, "coefficient window n_min:n_max");
    min_cmd->add_option("--out", out_path, "write the minimizer series here");

    auto* glue_cmd = app.add_subcommand(
        "glue", "Glue a mouth form to the flat form past the cutoff zone");
    glue_cmd->add_option("--series", series_path, "series JSON file")->required();
    glue_cmd->add_option("--p", p, "period of the series")->required();
    glue_cmd->add_option("--r-hi", r_hi, "grid upper depth (must be > 0)");
    glue_cmd->add_option("--nr", n_r, "grid rows");
    glue_cmd->add_option("--nt", n_t, "grid columns");
    glue_cmd->add_option("--out", out_path, "write the sampled form here");

    auto* scan_cmd = app.add_subcommand(
        "scan", "Norm growth scan toward the puncture with classification");
    scan_cmd->add_option("--series", series_path, "series JSON file")->required();
    scan_cmd->add_option("--rho-list", rho_list, "log-spaced list x:y or x:y:count");
    scan_cmd->add_option("--out", out_path, "write the growth CSV here");

    auto* verify_cmd = app.add_subcommand(
        "verify", "Run the band inequality suite over the standard sweep");
    verify_cmd->add_option("--p", p, "period");
    verify_cmd->add_option("--window", window, "coefficient window n_min:n_max");
    verify_cmd->add_option("--seed", seed, "random seed");
    verify_cmd->add_option("--trials", trials, "forms per sweep tuple");
    verify_cmd->add_option("--out", out_path, "write the record CSV here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        emit_error(kExitUsage, "usage", e.what());
        return kExitUsage;
    }

    try {
        if (norm_cmd->parsed()) return run_norm(series_path, rho, radial, angular, out_path);
        if (period_cmd->parsed()) return run_period(series_path, radius, contour, out_path);
        if (min_cmd->parsed()) return run_minimize(p, rho, window, out_path);
        if (glue_cmd->parsed()) return run_glue(series_path, p, r_hi, n_r, n_t, out_path);
        if (scan_cmd->parsed()) return run_scan(series_path, rho_list, out_path);
        if (verify_cmd->parsed()) return run_verify(p, window, seed, trials, out_path);
    } catch (const ParseError& e) {
        emit_error(kExitParse, "parse", e.what());
        return kExitParse;
    } catch (const VerificationFailure& e) {
        emit_error(kExitVerification, "verification", e.what());
        return kExitVerification;
    } catch (const std::invalid_argument& e) {
        emit_error(kExitPrecondition, "precondition", e.what());
        return kExitPrecondition;
    } catch (const std::domain_error& e) {
        emit_error(kExitPrecondition, "precondition", e.what());
        return kExitPrecondition;
    } catch (const std::overflow_error& e) {
        emit_error(kExitPrecondition, "overflow", e.what());
        return kExitPrecondition;
    } catch (const std::exception& e) {
        emit_error(kExitPrecondition, "error", e.what());
        return kExitPrecondition;
    }
    return 0;
}
