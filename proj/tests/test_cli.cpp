#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "harmdiff/laurent.hpp"
#include "harmdiff/serialize.hpp"

namespace fs = std::filesystem;
using namespace harmdiff;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string cli_path() {
    const char* env = std::getenv("HARMDIFF_CLI");
    REQUIRE_MESSAGE(env != nullptr, "HARMDIFF_CLI must point at the binary");
    return env;
}

fs::path work_dir() {
    const fs::path dir = fs::temp_directory_path() / "harmdiff_cli_test";
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const fs::path dir = work_dir();
    const fs::path out = dir / "stdout.txt";
    const fs::path err = dir / "stderr.txt";
    const std::string cmd = env_prefix + "\"" + cli_path() + "\" " + args + " > \"" +
                            out.string() + "\" 2> \"" + err.string() + "\"";
    const int raw = std::system(cmd.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    result.out = slurp(out);
    result.err = slurp(err);
    return result;
}

fs::path write_series(const std::string& name, const LaurentSeries& series) {
    const fs::path p = work_dir() / name;
    write_file(p.string(), series_to_json(series));
    return p;
}

} // namespace

TEST_CASE("cli: minimize writes the flat-form series") {
    const fs::path out = work_dir() / "minimizer.json";
    const RunResult run = run_cli("minimize --p 6.2831853 --rho 0.5 --window -5:5 --out \"" +
                                  out.string() + "\"");
    CHECK(run.exit_code == 0);
    CHECK(run.out.find("projected_gradient=") != std::string::npos);
    const LaurentSeries got = series_from_json(slurp(out)).normalized();
    CHECK(got.n_min() == -1);
    CHECK(got.n_max() == -1);
    CHECK(std::abs(got.coeff(-1) - Complex(0, -1)) < 1e-7);
}

TEST_CASE("cli: period of the zero series") {
    const fs::path p = write_series("zero.json", LaurentSeries::zero());
    const RunResult run = run_cli("period --series \"" + p.string() + "\"");
    CHECK(run.exit_code == 0);
    CHECK(run.out.find("closed_form=0\n") != std::string::npos);
    CHECK(run.out.find("contour=0\n") != std::string::npos);
}

TEST_CASE("cli: norm agrees with its oracle") {
    const LaurentSeries s(-2, {Complex(0.4, -0.3), Complex(0, 0), Complex(1, 0),
                               Complex(0.2, 0.7)});
    const fs::path p = write_series("mixed.json", s);
    const RunResult run = run_cli("norm --series \"" + p.string() + "\" --rho 0.4");
    CHECK(run.exit_code == 0);
    const auto pos = run.out.find("relative_gap=");
    REQUIRE(pos != std::string::npos);
    CHECK(std::stod(run.out.substr(pos + 13)) < 1e-8);
}

TEST_CASE("cli: scan flags a hidden double pole") {
    const LaurentSeries s = add(dt_series(1.0), LaurentSeries::single(-2, Complex(1e-6, 0)));
    const fs::path p = write_series("pole.json", s);
    const RunResult run = run_cli("scan --series \"" + p.string() + "\" --rho-list 1e-1:1e-6");
    CHECK(run.exit_code == 0);
    CHECK(run.out.find("tag=POWER_DIVERGENT") != std::string::npos);
}

TEST_CASE("cli: glue emits a loadable grid with flat diagnostics") {
    const fs::path p = write_series("dt.json", dt_series(2.0));
    const fs::path out = work_dir() / "alpha.json";
    const RunResult run =
        run_cli("glue --series \"" + p.string() + "\" --p 2 --out \"" + out.string() + "\"");
    CHECK(run.exit_code == 0);
    CHECK(run.out.find("period_max_deviation=0\n") != std::string::npos);
    const GriddedForm alpha = gridded_form_from_json(slurp(out));
    CHECK(alpha.n_r() == 129);
    CHECK(alpha.comp_t()(alpha.n_r() - 1, 0) == 2.0);
}

TEST_CASE("cli: exit codes and machine-readable errors") {
    CHECK(run_cli("").exit_code == 1);
    CHECK(run_cli("norm --rho 0.5").exit_code == 1); // missing required --series

    const RunResult missing = run_cli("period --series /nonexistent.json");
    CHECK(missing.exit_code == 2);
    CHECK(missing.err.find("\"error\"") != std::string::npos);
    CHECK(missing.err.find("\"code\":2") != std::string::npos);

    const fs::path bad = work_dir() / "bad.json";
    write_file(bad.string(), "{not json");
    CHECK(run_cli("period --series \"" + bad.string() + "\"").exit_code == 2);

    const fs::path p = write_series("dt1.json", dt_series(1.0));
    const RunResult precond = run_cli("norm --series \"" + p.string() + "\" --rho 1.5");
    CHECK(precond.exit_code == 3);
    CHECK(precond.err.find("\"code\":3") != std::string::npos);

    // Period mismatch into the glue construction is a precondition error.
    CHECK(run_cli("glue --series \"" + p.string() + "\" --p 2").exit_code == 3);
}

TEST_CASE("cli: verify passes and reports deterministically") {
    const fs::path out1 = work_dir() / "report1.csv";
    const fs::path out2 = work_dir() / "report2.csv";
    const std::string base = "verify --p 1.5 --window -6:6 --trials 2 --seed 7 --out ";
    const RunResult first = run_cli(base + "\"" + out1.string() + "\"");
    CHECK(first.exit_code == 0);
    CHECK(first.out.find("verify=pass") != std::string::npos);

    const RunResult second =
        run_cli(base + "\"" + out2.string() + "\"", "HARMDIFF_WORKERS=4 ");
    CHECK(second.exit_code == 0);
    CHECK(slurp(out1) == slurp(out2));
    CHECK(slurp(out1).find("minimizer_core_constancy") != std::string::npos);
}
