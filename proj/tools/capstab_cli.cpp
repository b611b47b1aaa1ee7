// Command-line surface of the laboratory: model identity checks, the
// comparison solver, the stability sweep, the revolution counterexample,
// Gromov-Hausdorff bounds between sample files, and the w-estimate battery.
//
// Exit codes: 0 pass, 1 check failure, 2 usage error, 3 numerical failure.

#include <cmath>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "capstab/serialize.hpp"
#include "capstab/sweep.hpp"

using namespace capstab;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct CheckList {
    bool ok = true;
    std::string first_failure;

    void check(bool pass, const std::string& name, double value, double bound) {
        std::cout << (pass ? "[PASS] " : "[FAIL] ") << name << " (" << value
                  << " vs bound " << bound << ")\n";
        if (!pass && ok) {
            ok = false;
            first_failure = name;
        }
    }
};

int cmd_verify_model(double c, int n) {
    const PolarGrid grid(n, n);
    const CapParams cap = CapParams::make(c);
    const double hsq = grid.h() * grid.h();
    CheckList checks;

    const ConformalFactor u = model_cap_factor(c, grid);
    const double len = boundary_length(u);
    checks.check(std::abs(len - cap.boundary_length) <= 1e-3 * cap.boundary_length,
                 "boundary length vs 2*pi/sqrt(1+c^2)", len, cap.boundary_length);
    const double ar = area(u);
    checks.check(std::abs(ar - cap.area) <= 1e-3 * cap.area, "area vs 2*pi*(1-c/sqrt(1+c^2))",
                 ar, cap.area);

    const GridField k = gaussian_curvature(u);
    double kerr = 0.0;
    for (int idx = 0; idx < grid.interior_count(); ++idx)
        kerr = std::max(kerr, std::abs(k.values[idx] - 1.0));
    checks.check(kerr <= 10.0 * hsq, "K == 1 within 10 h^2", kerr, 10.0 * hsq);

    double kaperr = 0.0;
    for (double kappa : boundary_curvature(u)) kaperr = std::max(kaperr, std::abs(kappa - c));
    checks.check(kaperr <= 10.0 * hsq, "kappa == c within 10 h^2", kaperr, 10.0 * hsq);

    const double gb = gauss_bonnet_residual(u);
    checks.check(gb <= 10.0 * hsq * 2.0 * M_PI, "Gauss-Bonnet residual", gb,
                 10.0 * hsq * 2.0 * M_PI);

    std::cout << cap_params_to_json(cap) << "\n";
    if (!checks.ok) {
        std::cerr << "first failed check: " << checks.first_failure << "\n";
        return kExitCheckFailure;
    }
    return kExitPass;
}

int cmd_solve(double c, double eta, int n, const std::string& in_file,
              const std::string& out_file, double tol_scale) {
    const PolarGrid grid(n, n);
    ConformalFactor u = in_file.empty()
                            ? (eta > 0.0 ? eta_family(c, eta, grid).factor
                                         : model_cap_factor(c, grid))
                            : conformal_factor_from_json(read_file(in_file));
    SolveOptions opts;
    opts.tol = 1e-10 * tol_scale;
    const ComparisonSolution sol = solve_comparison(u, opts);
    const RobinReport robin = verify_robin(sol, u);
    const std::string report = solver_report_to_json(sol, robin);
    std::cout << report << "\n";
    if (!out_file.empty()) write_file(out_file, conformal_factor_to_json(sol.v));
    return kExitPass;
}

int cmd_stability_sweep(const std::string& config_file, const std::string& out_file) {
    const SweepConfig cfg = sweep_config_from_json(read_file(config_file));
    const SweepResult result = run_stability_sweep(cfg);
    const std::string csv = sweep_to_csv(result);
    if (out_file.empty())
        std::cout << csv;
    else
        write_file(out_file, csv);
    for (const SweepRow& row : result.rows)
        if (!row.error.empty()) {
            std::cerr << "row eta=" << row.eta << " failed: " << row.error << "\n";
            return kExitNumerical;
        }
    return kExitPass;
}

int cmd_counterexample(int k, double s, int m, const std::string& out_file) {
    const WarpProfile football = build_smoothed_football(k, s);
    const WarpProfile round = round_sphere_profile();
    const double loop = meridian_loop_length(football);
    const double equator = closed_geodesic_length(football);
    const MetricSample fs = geodesic_sample(football, m, 192, 192, "football");
    const MetricSample rs = geodesic_sample(round, m, 192, 192, "round");
    const double lower = gh_lower(fs, rs);

    std::ostringstream report;
    report << "{\"k\":" << k << ",\"s\":" << s << ",\"min_curvature\":" << football.min_curvature
           << ",\"rescale_factor\":" << football.rescale_factor
           << ",\"meridian_loop_length\":" << loop << ",\"equator_length\":" << equator
           << ",\"gh_lower_vs_round\":" << lower << "}";
    std::cout << report.str() << "\n";
    if (!out_file.empty()) write_file(out_file, report.str());

    if (football.min_curvature < 1.0 - 1e-9) return kExitCheckFailure;
    if (k >= 2 && loop < 2.0 * M_PI - 0.05) return kExitCheckFailure;
    return kExitPass;
}

int cmd_gh(const std::string& file_a, const std::string& file_b, bool aligned) {
    const MetricSample a = metric_sample_from_json(read_file(file_a));
    const MetricSample b = metric_sample_from_json(read_file(file_b));
    const double lower = gh_lower(a, b);
    std::cout << "{\"lower\":" << lower;
    if (aligned) {
        const double upper = gh_upper_identity(a, b);
        std::cout << ",\"upper\":" << upper
                  << ",\"distortion\":" << gh_identity_distortion(a, b);
    }
    std::cout << "}\n";
    return kExitPass;
}

int cmd_estimates(double c, double eta, int n, const std::vector<double>& lambdas,
                  const std::vector<double>& ps, const std::string& out_file) {
    const PolarGrid grid(n, n);
    const EtaMember member = eta_family(c, eta, grid);
    const ComparisonSolution sol = solve_comparison(member.factor);
    const WReport rep = w_report(member.factor, sol, lambdas, ps);
    const std::string text = w_report_to_json(rep);
    if (out_file.empty())
        std::cout << text << "\n";
    else
        write_file(out_file, text);
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"capstab: numerical laboratory for convex conformal disk metrics"};
    app.require_subcommand(1);

    double c = 1.0, eta = 0.0, s = 0.1, tol_scale = 1.0;
    int grid_n = 256, k = 2, sample_size = 256;
    unsigned seed = 0;
    std::string in_file, out_file, config_file, file_a, file_b;
    bool aligned = false;
    std::vector<double> lambdas{1.0, 2.0}, ps{1.0, 1.5};

    auto* verify = app.add_subcommand("verify-model", "check the model cap identities");
    verify->add_option("--c", c, "boundary curvature constant")->check(CLI::PositiveNumber);
    verify->add_option("--grid", grid_n, "grid resolution");

    auto* solve = app.add_subcommand("solve", "solve the constant-curvature comparison problem");
    solve->add_option("--c", c)->check(CLI::PositiveNumber);
    solve->add_option("--eta", eta, "use the eta-family member as input");
    solve->add_option("--grid", grid_n);
    solve->add_option("--in", in_file, "conformal factor JSON file");
    solve->add_option("--out", out_file, "write the comparison factor here");
    solve->add_option("--tol-scale", tol_scale);

    auto* sweep = app.add_subcommand("stability-sweep", "run the near-extremal sweep");
    sweep->add_option("--config", config_file, "flat JSON config")->required();
    sweep->add_option("--out", out_file, "CSV output path");

    auto* counter = app.add_subcommand("counterexample", "smoothed football vs round sphere");
    counter->add_option("--k", k, "football order")->check(CLI::PositiveNumber);
    counter->add_option("--s", s, "smoothing width");
    counter->add_option("--samples", sample_size, "metric sample size");
    counter->add_option("--out", out_file);

    auto* gh = app.add_subcommand("gh", "GH bounds between two metric sample files");
    gh->add_option("a", file_a, "sample JSON")->required();
    gh->add_option("b", file_b, "sample JSON")->required();
    gh->add_flag("--aligned", aligned, "samples share node indices; emit the identity bound");

    auto* est = app.add_subcommand("estimates", "w-estimate battery for an eta member");
    est->add_option("--c", c)->check(CLI::PositiveNumber);
    est->add_option("--eta", eta)->required();
    est->add_option("--grid", grid_n);
    est->add_option("--lambdas", lambdas);
    est->add_option("--ps", ps);
    est->add_option("--out", out_file);

    app.add_option("--seed", seed, "seed for randomized inputs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (verify->parsed()) return cmd_verify_model(c, grid_n);
        if (solve->parsed()) return cmd_solve(c, eta, grid_n, in_file, out_file, tol_scale);
        if (sweep->parsed()) return cmd_stability_sweep(config_file, out_file);
        if (counter->parsed()) return cmd_counterexample(k, s, sample_size, out_file);
        if (gh->parsed()) return cmd_gh(file_a, file_b, aligned);
        if (est->parsed()) return cmd_estimates(c, eta, grid_n, lambdas, ps, out_file);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitUsage;
}
