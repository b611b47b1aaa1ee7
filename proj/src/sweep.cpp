#include "capstab/sweep.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "capstab/model_cap.hpp"

namespace capstab {

using nlohmann::json;

void SweepConfig::validate() const {
    if (!(c > 0.0)) throw std::invalid_argument("SweepConfig: c must be > 0");
    if (etas.empty() || lambdas.empty() || ps.empty())
        throw std::invalid_argument("SweepConfig: lists must be non-empty");
    for (size_t i = 0; i < etas.size(); ++i) {
        if (!(etas[i] > 0.0)) throw std::invalid_argument("SweepConfig: etas must be positive");
        if (i > 0 && !(etas[i] < etas[i - 1]))
            throw std::invalid_argument("SweepConfig: etas must be decreasing");
    }
    if (grid < 8) throw std::invalid_argument("SweepConfig: grid too small");
    if (sample_size < 2) throw std::invalid_argument("SweepConfig: sample_size too small");
}

SweepConfig sweep_config_from_json(const std::string& text) {
    const json j = json::parse(text);
    SweepConfig cfg;
    cfg.c = j.value("c", 1.0);
    cfg.etas = j.at("etas").get<std::vector<double>>();
    cfg.grid = j.value("grid", 128);
    if (j.contains("lambdas")) cfg.lambdas = j.at("lambdas").get<std::vector<double>>();
    if (j.contains("ps")) cfg.ps = j.at("ps").get<std::vector<double>>();
    cfg.sample_size = j.value("sample_size", 256);
    cfg.out_dir = j.value("out_dir", std::string{});
    cfg.tol_scale = j.value("tol_scale", 1.0);
    cfg.seed = j.value("seed", 0u);
    cfg.validate();
    return cfg;
}

std::string sweep_config_to_json(const SweepConfig& cfg) {
    return json{{"c", cfg.c},           {"etas", cfg.etas},
                {"grid", cfg.grid},     {"lambdas", cfg.lambdas},
                {"ps", cfg.ps},         {"sample_size", cfg.sample_size},
                {"out_dir", cfg.out_dir}, {"tol_scale", cfg.tol_scale},
                {"seed", cfg.seed}}
        .dump(2);
}

SweepResult run_stability_sweep(const SweepConfig& cfg) {
    cfg.validate();
    using Clock = std::chrono::steady_clock;
    const PolarGrid grid(cfg.grid, cfg.grid);
    SweepResult result;
    result.config = cfg;

    const ConformalFactor model = model_cap_factor(cfg.c, grid);
    const int m = std::min(cfg.sample_size, grid.node_count());
    const FarthestPointResult fps = farthest_point_indices(model, m);
    result.sample_indices = fps.indices;
    result.model_sample = sample_at_indices(model, fps.indices, "model");

    for (double eta : cfg.etas) {
        const auto row_start = Clock::now();
        SweepRow row;
        row.eta = eta;
        row.epsilon = eta_family_epsilon(cfg.c, eta);
        try {
            const EtaMember member = eta_family(cfg.c, eta, grid);
            row.boundary_length = boundary_length(member.factor);
            row.area = area(member.factor);

            const auto solve_start = Clock::now();
            SolveOptions opts;
            opts.tol = 1e-10 * cfg.tol_scale;
            const ComparisonSolution sol = solve_comparison(member.factor, opts);
            row.solve_seconds = std::chrono::duration<double>(Clock::now() - solve_start).count();
            row.ordering_margin = sol.ordering_margin;
            row.robin_margin = verify_robin(sol, member.factor).robin_margin;

            const WReport rep = w_report(member.factor, sol, cfg.lambdas, cfg.ps);
            row.flux = rep.boundary_flux;
            row.l1_laplacian = rep.l1_laplacian;
            for (double lambda : cfg.lambdas)
                for (double p : cfg.ps) row.prop_norms.push_back(rep.prop_norms.at({lambda, p}));

            row.inradius = inradius(sol.v);
            const double measured_l = boundary_length(sol.v);
            row.inradius_bound = inradius_lower_bound(
                cfg.c, std::min(measured_l, 2.0 * M_PI / std::sqrt(1.0 + cfg.c * cfg.c)));
            row.slack = GeodesicGraph(sol.v).slack();

            const MetricSample sample =
                sample_at_indices(member.factor, result.sample_indices, "eta");
            row.gh_upper = gh_upper_identity(sample, result.model_sample);
            row.gh_distortion = gh_identity_distortion(sample, result.model_sample);
            row.gh_lower = gh_lower(sample, result.model_sample);
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        row.row_seconds = std::chrono::duration<double>(Clock::now() - row_start).count();
        result.rows.push_back(std::move(row));
    }
    return result;
}

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace

std::string sweep_to_csv(const SweepResult& result) {
    std::ostringstream out;
    out << "# " << kSweepCsvVersion << " c=" << fmt(result.config.c)
        << " grid=" << result.config.grid << " sample=" << result.config.sample_size << "\n";
    out << "eta,epsilon,boundary_length,area,inradius,inradius_bound,slack,robin_margin,"
           "ordering_margin,flux,l1_laplacian";
    for (double lambda : result.config.lambdas)
        for (double p : result.config.ps)
            out << ",prop31_l" << fmt(lambda) << "_p" << fmt(p);
    out << ",gh_upper,gh_lower,gh_distortion,error,solve_seconds,row_seconds\n";
    for (const SweepRow& row : result.rows) {
        out << fmt(row.eta) << ',' << fmt(row.epsilon) << ',' << fmt(row.boundary_length) << ','
            << fmt(row.area) << ',' << fmt(row.inradius) << ',' << fmt(row.inradius_bound) << ','
            << fmt(row.slack) << ',' << fmt(row.robin_margin) << ',' << fmt(row.ordering_margin)
            << ',' << fmt(row.flux) << ',' << fmt(row.l1_laplacian);
        const size_t expected = result.config.lambdas.size() * result.config.ps.size();
        for (size_t i = 0; i < expected; ++i)
            out << ',' << (i < row.prop_norms.size() ? fmt(row.prop_norms[i]) : "");
        out << ',' << fmt(row.gh_upper) << ',' << fmt(row.gh_lower) << ','
            << fmt(row.gh_distortion) << ',' << row.error << ',' << fmt(row.solve_seconds) << ','
            << fmt(row.row_seconds) << "\n";
    }
    return out.str();
}

}  // namespace capstab
