#include "capstab/serialize.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace capstab {

using nlohmann::json;

namespace {

json grid_field_json(const GridField& f) {
    json j;
    j["grid"] = {{"nr", f.grid.nr}, {"ntheta", f.grid.ntheta}};
    j["values"] = f.values;
    return j;
}

GridField grid_field_parse(const json& j) {
    const PolarGrid grid(j.at("grid").at("nr").get<int>(), j.at("grid").at("ntheta").get<int>());
    GridField f(grid, j.at("values").get<std::vector<double>>());
    f.assert_finite();
    return f;
}

}  // namespace

std::string grid_field_to_json(const GridField& f) { return grid_field_json(f).dump(); }

GridField grid_field_from_json(const std::string& text) {
    return grid_field_parse(json::parse(text));
}

std::string conformal_factor_to_json(const ConformalFactor& u) {
    json j = grid_field_json(u.field);
    j["c"] = u.c;
    return j.dump();
}

ConformalFactor conformal_factor_from_json(const std::string& text) {
    const json j = json::parse(text);
    return ConformalFactor::unchecked(grid_field_parse(j), j.at("c").get<double>());
}

std::string cap_params_to_json(const CapParams& p) {
    return json{{"c", p.c},
                {"R_c", p.r_c},
                {"cap_radius", p.cap_radius},
                {"boundary_length", p.boundary_length},
                {"area", p.area}}
        .dump();
}

std::string distance_matrix_to_json(const DistanceMatrix& dm) {
    return json{{"indices", dm.indices}, {"d", dm.d}, {"slack", dm.slack}}.dump();
}

DistanceMatrix distance_matrix_from_json(const std::string& text) {
    const json j = json::parse(text);
    DistanceMatrix dm;
    dm.indices = j.at("indices").get<std::vector<int>>();
    dm.d = j.at("d").get<std::vector<double>>();
    dm.slack = j.at("slack").get<double>();
    if (dm.d.size() != dm.indices.size() * dm.indices.size())
        throw std::invalid_argument("DistanceMatrix: matrix size mismatch");
    return dm;
}

std::string metric_sample_to_json(const MetricSample& s) {
    return json{{"n", s.n}, {"d", s.d}, {"covering_radius", s.covering_radius}, {"tag", s.tag}}
        .dump();
}

MetricSample metric_sample_from_json(const std::string& text) {
    const json j = json::parse(text);
    MetricSample s;
    s.n = j.at("n").get<int>();
    s.d = j.at("d").get<std::vector<double>>();
    s.covering_radius = j.at("covering_radius").get<double>();
    s.tag = j.value("tag", std::string{});
    s.validate(1e-6);
    return s;
}

std::string mobius_to_json(const MobiusTransform& m) {
    return json{{"a", {m.a.real(), m.a.imag()}}, {"theta", m.theta}}.dump();
}

MobiusTransform mobius_from_json(const std::string& text) {
    const json j = json::parse(text);
    const auto a = j.at("a").get<std::vector<double>>();
    if (a.size() != 2) throw std::invalid_argument("MobiusTransform: a must have two entries");
    return MobiusTransform({a[0], a[1]}, j.at("theta").get<double>());
}

std::string warp_profile_to_json(const WarpProfile& w) {
    return json{{"r_max", w.r_max},
                {"samples", w.samples},
                {"k", w.k},
                {"s", w.s},
                {"rescale_factor", w.rescale_factor}}
        .dump();
}

WarpProfile warp_profile_from_json(const std::string& text) {
    const json j = json::parse(text);
    WarpProfile w;
    w.r_max = j.at("r_max").get<double>();
    w.samples = j.at("samples").get<std::vector<double>>();
    w.k = j.value("k", 1);
    w.s = j.value("s", 0.0);
    w.rescale_factor = j.value("rescale_factor", 1.0);
    w.validate();
    return w;
}

std::string solver_report_to_json(const ComparisonSolution& sol, const RobinReport& robin) {
    return json{{"residual_inf", sol.residual_inf},
                {"newton_iters", sol.newton_iters},
                {"ordering_margin", sol.ordering_margin},
                {"robin_margin", robin.robin_margin}}
        .dump();
}

std::string w_report_to_json(const WReport& rep) {
    json j;
    j["l1_laplacian"] = rep.l1_laplacian;
    j["boundary_flux"] = rep.boundary_flux;
    j["min_w"] = rep.min_w;
    j["min_neg_lap_w"] = rep.min_neg_lap_w;
    json exps = json::array();
    for (const auto& [lambda, v] : rep.exp_integrals)
        exps.push_back({{"lambda", lambda}, {"value", v}});
    j["exp_integrals"] = exps;
    json mus = json::array();
    for (const auto& [lambda, v] : rep.mu) mus.push_back({{"lambda", lambda}, {"value", v}});
    j["mu"] = mus;
    json grads = json::array();
    for (const auto& [p, v] : rep.grad_lp) grads.push_back({{"p", p}, {"value", v}});
    j["grad_lp"] = grads;
    json w1ps = json::array();
    for (const auto& [p, v] : rep.w1p) w1ps.push_back({{"p", p}, {"value", v}});
    j["w1p"] = w1ps;
    json props = json::array();
    for (const auto& [key, v] : rep.prop_norms)
        props.push_back({{"lambda", key.first}, {"p", key.second}, {"value", v}});
    j["prop31"] = props;
    return j.dump();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << text;
}

}  // namespace capstab
