#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "capstab/serialize.hpp"
#include "capstab/sweep.hpp"

namespace py = pybind11;
using namespace capstab;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Conformal disk metrics on the unit disk: curvature identities, the "
              "constant-curvature comparison solver, geodesic distances, and "
              "Gromov-Hausdorff bounds.";

    py::register_exception<AdmissibilityError>(m, "AdmissibilityError");
    py::register_exception<SolveFailure>(m, "SolveFailure");

    py::class_<PolarGrid>(m, "PolarGrid")
        .def(py::init<int, int>(), py::arg("nr"), py::arg("ntheta"))
        .def_readonly("nr", &PolarGrid::nr)
        .def_readonly("ntheta", &PolarGrid::ntheta)
        .def_readonly("hr", &PolarGrid::hr)
        .def_readonly("htheta", &PolarGrid::htheta)
        .def("h", &PolarGrid::h)
        .def("radius", &PolarGrid::radius)
        .def("index", &PolarGrid::index)
        .def("boundary_index", &PolarGrid::boundary_index)
        .def("node_count", &PolarGrid::node_count)
        .def("interior_count", &PolarGrid::interior_count);

    py::class_<GridField>(m, "GridField")
        .def(py::init<const PolarGrid&>())
        .def(py::init<const PolarGrid&, std::vector<double>>())
        .def_readonly("grid", &GridField::grid)
        .def_readwrite("values", &GridField::values);

    py::class_<ConformalFactor>(m, "ConformalFactor")
        .def_static("unchecked", &ConformalFactor::unchecked)
        .def_static("verified", &ConformalFactor::verified, py::arg("field"), py::arg("c"),
                    py::arg("tol_k") = 1e-6)
        .def_readonly("field", &ConformalFactor::field)
        .def_readonly("c", &ConformalFactor::c);

    py::class_<CapParams>(m, "CapParams")
        .def_static("make", &CapParams::make)
        .def_readonly("c", &CapParams::c)
        .def_readonly("R_c", &CapParams::r_c)
        .def_readonly("cap_radius", &CapParams::cap_radius)
        .def_readonly("boundary_length", &CapParams::boundary_length)
        .def_readonly("area", &CapParams::area);

    m.def("make_field", &make_field);
    m.def("laplacian", &laplacian);
    m.def("normal_derivative", &normal_derivative);
    m.def("gradient_magnitude", &gradient_magnitude);
    m.def("lp_norm", &lp_norm);
    m.def("max_norm", &max_norm);
    m.def("w1p_norm", &w1p_norm);
    m.def("integrate", &integrate);
    py::enum_<Region>(m, "Region")
        .value("Interior", Region::Interior)
        .value("Boundary", Region::Boundary);

    m.def("arccot", &arccot);
    m.def("rho_c_value", &rho_c_value);
    m.def("model_factor", &model_factor);
    m.def("model_cap_factor", &model_cap_factor);
    m.def("inradius_lower_bound", &inradius_lower_bound);
    m.def("stereographic", &stereographic);
    m.def("stereographic_inverse", &stereographic_inverse);
    m.def("stereo_inball_radius", &stereo_inball_radius);

    m.def("gaussian_curvature", &gaussian_curvature);
    m.def("boundary_curvature", &boundary_curvature);
    m.def("boundary_length", &boundary_length);
    m.def("area", &area);
    m.def("gauss_bonnet_residual", &gauss_bonnet_residual);

    py::class_<EtaMember>(m, "EtaMember")
        .def_readonly("factor", &EtaMember::factor)
        .def_readonly("eta", &EtaMember::eta)
        .def_readonly("epsilon", &EtaMember::epsilon);
    m.def("eta_family", &eta_family);
    m.def("eta_family_boundary_length", &eta_family_boundary_length);
    m.def("eta_family_epsilon", &eta_family_epsilon);
    m.def("bump_family", &bump_family, py::arg("c"), py::arg("eta"), py::arg("amplitude"),
          py::arg("center_x"), py::arg("center_y"), py::arg("width"), py::arg("grid"));

    py::class_<SolveOptions>(m, "SolveOptions")
        .def(py::init<>())
        .def_readwrite("tol", &SolveOptions::tol)
        .def_readwrite("max_iters", &SolveOptions::max_iters)
        .def_readwrite("init_offset", &SolveOptions::init_offset);
    py::class_<ComparisonSolution>(m, "ComparisonSolution")
        .def_readonly("v", &ComparisonSolution::v)
        .def_readonly("residual_inf", &ComparisonSolution::residual_inf)
        .def_readonly("residual_scaled", &ComparisonSolution::residual_scaled)
        .def_readonly("newton_iters", &ComparisonSolution::newton_iters)
        .def_readonly("ordering_margin", &ComparisonSolution::ordering_margin);
    m.def(
        "solve_comparison",
        [](const ConformalFactor& u, const SolveOptions& opts) {
            return solve_comparison(u, opts);
        },
        py::arg("u"), py::arg("opts") = SolveOptions{});
    py::class_<RobinReport>(m, "RobinReport")
        .def_readonly("robin_margin", &RobinReport::robin_margin)
        .def_readonly("max_dn_w", &RobinReport::max_dn_w);
    m.def("verify_robin", &verify_robin);

    py::class_<DistanceMatrix>(m, "DistanceMatrix")
        .def_readonly("indices", &DistanceMatrix::indices)
        .def_readonly("d", &DistanceMatrix::d)
        .def_readonly("slack", &DistanceMatrix::slack)
        .def("at", &DistanceMatrix::at);
    m.def("distance_matrix", &distance_matrix);
    m.def("inradius", &inradius);
    m.def("diameter", &diameter, py::arg("u"), py::arg("sample_size") = 64);
    m.def("ball_volume",
          py::overload_cast<const ConformalFactor&, int, double>(&ball_volume));

    py::class_<MetricSample>(m, "MetricSample")
        .def_readonly("n", &MetricSample::n)
        .def_readonly("d", &MetricSample::d)
        .def_readonly("covering_radius", &MetricSample::covering_radius)
        .def_readonly("tag", &MetricSample::tag)
        .def("at", &MetricSample::at)
        .def("diam", &MetricSample::diam)
        .def("rad", &MetricSample::rad);
    m.def("make_abstract_sample", &make_abstract_sample, py::arg("dmat"), py::arg("n"),
          py::arg("tag") = std::string{}, py::arg("covering_radius") = 0.0);
    m.def("farthest_point_sample", &farthest_point_sample, py::arg("u"), py::arg("m"),
          py::arg("tag") = std::string{});
    m.def("sample_at_indices", &sample_at_indices, py::arg("u"), py::arg("indices"),
          py::arg("tag") = std::string{});
    m.def("gh_upper_identity", &gh_upper_identity);
    m.def("gh_identity_distortion", &gh_identity_distortion);
    m.def("gh_lower", &gh_lower);
    m.def("gh_exact_small", &gh_exact_small);

    py::class_<MobiusTransform>(m, "MobiusTransform")
        .def(py::init<std::complex<double>, double>(), py::arg("a"), py::arg("theta"))
        .def_readonly("a", &MobiusTransform::a)
        .def_readonly("theta", &MobiusTransform::theta)
        .def("apply", &MobiusTransform::apply)
        .def("derivative_modulus", &MobiusTransform::derivative_modulus)
        .def("inverse", &MobiusTransform::inverse);
    m.def("compose", &compose);
    m.def("pullback_factor", &pullback_factor);
    py::class_<NormalizeResult>(m, "NormalizeResult")
        .def_readonly("transform", &NormalizeResult::transform)
        .def_readonly("factor", &NormalizeResult::factor)
        .def_readonly("final_offset", &NormalizeResult::final_offset)
        .def_readonly("iterations", &NormalizeResult::iterations);
    m.def("normalize", &normalize);

    py::class_<WReport>(m, "WReport")
        .def_readonly("l1_laplacian", &WReport::l1_laplacian)
        .def_readonly("exp_integrals", &WReport::exp_integrals)
        .def_readonly("grad_lp", &WReport::grad_lp)
        .def_readonly("w1p", &WReport::w1p)
        .def_readonly("boundary_flux", &WReport::boundary_flux)
        .def_readonly("mu", &WReport::mu)
        .def_readonly("min_w", &WReport::min_w)
        .def("prop31",
             [](const WReport& r, double lambda, double p) { return r.prop_norms.at({lambda, p}); });
    m.def("w_report", &w_report);
    py::class_<BrezisMerleResult>(m, "BrezisMerleResult")
        .def_readonly("lhs", &BrezisMerleResult::lhs)
        .def_readonly("rhs", &BrezisMerleResult::rhs)
        .def_readonly("ratio", &BrezisMerleResult::ratio);
    m.def("brezis_merle_check", &brezis_merle_check);

    py::class_<WarpProfile>(m, "WarpProfile")
        .def_readonly("r_max", &WarpProfile::r_max)
        .def_readonly("samples", &WarpProfile::samples)
        .def_readonly("k", &WarpProfile::k)
        .def_readonly("s", &WarpProfile::s)
        .def_readonly("rescale_factor", &WarpProfile::rescale_factor)
        .def_readonly("min_curvature", &WarpProfile::min_curvature)
        .def("phi", &WarpProfile::phi);
    m.def("round_sphere_profile", &round_sphere_profile, py::arg("samples") = 2048);
    m.def("build_smoothed_football", &build_smoothed_football, py::arg("k"), py::arg("s"),
          py::arg("samples") = 131072);
    m.def("closed_geodesic_length", &closed_geodesic_length);
    m.def("meridian_loop_length", &meridian_loop_length);
    m.def("total_curvature", &total_curvature);
    m.def("geodesic_sample", &geodesic_sample, py::arg("w"), py::arg("m"), py::arg("nr") = 192,
          py::arg("ntheta") = 192, py::arg("tag") = std::string{});

    m.def("grid_field_to_json", &grid_field_to_json);
    m.def("grid_field_from_json", &grid_field_from_json);
    m.def("conformal_factor_to_json", &conformal_factor_to_json);
    m.def("conformal_factor_from_json", &conformal_factor_from_json);
    m.def("metric_sample_to_json", &metric_sample_to_json);
    m.def("metric_sample_from_json", &metric_sample_from_json);
}
