#pragma once

#include <string>

#include "capstab/estimates.hpp"
#include "capstab/gauge.hpp"
#include "capstab/gh.hpp"
#include "capstab/model_cap.hpp"
#include "capstab/revolution.hpp"

namespace capstab {

// JSON codecs for the file formats the CLI reads and writes. Field layouts
// are part of the tool's contract; see README.

std::string grid_field_to_json(const GridField& f);
GridField grid_field_from_json(const std::string& text);

std::string conformal_factor_to_json(const ConformalFactor& u);
ConformalFactor conformal_factor_from_json(const std::string& text);

std::string cap_params_to_json(const CapParams& p);

std::string distance_matrix_to_json(const DistanceMatrix& dm);
DistanceMatrix distance_matrix_from_json(const std::string& text);

std::string metric_sample_to_json(const MetricSample& s);
MetricSample metric_sample_from_json(const std::string& text);

std::string mobius_to_json(const MobiusTransform& m);
MobiusTransform mobius_from_json(const std::string& text);

std::string warp_profile_to_json(const WarpProfile& w);
WarpProfile warp_profile_from_json(const std::string& text);

std::string solver_report_to_json(const ComparisonSolution& sol, const RobinReport& robin);

std::string w_report_to_json(const WReport& rep);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace capstab
