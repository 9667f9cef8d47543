#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "cohmix/mcms.hpp"
#include "cohmix/measures.hpp"
#include "cohmix/optimizer.hpp"
#include "cohmix/transforms.hpp"

namespace cohmix::io {

using nlohmann::json;

/// Numbers are written with 12 significant digits.
double round_sig(double value, int digits = 12);

/// {"dim": d, "entries": [[[re, im], ...], ...]} row-major.
json matrix_to_json(const ComplexMatrix& m);
/// Parses the entries layout; throws ParseError on shape mismatch or
/// non-finite numbers.
ComplexMatrix matrix_from_json(const json& entries, int dim);

json state_to_json(const DensityMatrix& rho);
/// Parses and validates a state object.
DensityMatrix state_from_json(const json& j);

json report_to_json(const MeasureReport& r);
MeasureReport report_from_json(const json& j);

json mcms_params_to_json(const McmsParams& params);
McmsParams mcms_params_from_json(const json& j);

json plan_to_json(const TransformPlan& plan);
TransformPlan plan_from_json(const json& j);

/// Missing fields keep their defaults.
OptimizerConfig optimizer_config_from_json(const json& j);
json optimizer_config_to_json(const OptimizerConfig& cfg);

/// Throws IoError when the file cannot be read and ParseError on bad JSON.
json read_json_file(const std::filesystem::path& path);
DensityMatrix read_state_file(const std::filesystem::path& path);

}  // namespace cohmix::io
