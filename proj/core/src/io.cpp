#include "cohmix/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cohmix/error.hpp"

namespace cohmix::io {

double round_sig(double value, int digits) {
  if (!std::isfinite(value) || value == 0.0) return value;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return std::strtod(buf, nullptr);
}

namespace {

double finite_number(const json& j, const char* what) {
  if (!j.is_number()) raise(ErrorKind::ParseError, std::string(what) + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) raise(ErrorKind::ParseError, std::string(what) + " is not finite");
  return v;
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) raise(ErrorKind::ParseError, std::string("missing field \"") + name + "\"");
  return j.at(name);
}

int dim_field(const json& j) {
  const json& d = field(j, "dim");
  if (!d.is_number_integer() || d.get<long long>() < 1 || d.get<long long>() > 4096) {
    raise(ErrorKind::ParseError, "\"dim\" must be a positive integer");
  }
  return static_cast<int>(d.get<long long>());
}

}  // namespace

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back(json::array({round_sig(m(r, c).real()), round_sig(m(r, c).imag())}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& entries, int dim) {
  if (!entries.is_array() || entries.size() != static_cast<std::size_t>(dim)) {
    raise(ErrorKind::ParseError, "\"entries\" must hold " + std::to_string(dim) + " rows");
  }
  ComplexMatrix m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    const json& row = entries[static_cast<std::size_t>(r)];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(dim)) {
      raise(ErrorKind::ParseError, "row " + std::to_string(r) + " must hold " + std::to_string(dim) + " entries");
    }
    for (int c = 0; c < dim; ++c) {
      const json& z = row[static_cast<std::size_t>(c)];
      if (!z.is_array() || z.size() != 2) raise(ErrorKind::ParseError, "entries must be [re, im] pairs");
      m(r, c) = Complex{finite_number(z[0], "real part"), finite_number(z[1], "imaginary part")};
    }
  }
  return m;
}

json state_to_json(const DensityMatrix& rho) {
  return {{"dim", rho.dim()}, {"entries", matrix_to_json(rho.matrix())}};
}

DensityMatrix state_from_json(const json& j) {
  const int d = dim_field(j);
  return DensityMatrix::make(matrix_from_json(field(j, "entries"), d));
}

json report_to_json(const MeasureReport& r) {
  json j = {{"dim", r.dim},
            {"c_l1", round_sig(r.c_l1)},
            {"c_rel_entropy", round_sig(r.c_rel_entropy)},
            {"m_linear", round_sig(r.m_linear)},
            {"m_von_neumann", round_sig(r.m_von_neumann)},
            {"m_geometric", round_sig(r.m_geometric)},
            {"tradeoff_residual", round_sig(r.tradeoff_residual)}};
  if (r.c_geometric) j["c_geometric"] = round_sig(*r.c_geometric);
  return j;
}

MeasureReport report_from_json(const json& j) {
  MeasureReport r;
  r.dim = dim_field(j);
  r.c_l1 = finite_number(field(j, "c_l1"), "c_l1");
  r.c_rel_entropy = finite_number(field(j, "c_rel_entropy"), "c_rel_entropy");
  if (j.contains("c_geometric")) r.c_geometric = finite_number(j.at("c_geometric"), "c_geometric");
  r.m_linear = finite_number(field(j, "m_linear"), "m_linear");
  r.m_von_neumann = finite_number(field(j, "m_von_neumann"), "m_von_neumann");
  r.m_geometric = finite_number(field(j, "m_geometric"), "m_geometric");
  r.tradeoff_residual = finite_number(field(j, "tradeoff_residual"), "tradeoff_residual");
  return r;
}

json mcms_params_to_json(const McmsParams& params) {
  return {{"dim", params.dim}, {"p", round_sig(params.p)}};
}

McmsParams mcms_params_from_json(const json& j) {
  return make_mcms_params(dim_field(j), finite_number(field(j, "p"), "p"));
}

json plan_to_json(const TransformPlan& plan) {
  json components = json::array();
  for (const PlanComponent& c : plan.components) {
    components.push_back({{"weight", round_sig(c.weight)}, {"unitary", matrix_to_json(c.unitary)}});
  }
  return {{"kind", std::string(to_string(plan.kind))},
          {"components", std::move(components)},
          {"residual", round_sig(plan.residual)}};
}

TransformPlan plan_from_json(const json& j) {
  TransformPlan plan;
  const json& kind = field(j, "kind");
  if (kind == "MixedUnitary") {
    plan.kind = PlanKind::MixedUnitary;
  } else if (kind == "Similarity") {
    plan.kind = PlanKind::Similarity;
  } else {
    raise(ErrorKind::ParseError, "unknown plan kind");
  }
  const json& components = field(j, "components");
  if (!components.is_array()) raise(ErrorKind::ParseError, "\"components\" must be an array");
  for (const json& c : components) {
    const json& u = field(c, "unitary");
    const int d = u.is_array() ? static_cast<int>(u.size()) : 0;
    plan.components.push_back({finite_number(field(c, "weight"), "weight"), matrix_from_json(u, d)});
  }
  plan.residual = finite_number(field(j, "residual"), "residual");
  return plan;
}

OptimizerConfig optimizer_config_from_json(const json& j) {
  if (!j.is_object()) raise(ErrorKind::ParseError, "optimizer config must be an object");
  OptimizerConfig cfg;
  auto integer = [&](const char* name, auto& target) {
    if (!j.contains(name)) return;
    if (!j.at(name).is_number_integer()) raise(ErrorKind::ParseError, std::string(name) + " must be an integer");
    target = j.at(name).get<std::decay_t<decltype(target)>>();
  };
  auto real = [&](const char* name, double& target) {
    if (j.contains(name)) target = finite_number(j.at(name), name);
  };
  integer("restarts", cfg.restarts);
  integer("max_iterations", cfg.max_iterations);
  real("step_size", cfg.step_size);
  real("penalty_weight", cfg.penalty_weight);
  real("tolerance", cfg.tolerance);
  integer("seed", cfg.seed);
  integer("threads", cfg.threads);
  cfg.validate();
  return cfg;
}

json optimizer_config_to_json(const OptimizerConfig& cfg) {
  return {{"restarts", cfg.restarts},       {"max_iterations", cfg.max_iterations},
          {"step_size", cfg.step_size},     {"penalty_weight", cfg.penalty_weight},
          {"tolerance", cfg.tolerance},     {"seed", cfg.seed},
          {"threads", cfg.threads}};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorKind::IoError, "cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return json::parse(buffer.str());
  } catch (const json::exception& e) {
    raise(ErrorKind::ParseError, path.string() + ": " + e.what());
  }
}

DensityMatrix read_state_file(const std::filesystem::path& path) {
  return state_from_json(read_json_file(path));
}

}  // namespace cohmix::io
