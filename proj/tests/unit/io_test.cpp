#include <cstdio>
#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include <cohmix/io.hpp>
#include <cohmix/sampler.hpp>

#include "test_support.hpp"

namespace cohmix {
namespace {

using io::json;
using testing::kind_of;

TEST(RoundSig, TwelveDigits) {
  EXPECT_EQ(io::round_sig(1.0 / 3.0), 0.333333333333);
  EXPECT_EQ(io::round_sig(0.0), 0.0);
  EXPECT_EQ(io::round_sig(123456.7890123456), 123456.789012);
}

TEST(StateJson, Layout) {
  const json j = io::state_to_json(make_state(testing::qubit(0.3, Complex{0.1, -0.2})));
  EXPECT_EQ(j.at("dim"), 2);
  EXPECT_EQ(j.at("entries")[0][1][0], 0.1);
  EXPECT_EQ(j.at("entries")[0][1][1], -0.2);
  EXPECT_EQ(j.at("entries")[1][0][1], 0.2);
}

TEST(StateJson, RoundTrip) {
  SeededRng rng(71);
  for (int d = 2; d <= 6; ++d) {
    const auto rho = ginibre_state(d, d, rng);
    const auto back = io::state_from_json(json::parse(io::state_to_json(rho).dump()));
    EXPECT_LT(testing::max_abs_diff(back.matrix(), rho.matrix()), 1e-12);
  }
}

TEST(StateJson, Rejections) {
  EXPECT_EQ(kind_of([] { io::state_from_json(json::parse(R"({"dim": 2, "entries": [[[1,0],[0,0]]]})")); }),
            ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { io::state_from_json(json::parse(R"({"dim": 1, "entries": [[[1,0,0]]]})")); }),
            ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { io::state_from_json(json::parse(R"({"entries": [[[1,0]]]})")); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { io::state_from_json(json::parse(R"({"dim": 1, "entries": [[["1",0]]]})")); }),
            ErrorKind::ParseError);
  // Well-formed but not a state.
  EXPECT_EQ(kind_of([] {
              io::state_from_json(json::parse(R"({"dim": 2, "entries": [[[0.5,0],[0.6,0]],[[0.6,0],[0.5,0]]]})"));
            }),
            ErrorKind::NotPSD);
}

TEST(ReportJson, RoundTripAndOptionalField) {
  MeasureReport r;
  r.dim = 3;
  r.c_l1 = 1.0;
  r.c_rel_entropy = 0.25;
  r.m_linear = 0.75;
  r.m_von_neumann = 0.8;
  r.m_geometric = 0.9;
  r.tradeoff_residual = 1e-13;
  json j = io::report_to_json(r);
  EXPECT_FALSE(j.contains("c_geometric"));
  auto back = io::report_from_json(j);
  EXPECT_FALSE(back.c_geometric.has_value());
  EXPECT_EQ(back.m_linear, 0.75);
  r.c_geometric = 0.125;
  back = io::report_from_json(json::parse(io::report_to_json(r).dump()));
  ASSERT_TRUE(back.c_geometric.has_value());
  EXPECT_EQ(*back.c_geometric, 0.125);
  EXPECT_EQ(back.tradeoff_residual, 1e-13);
}

TEST(McmsParamsJson, RoundTripAndValidation) {
  const json j = io::mcms_params_to_json(make_mcms_params(4, 0.9));
  EXPECT_EQ(j, json::parse(R"({"dim": 4, "p": 0.9})"));
  EXPECT_EQ(io::mcms_params_from_json(j).p, 0.9);
  EXPECT_EQ(kind_of([] { io::mcms_params_from_json(json::parse(R"({"dim": 2, "p": 1.5})")); }),
            ErrorKind::ParamOutOfRange);
}

TEST(PlanJson, RoundTrip) {
  const auto plan = fixed_coherence_plan(0.3, 0.4, 0.4);
  const auto back = io::plan_from_json(json::parse(io::plan_to_json(plan).dump()));
  EXPECT_EQ(back.kind, PlanKind::MixedUnitary);
  ASSERT_EQ(back.components.size(), 2u);
  EXPECT_EQ(back.components[0].weight, 0.75);
  EXPECT_LT(testing::max_abs_diff(back.components[1].unitary, testing::sigma_x()), 1e-15);
  EXPECT_NO_THROW(back.validate());
  EXPECT_EQ(kind_of([] { io::plan_from_json(json::parse(R"({"kind": "Other", "components": [], "residual": 0})")); }),
            ErrorKind::ParseError);
}

TEST(OptimizerConfigJson, DefaultsAndOverrides) {
  const auto cfg = io::optimizer_config_from_json(json::parse(R"({"restarts": 3, "seed": 9})"));
  EXPECT_EQ(cfg.restarts, 3);
  EXPECT_EQ(cfg.seed, 9u);
  EXPECT_EQ(cfg.max_iterations, OptimizerConfig{}.max_iterations);
  const auto back = io::optimizer_config_from_json(io::optimizer_config_to_json(cfg));
  EXPECT_EQ(back.restarts, 3);
  EXPECT_EQ(back.tolerance, cfg.tolerance);
  EXPECT_EQ(kind_of([] { io::optimizer_config_from_json(json::parse(R"({"restarts": 1.5})")); }),
            ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { io::optimizer_config_from_json(json::parse(R"({"tolerance": 0.1})")); }),
            ErrorKind::ParamOutOfRange);
}

TEST(Files, ReadErrors) {
  EXPECT_EQ(kind_of([] { io::read_json_file("/nonexistent/state.json"); }), ErrorKind::IoError);
  const auto path = std::filesystem::temp_directory_path() / "cohmix_io_test_bad.json";
  {
    std::ofstream(path) << "{not json";
  }
  EXPECT_EQ(kind_of([&] { io::read_state_file(path); }), ErrorKind::ParseError);
  {
    std::ofstream(path) << R"({"dim": 1, "entries": [[[1e400, 0]]]})";
  }
  EXPECT_EQ(kind_of([&] { io::read_state_file(path); }), ErrorKind::ParseError);
  {
    std::ofstream(path) << io::state_to_json(maximally_mixed(3)).dump();
  }
  EXPECT_EQ(io::read_state_file(path).dim(), 3);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace cohmix
