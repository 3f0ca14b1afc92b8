#include "fgn/cli/format.hpp"
#include "fgn/cli/run_config.hpp"
#include "fgn/cli/runner.hpp"

#include <sstream>

#include "gtest/gtest.h"

namespace fgn::cli {
namespace {

std::string error_of(const RunConfig& c) {
  try {
    validate(c);
  } catch (const ConfigurationError& e) {
    return e.what();
  }
  return "";
}

std::string output_of(const RunConfig& c) {
  std::ostringstream out;
  run(c, out);
  return out.str();
}

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(format_double(0.0), "0.0");
  EXPECT_EQ(format_double(12.0), "12.0");
  EXPECT_EQ(format_double(0.04), "0.04");
  EXPECT_EQ(format_double(-3.9048339239914676e-07), "-3.9048339239914676e-07");
  EXPECT_EQ(format_double(1e300), "1e+300");
  EXPECT_EQ(format_double(std::nan("")), "nan");
  const double x = 0.1 + 0.2;
  EXPECT_EQ(std::stod(format_double(x)), x);
}

TEST(ParseDoubleList, StrictCommaList) {
  EXPECT_EQ(parse_double_list("0.16,0.08, 0.04", "h"), (std::vector<double>{0.16, 0.08, 0.04}));
  EXPECT_THROW(parse_double_list("0.1,,0.2", "h"), ConfigurationError);
  EXPECT_THROW(parse_double_list("0.1x", "h"), ConfigurationError);
  EXPECT_EQ(split_list("leapfrog,nested-fg"), (std::vector<std::string>{"leapfrog", "nested-fg"}));
}

TEST(RunConfig, PrintParseRoundTrip) {
  RunConfig c;
  c.experiment = Experiment::Benchmark;
  c.schemes = {"omelyan5-fg", "nested-fg", "alike5"};
  c.repetitions = 7;
  c.lambda = {1, 4};
  c.h = {0.16, 0.08, 0.1 + 0.2};
  c.t_end = 24.0;
  c.sample_every = 3;
  c.weights.fast_force = 0.0025;
  c.weights.drift = 1e-9;
  c.output = "out.csv";
  c.degree = 5;
  c.commuting = true;
  c.scheme_text = "D(1/2) K(FULL,1,0) D(1/2)";
  const std::string text = print_config(c);
  const RunConfig back = parse_config(text);
  EXPECT_EQ(back, c);
  EXPECT_EQ(print_config(back), text);
}

TEST(RunConfig, PartialFileKeepsDefaults) {
  const RunConfig c = parse_config(R"({"scheme": "nested-fg", "h": 0.02, "weights": {"fast_force": 0.01}})");
  EXPECT_EQ(c.schemes, std::vector<std::string>{"nested-fg"});
  EXPECT_EQ(c.h, std::vector<double>{0.02});
  EXPECT_EQ(c.weights.fast_force, 0.01);
  EXPECT_EQ(c.weights.slow_force, 1.0);
  EXPECT_EQ(c.t_end, 12.0);
}

TEST(RunConfig, ParseErrorsNameTheField) {
  EXPECT_THROW(parse_config("{not json"), ConfigurationError);
  try {
    parse_config(R"({"t_end": "long"})");
    FAIL();
  } catch (const ConfigurationError& e) {
    EXPECT_NE(std::string(e.what()).find("'t_end'"), std::string::npos);
  }
  try {
    parse_config(R"({"stepsize": 0.1})");
    FAIL();
  } catch (const ConfigurationError& e) {
    EXPECT_NE(std::string(e.what()).find("'stepsize'"), std::string::npos);
  }
  try {
    parse_config(R"({"lambda": "one sixth"})");
    FAIL();
  } catch (const ConfigurationError& e) {
    EXPECT_NE(std::string(e.what()).find("'lambda'"), std::string::npos);
  }
}

TEST(Validate, NamesOffendingField) {
  RunConfig c;
  EXPECT_EQ(error_of(c), "");
  c.h = {-0.1};
  EXPECT_NE(error_of(c).find("field 'h'"), std::string::npos);
  c = {};
  c.h = {0.07};
  EXPECT_NE(error_of(c).find("field 'h'"), std::string::npos);
  c = {};
  c.schemes = {"verlet9"};
  EXPECT_NE(error_of(c).find("field 'scheme'"), std::string::npos);
  c = {};
  c.schemes = {"custom"};
  EXPECT_NE(error_of(c).find("field 'scheme_text'"), std::string::npos);
  c.scheme_text = "K(FULL,1/2,0) D(1)";
  EXPECT_NE(error_of(c).find("field 'scheme_text'"), std::string::npos);
  c = {};
  c.repetitions = 0;
  EXPECT_NE(error_of(c).find("field 'M'"), std::string::npos);
  c = {};
  c.lambda = {1, 2};
  EXPECT_NE(error_of(c).find("field 'lambda'"), std::string::npos);
  c = {};
  c.weights.slow_force_gradient = -2;
  EXPECT_NE(error_of(c).find("field 'weights.slow_force_gradient'"), std::string::npos);
  c = {};
  c.sample_every = 0;
  EXPECT_NE(error_of(c).find("field 'sample_every'"), std::string::npos);
  c = {};
  c.experiment = Experiment::ShadowVerify;
  c.degree = 7;
  EXPECT_NE(error_of(c).find("field 'degree'"), std::string::npos);
}

TEST(Validate, ExperimentShapes) {
  RunConfig c;
  c.experiment = Experiment::Converge;
  c.h = {0.16, 0.08, 0.04};
  EXPECT_NE(error_of(c).find("at least 4"), std::string::npos);
  c.h = {0.08, 0.16, 0.04, 0.02};
  EXPECT_NE(error_of(c).find("decreasing"), std::string::npos);
  c = {};
  c.h = {0.04, 0.02};
  EXPECT_NE(error_of(c).find("single step size"), std::string::npos);
  c = {};
  c.schemes = {"leapfrog", "omelyan5"};
  EXPECT_NE(error_of(c).find("exactly one scheme"), std::string::npos);
  c.experiment = Experiment::Benchmark;
  EXPECT_EQ(error_of(c), "");
}

TEST(Simulate, HeaderAndExactFirstRow) {
  RunConfig c;
  c.schemes = {"nested-fg"};
  c.h = {0.04};
  c.t_end = 0.4;
  const std::string out = output_of(c);
  std::istringstream in(out);
  std::string header, first;
  std::getline(in, header);
  std::getline(in, first);
  EXPECT_EQ(header, "step,time_mo,energy,rel_energy_error");
  EXPECT_EQ(first, "0,0.0,-3.9048339239914676e-07,0.0");
  std::size_t rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  EXPECT_EQ(rows, 10u);
}

TEST(Simulate, IsDeterministic) {
  RunConfig c;
  c.schemes = {"alike5"};
  c.lambda = {1, 4};
  c.repetitions = 5;
  c.h = {0.08};
  c.sample_every = 7;
  EXPECT_EQ(output_of(c), output_of(c));
}

TEST(Converge, RowsAndSlopeLine) {
  RunConfig c;
  c.experiment = Experiment::Converge;
  c.h = {0.16, 0.08, 0.04, 0.02};
  const std::string out = output_of(c);
  EXPECT_EQ(out.rfind("h,max_rel_err\n0.16,", 0), 0u);
  const auto pos = out.find("slope=");
  ASSERT_NE(pos, std::string::npos);
  EXPECT_NEAR(std::stod(out.substr(pos + 6)), 2.0, 0.3);
}

TEST(Benchmark, OneRowPerSchemeAndStep) {
  RunConfig c;
  c.experiment = Experiment::Benchmark;
  c.schemes = {"leapfrog", "omelyan5-fg"};
  c.h = {0.08, 0.04};
  const std::string out = output_of(c);
  std::istringstream in(out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "scheme,h,weighted_cost,max_rel_err");
  std::getline(in, line);
  ASSERT_EQ(line.rfind("leapfrog,0.08,", 0), 0u) << line;
  EXPECT_NEAR(std::stod(line.substr(14)), 151 * 1.001, 1e-9);
  std::size_t rows = 1;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 4u);
}

TEST(ShadowVerify, OmelyanDegreeThree) {
  RunConfig c;
  c.experiment = Experiment::ShadowVerify;
  c.schemes = {"omelyan5"};
  c.degree = 3;
  EXPECT_EQ(output_of(c), "grade2: 0\ngrade3: -1/72 * [V,[T,V]]\nresidual: 0\n");
}

TEST(ShadowVerify, ClaimedSchemesLeaveNoResidual) {
  for (const std::string name :
       {"leapfrog", "leapfrog-drift", "omelyan5-fg", "nested-leapfrog", "alike5", "nested-fg"}) {
    RunConfig c;
    c.experiment = Experiment::ShadowVerify;
    c.schemes = {name};
    c.repetitions = 2;
    std::ostringstream out;
    EXPECT_EQ(run(c, out), 0) << out.str();
    EXPECT_NE(out.str().find("residual: 0\n"), std::string::npos) << name;
  }
}

TEST(ShadowVerify, CustomSchemePrintsRawTerms) {
  RunConfig c;
  c.experiment = Experiment::ShadowVerify;
  c.schemes = {"custom"};
  c.scheme_text = "D(1) K(FULL,1,0)";
  c.degree = 2;
  EXPECT_EQ(output_of(c), "grade2: 1/2*T*V - 1/2*V*T\nresidual: 1/2*T*V - 1/2*V*T\n");
}

}  // namespace
}  // namespace fgn::cli
