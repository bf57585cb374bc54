#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "reciplab/config.hpp"

using namespace reciplab;

TEST(Config, MeasureForms) {
  auto u = measure_from_json(Json::parse(R"({"type":"uniform","lo":-1,"hi":2})"));
  EXPECT_EQ(u, Measure::uniform(-1, 2));
  auto a = measure_from_json(Json::parse(R"({"type":"atoms","weights":[[0,"1/3"],[4,"2/3"]]})"));
  EXPECT_EQ(a.atoms.at(4), mpq_class(2, 3));
  auto b = measure_from_json(Json::parse(R"({"type":"atoms","weights":[[7,1]]})"));
  EXPECT_EQ(b, Measure::dirac(7));
  EXPECT_EQ(measure_from_json(measure_to_json(a)), a);
}

TEST(Config, MeasureErrors) {
  for (const char* bad : {R"({"type":"uniform","lo":2,"hi":1})", R"({"type":"atoms","weights":[[0,"1/2"]]})",
                          R"({"type":"atoms","weights":[[0,"1/2"],[0,"1/2"]]})", R"({"type":"atoms","weights":[[0,"x"]]})",
                          R"({"type":"gauss"})", R"({"type":"uniform","lo":0,"hi":1,"extra":1})", R"({"lo":0})",
                          R"({"type":"atoms","weights":[[0.5,"1"]]})"})
    EXPECT_THROW(measure_from_json(Json::parse(bad)), ConfigError) << bad;
  EXPECT_THROW(measure_from_json(Json::parse(R"({"type":"atoms","weights":[[50,"1"]]})"), 10), ConfigError);
}

TEST(Config, PerIndexSequence) {
  auto j = Json::parse(R"({"type":"per_index","list":[{"type":"uniform","lo":0,"hi":1},{"type":"atoms","weights":[[3,"1"]]}]})");
  auto seq = measure_seq_from_json(j, 2);
  EXPECT_EQ(seq[0], Measure::uniform(0, 1));
  EXPECT_EQ(seq[1], Measure::dirac(3));
  EXPECT_THROW(measure_seq_from_json(j, 3), ConfigError);
  auto br = measure_seq_from_json(Json::parse(R"({"type":"uniform","lo":0,"hi":1})"), 5);
  EXPECT_EQ(br[4], Measure::uniform(0, 1));
}

TEST(Config, FullConfig) {
  auto lc = config_from_json(Json::parse(R"({
    "measure": {"type": "uniform", "lo": 0, "hi": 34},
    "m": [10, 20], "samples": 50, "seed": 3, "mode": "montecarlo",
    "statistics": ["irreducible", "galois"], "divisor_k_max": 2, "galois_max_m": 4,
    "primes": [2, 3, 5, 7], "format": "jsonlines", "workers": 2})"));
  const auto& c = lc.experiment;
  EXPECT_EQ(c.m_grid, (std::vector<long>{10, 20}));
  EXPECT_GE(c.measures.size(), 20u);
  EXPECT_EQ(c.samples, 50u);
  EXPECT_EQ(c.seed, 3u);
  EXPECT_EQ(c.mode, SamplingMode::MonteCarlo);
  EXPECT_EQ(c.statistics, (std::vector<std::string>{"irreducible", "galois"}));
  EXPECT_EQ(c.divisor_k_max, 2u);
  EXPECT_EQ(c.galois_max_m, 4);
  EXPECT_EQ(c.workers, 2u);
  ASSERT_TRUE(lc.primes.has_value());
  EXPECT_EQ(*lc.primes, (std::vector<std::uint64_t>{2, 3, 5, 7}));
  EXPECT_EQ(lc.format, "jsonlines");

  auto single = config_from_json(Json::parse(R"({"measure":{"type":"atoms","weights":[[0,"1"]]},"m":3})"));
  EXPECT_EQ(single.experiment.m_grid, (std::vector<long>{3}));
  EXPECT_EQ(single.experiment.mode, SamplingMode::Auto);
  EXPECT_FALSE(single.primes.has_value());
}

TEST(Config, ConfigErrors) {
  const std::string meas = R"("measure":{"type":"atoms","weights":[[0,"1"]]})";
  for (const std::string tail : {R"("m":0)", R"("m":[])", R"("m":"3")", R"("m":2,"samples":0)", R"("m":2,"mode":"fast")",
                                 R"("m":2,"mode":3)", R"("m":2,"statistics":["nope"])", R"("m":2,"statistics":"irreducible")",
                                 R"("m":2,"primes":[4])", R"("m":2,"format":"xml")", R"("m":2,"colour":1)",
                                 R"("m":2,"workers":0)", R"("m":2,"divisor_k_max":0)"})
    EXPECT_THROW(config_from_json(Json::parse("{" + meas + "," + tail + "}")), ConfigError) << tail;
  EXPECT_THROW(config_from_json(Json::parse(R"({"m":2})")), ConfigError);
  EXPECT_THROW(config_from_json(Json::parse("[1]")), ConfigError);
}

TEST(Config, ShippedConfigsParse) {
  for (const char* name : {"littlewood.json", "uniform35.json", "galois_small.json", "dirac.json"}) {
    std::ifstream in(std::string(RECIPLAB_CONFIG_DIR) + "/" + name);
    ASSERT_TRUE(in) << name;
    EXPECT_NO_THROW(config_from_json(Json::parse(in))) << name;
  }
}

TEST(Output, JsonLines) {
  ExperimentReport rep;
  rep.rows.push_back({3, "irreducible", 0.5, 0.25, 0.75, 8, 1, "montecarlo"});
  rep.rows.push_back({4, "disc_square", 0, 0, 0, 1, 1, "exhaustive"});
  std::ostringstream os;
  write_jsonlines(os, rep, Json{{"seed", 1}});
  std::istringstream in(os.str());
  std::string line;
  std::vector<Json> lines;
  while (std::getline(in, line)) lines.push_back(Json::parse(line));
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[0]["meta"]["seed"], 1);
  EXPECT_EQ(lines[1]["statistic"], "irreducible");
  EXPECT_EQ(lines[1]["ci_high"], 0.75);
  EXPECT_EQ(lines[2]["mode"], "exhaustive");
}

TEST(Output, GaloisReportJson) {
  auto j = galois_report_to_json(classify_galois(ZPoly{1, 1, 1, 1, 1}));
  EXPECT_EQ(j["verdict"], "G2");
  EXPECT_EQ(j["witness"]["p"], 2);
  EXPECT_EQ(j["m"], 2);
}
