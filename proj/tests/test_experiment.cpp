// Copyright 2026 The gasdet authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <map>
#include <sstream>

#include "doctest.h"
#include "experiment.hpp"

using namespace gasdet;
using namespace gasdet::exp;

namespace {

struct Row {
  std::map<std::string, std::string> fields;
  double num(const std::string& key) const { return std::stod(fields.at(key)); }
  const std::string& str(const std::string& key) const { return fields.at(key); }
};

std::vector<Row> parse_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  REQUIRE(std::getline(is, line));
  std::vector<std::string> header;
  {
    std::istringstream hs(line);
    std::string col;
    while (std::getline(hs, col, ',')) header.push_back(col);
  }
  std::vector<Row> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    Row row;
    std::istringstream ls(line);
    std::string col;
    std::size_t idx = 0;
    while (std::getline(ls, col, ',')) row.fields[header.at(idx++)] = col;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

TEST_CASE("config parsing and validation") {
  const ExperimentConfig cfg = parse_config(
      "scenario = taps\n"
      "n = 6\n"
      "# comment line\n"
      "l_list = 2,4,6\n"
      "snr_db = -5, 0\n"
      "blocks = 10\n"
      "detectors = mld, gas\n"
      "gas_init = random\n");
  CHECK(cfg.scenario == Scenario::kTaps);
  CHECK(cfg.n == 6);
  CHECK(cfg.l_list == std::vector<int>{2, 4, 6});
  CHECK(cfg.snr_db == std::vector<double>{-5.0, 0.0});
  CHECK(cfg.gas_init == gas::InitMode::kRandom);

  CHECK_THROWS_WITH_AS(parse_config("bogus_key = 1\n"),
                       doctest::Contains("unknown configuration key 'bogus_key'"),
                       ConfigError);
  CHECK_THROWS_WITH_AS(parse_config("blocks = 0\n"), doctest::Contains("blocks >= 1"),
                       ConfigError);
  CHECK_THROWS_WITH_AS(parse_config("n = 3\nl = 5\n"),
                       doctest::Contains("n >= l_ui + l_ib - 1"), ConfigError);
  CHECK_THROWS_AS(parse_config("scenario = nope\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("detectors = mmse, turbo\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("just a line\n"), ConfigError);
}

TEST_CASE("cascaded tap splitting") {
  ExperimentConfig cfg;
  apply_key(cfg, "l", "5");
  CHECK(cfg.l_ui == 3);
  CHECK(cfg.l_ib == 3);
  apply_key(cfg, "l", "4");
  CHECK(cfg.l_ui + cfg.l_ib - 1 == 4);
}

TEST_CASE("seed plan is deterministic and trial-dependent") {
  CHECK(seed_plan(1, 0) == seed_plan(1, 0));
  CHECK(seed_plan(1, 0) != seed_plan(1, 1));
  CHECK(seed_plan(1, 0) != seed_plan(2, 0));

  const TrialRealization a = make_trial(4, 2, 2, 2, channel::TapStrategy::kCentral, 0,
                                        seed_plan(9, 4));
  const TrialRealization b = make_trial(4, 2, 2, 2, channel::TapStrategy::kCentral, 0,
                                        seed_plan(9, 4));
  const TrialRealization c = make_trial(4, 2, 2, 2, channel::TapStrategy::kCentral, 0,
                                        seed_plan(9, 5));
  CHECK(a.ch.h_tilde == b.ch.h_tilde);
  CHECK(a.x.bits == b.x.bits);
  CHECK(a.unit_noise == b.unit_noise);
  CHECK(a.ch.h_tilde != c.ch.h_tilde);
}

TEST_CASE("identical configs give byte-identical output") {
  const char* text =
      "scenario = ris-gain\n"
      "r_list = 2,4\n"
      "n = 3\n"
      "l = 3\n"
      "blocks = 40\n"
      "snr_db = 0\n"
      "detectors = mmse,mld,gas\n"
      "gas_patience = 6\n"
      "seed = 11\n";
  const ExperimentOutput a = run_experiment(parse_config(text));
  const ExperimentOutput b = run_experiment(parse_config(text));
  CHECK(a.main_text == b.main_text);
  CHECK(!a.main_text.empty());

  // Threading must not change the emitted rows.
  ExperimentConfig serial = parse_config(text);
  serial.threads = 1;
  CHECK(run_experiment(serial).main_text == a.main_text);
}

TEST_CASE("ber rows are consistent and ordered") {
  const ExperimentOutput out = run_experiment(parse_config(
      "scenario = ris-gain\n"
      "r_list = 2,4\n"
      "n = 3\n"
      "l = 3\n"
      "blocks = 60\n"
      "snr_db = -5,0\n"
      "detectors = mmse,mld\n"
      "seed = 3\n"));
  const std::vector<Row> rows = parse_csv(out.main_text);
  REQUIRE(rows.size() == 8);  // 2 sweep x 2 snr x 2 detectors
  for (const Row& row : rows) {
    CHECK(row.num("ber") ==
          doctest::Approx(row.num("bit_errors") / row.num("bits_total")));
    CHECK(row.num("bits_total") == 60 * 3);
  }
  CHECK(rows[0].str("r") == "2");
  CHECK(rows[4].str("r") == "4");
  CHECK(rows[0].str("detector") == "mmse");
  CHECK(rows[1].str("detector") == "mld");
}

TEST_CASE("mld never does statistically worse than mmse") {
  const ExperimentOutput out = run_experiment(parse_config(
      "scenario = ris-gain\n"
      "r_list = 4\n"
      "n = 4\n"
      "l = 3\n"
      "blocks = 10000\n"
      "snr_db = 0\n"
      "detectors = mmse,mld\n"
      "seed = 5\n"));
  const std::vector<Row> rows = parse_csv(out.main_text);
  REQUIRE(rows.size() == 2);
  const double mmse = rows[0].num("ber");
  const double mld = rows[1].num("ber");
  const double bits = rows[0].num("bits_total");
  const double sigma = std::sqrt(std::max(mmse, 1e-9) * (1.0 - mmse) / bits);
  CHECK(mld <= mmse + 3.0 * sigma);
}

TEST_CASE("convergence iteration zero reproduces the baselines") {
  const char* conv_text =
      "scenario = convergence\n"
      "n = 4\n"
      "l = 3\n"
      "r = 4\n"
      "blocks = 400\n"
      "snr_db = -5\n"
      "gas_max_iterations = 8\n"
      "seed = 21\n";
  const ExperimentOutput conv = run_experiment(parse_config(conv_text));
  const std::vector<Row> rows = parse_csv(conv.main_text);
  REQUIRE(rows.size() == 2 * 9);

  const ExperimentOutput sweep = run_experiment(parse_config(
      "scenario = ris-gain\n"
      "r_list = 4\n"
      "n = 4\n"
      "l = 3\n"
      "blocks = 400\n"
      "snr_db = -5\n"
      "detectors = mmse\n"
      "seed = 21\n"));
  const double mmse_ber = parse_csv(sweep.main_text)[0].num("ber");

  double mmse_iter0 = -1.0, random_iter0 = -1.0, mmse_final = -1.0;
  for (const Row& row : rows) {
    if (row.str("detector") == "gas-mmse" && row.num("iteration") == 0)
      mmse_iter0 = row.num("ber");
    if (row.str("detector") == "gas-mmse" && row.num("iteration") == 8)
      mmse_final = row.num("ber");
    if (row.str("detector") == "gas-random" && row.num("iteration") == 0)
      random_iter0 = row.num("ber");
  }
  CHECK(mmse_iter0 == doctest::Approx(mmse_ber));  // same seeds, same decision
  // Random start is a fair coin per bit.
  const double sigma = std::sqrt(0.25 / (400.0 * 4.0));
  CHECK(std::abs(random_iter0 - 0.5) < 3.0 * sigma);
  // The running best can only improve.
  CHECK(mmse_final <= mmse_iter0 + 1e-12);
}

TEST_CASE("gas tracks mld within monte-carlo noise on a small sweep") {
  const ExperimentOutput out = run_experiment(parse_config(
      "scenario = ris-gain\n"
      "r_list = 4\n"
      "n = 3\n"
      "l = 3\n"
      "blocks = 2000\n"
      "snr_db = -5\n"
      "detectors = mmse,mld,gas\n"
      "gas_patience = 12\n"
      "seed = 7\n"));
  const std::vector<Row> rows = parse_csv(out.main_text);
  REQUIRE(rows.size() == 3);
  const double mmse = rows[0].num("ber");
  const double mld = rows[1].num("ber");
  const double gas = rows[2].num("ber");
  const double bits = rows[0].num("bits_total");
  const double sigma = std::sqrt(mld * (1.0 - mld) / bits);
  CHECK(mld <= gas + 1e-12);  // MLD is the optimum of the shared metric
  CHECK(gas <= mmse + 3.0 * sigma);
  CHECK(gas <= mld + 0.10 * mld + 3.0 * sigma);
}

TEST_CASE("trace export is gated and well-formed") {
  ExperimentConfig cfg = parse_config(
      "scenario = ris-gain\n"
      "r_list = 4\n"
      "n = 3\n"
      "l = 3\n"
      "blocks = 5\n"
      "snr_db = 0\n"
      "detectors = gas\n"
      "trace_out = trace.csv\n"
      "seed = 13\n");
  const ExperimentOutput out = run_experiment(cfg);
  std::istringstream is(out.trace_text);
  std::string line;
  long rows = 0;
  while (std::getline(is, line)) {
    std::size_t commas = 0;
    for (char ch : line) commas += ch == ',';
    CHECK(commas == 7);
    ++rows;
  }
  CHECK(rows >= 5);

  CHECK_THROWS_AS(parse_config("scenario = ris-gain\ntrace_out = t.csv\nsnr_db = 0,5\n"),
                  ConfigError);
  CHECK_THROWS_AS(parse_config("scenario = convergence\ntrace_out = t.csv\nsnr_db = 0\n"),
                  ConfigError);
}

TEST_CASE("resources budget and query outputs") {
  const ExperimentOutput budget = run_experiment(parse_config(
      "scenario = resources\n"
      "n_list = 2\n"
      "m_list = 3\n"
      "l_list = 2\n"));
  CHECK(budget.main_text == "n,m,l,h,rz,crz,ccrz,iqft\n2,3,2,5,3,6,6,1\n");

  const ExperimentOutput queries = run_experiment(parse_config(
      "scenario = resources\n"
      "resources_mode = queries\n"
      "n = 3\n"
      "l = 3\n"
      "r = 2\n"
      "blocks = 8\n"
      "snr_db = 0\n"
      "gas_patience = 5\n"
      "seed = 17\n"));
  const std::vector<Row> rows = parse_csv(queries.main_text);
  REQUIRE(rows.size() == 8);
  for (const Row& row : rows) CHECK(row.num("classical") >= 2);
}

TEST_CASE("qubo dump scenario emits the documented format") {
  const ExperimentOutput out = run_experiment(parse_config(
      "scenario = dump-qubo\n"
      "n = 3\n"
      "l = 3\n"
      "r = 2\n"
      "snr_db = 0\n"
      "seed = 19\n"));
  CHECK(out.main_text.rfind("const ", 0) == 0);
  const std::vector<Row> unused = {};
  (void)unused;
  // Linear rows for every variable plus in-band couplings.
  std::istringstream is(out.main_text);
  std::string line;
  long lines = 0;
  while (std::getline(is, line)) ++lines;
  CHECK(lines == 1 + 3 + 3);  // const + 3 linear + 3 couplings at n=3, l=3
}

TEST_CASE("noise scenario emits one row per gas variant") {
  const ExperimentOutput out = run_experiment(parse_config(
      "scenario = noise\n"
      "n = 3\n"
      "l = 3\n"
      "r = 2\n"
      "blocks = 30\n"
      "snr_db = -5\n"
      "detectors = mmse,gas\n"
      "gas_patience = 5\n"
      "seed = 23\n"));
  const std::vector<Row> rows = parse_csv(out.main_text);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].str("detector") == "mmse");
  CHECK(rows[1].str("detector") == "gas-ideal");
  CHECK(rows[2].str("detector") == "gas-depolarizing");
  CHECK(rows[3].str("detector") == "gas-readout");
}
