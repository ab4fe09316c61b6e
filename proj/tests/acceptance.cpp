// Acceptance suite: one test case per criterion. Every suite is the same code
// path as `rqwl experiment <name>` with the default seed.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <iostream>

#include "rqwl/experiments.hpp"

using namespace rqwl;

namespace {

ExperimentReport run_and_print(const std::string& name, const ExperimentOptions& options = {}) {
  const ExperimentReport report = run_experiment(name, options);
  std::cout << "== " << name << " (" << report.rows.size() << " rows, " << report.discrepancies
            << " discrepancies)\n";
  if (report.rows.size() <= 40) std::cout << report.to_csv();
  std::cout << "summary: " << report.summary.dump() << "\n" << std::flush;
  return report;
}

int column(const ExperimentReport& r, const std::string& name) {
  for (size_t i = 0; i < r.columns.size(); ++i) {
    if (r.columns[i] == name) return static_cast<int>(i);
  }
  FAIL("missing column " << name);
  return -1;
}

}  // namespace

TEST_CASE("1: bijective pebble game, (k1,k2)-OWL and formulas agree") {
  const auto r = run_and_print("three-way");
  CHECK(r.discrepancies == 0);
  CHECK(r.summary.at("sampled_pairs").get<int>() == 200);
  CHECK(r.summary.at("max_rounds").get<int>() == 3);
}

TEST_CASE("2: CFI isomorphism follows twist parity") {
  const auto r = run_and_print("cfi-parity");
  CHECK(r.discrepancies == 0);
  CHECK(r.rows.size() == 4);
}

TEST_CASE("3: hierarchy separations on B^2, K3 and P9") {
  const auto naive = run_and_print("hierarchy-separations");
  CHECK(naive.discrepancies == 0);
  REQUIRE(naive.rows.size() == 8);
  const int cr = column(naive, "cr_winner");
  const int owl = column(naive, "owl_distinguishes");
  // (base, k1, k2, cops win) in suite order.
  const std::vector<std::tuple<std::string, int, int, bool>> expected{
      {"B2", 1, 1, true},  {"B2", 0, 2, false}, {"K3", 0, 3, true},  {"K3", 2, 0, false},
      {"K3", 1, 1, false}, {"K3", 0, 2, false}, {"P9", 2, 0, true},  {"P9", 1, 1, false}};
  for (size_t i = 0; i < expected.size(); ++i) {
    const auto& row = naive.rows[i];
    const auto& [base, k1, k2, cops] = expected[i];
    CAPTURE(i);
    CHECK(row[1].get<std::string>() == base);
    CHECK(row[2].get<int>() == k1);
    CHECK(row[3].get<int>() == k2);
    CHECK(row[cr].get<std::string>() == (cops ? "Cops" : "Robber"));
    CHECK(row[owl].get<bool>() == cops);
  }
  ExperimentOptions stream;
  stream.engine = Engine::kStream;
  const auto streamed = run_and_print("hierarchy-separations", stream);
  CHECK(streamed.discrepancies == 0);
  CHECK(streamed.rows == naive.rows);
}

TEST_CASE("4: robber survival equals Duplicator win on the CFI pair") {
  const auto r = run_and_print("cr-bp-bridge");
  CHECK(r.discrepancies == 0);
  // P3 and K3, k in {2,3} (all splits with k1 + k2 = k), r in 0..4.
  CHECK(r.rows.size() == 2 * (3 + 4) * 5);
}

TEST_CASE("5: rounds to stabilization respect (k2+1) n^k1 - 1") {
  const auto r = run_and_print("iteration-bound");
  CHECK(r.discrepancies == 0);
  CHECK(r.rows.size() == 400);
}

TEST_CASE("6: streaming and naive verdicts agree; peak cells follow the space law") {
  const auto r = run_and_print("stream-vs-naive");
  CHECK(r.discrepancies == 0);
  CHECK(r.summary.at("pairs").get<int>() == 200);
  CHECK(r.summary.at("agreements").get<int>() == 200);
  CHECK(r.summary.at("max_c").get<double>() <= 4.0);
  CHECK(r.summary.at("ratio_strictly_decreasing").get<bool>());
}

TEST_CASE("7: BP_(0,2) and BP_(1,1) match (neighborhood) degree sequences") {
  const auto r = run_and_print("degree-sequences");
  CHECK(r.discrepancies == 0);
}

TEST_CASE("8: C^(0,d+1) and C^(1,d-1) identify small graphs of tree-depth d") {
  const auto r = run_and_print("treedepth-identification");
  CHECK(r.discrepancies == 0);
  const int conflicts = column(r, "conflicts");
  const int asserted = column(r, "asserted");
  int checked = 0;
  for (const auto& row : r.rows) {
    if (!row[asserted].get<bool>()) continue;
    ++checked;
    CHECK(row[conflicts].get<int>() == 0);
  }
  CHECK(checked == 5);
}

TEST_CASE("9: k-WL and (k+1)-OWL distinguish the same pairs") {
  const auto r = run_and_print("wl-owl");
  CHECK(r.discrepancies == 0);
  CHECK(r.rows.size() == 4);
}
