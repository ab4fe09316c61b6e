#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "rqwl/streamwl.hpp"

namespace rqwl {

/// Tabular result of an experiment suite. `rows` are arrays aligned with
/// `columns`; `discrepancies` counts rows (or cases) contradicting the
/// statement under test; `summary` holds aggregate numbers.
struct ExperimentReport {
  std::string name;
  std::vector<std::string> columns;
  nlohmann::json rows = nlohmann::json::array();
  nlohmann::json summary = nlohmann::json::object();
  std::int64_t discrepancies = 0;

  nlohmann::json to_json() const;
  std::string to_csv() const;
};

/// Equivalence engine used by suites that compare configurations.
enum class Engine { kNaive, kStream };

struct ExperimentOptions {
  std::uint64_t seed = 0;
  Engine engine = Engine::kNaive;
  StreamMode stream_mode = StreamMode::kFaithful;
  std::int64_t budget = 50'000'000;
};

/// Bijective pebble game vs. (k1,k2)-OWL vs. sampled formulas: all pairs of
/// graphs with <= max_n vertices and <= 2 colors plus `sample` random pairs
/// on sample_n vertices, every configuration with k1+k2 <= 2 and r <= 3.
ExperimentReport three_way_characterization(const ExperimentOptions& options, int max_n = 4,
                                            int sample = 200, int sample_n = 5,
                                            int formulas_per_pair = 50);
/// iso_oracle(X_S(B), X_T(B)) vs. |S| = |T| mod 2 for twist sets of size <= 2.
ExperimentReport cfi_parity(const ExperimentOptions& options);
/// Cops-and-robber and OWL verdicts on the separating instances B^2, K3, P9.
/// Honors options.engine.
ExperimentReport hierarchy_separations(const ExperimentOptions& options);
/// Robber survives r rounds iff Duplicator wins r rounds on (X(B), X~(B)).
ExperimentReport cr_bp_bridge(const ExperimentOptions& options, int max_rounds = 4);
/// Rounds to stabilization vs. (k2+1) n^k1 - 1 on random graphs.
ExperimentReport iteration_bound_check(const ExperimentOptions& options, int graphs = 100,
                                       int max_n = 6);
/// Streaming vs. naive verdicts on random pairs plus the peak-cell law.
ExperimentReport stream_vs_naive(const ExperimentOptions& options, int pairs = 200,
                                 int max_n = 6);
/// BP_(0,2) and BP_(1,1) vs. (neighborhood-)degree sequences, all uncolored
/// graph pairs with <= max_n vertices.
ExperimentReport degree_sequences(const ExperimentOptions& options, int max_n = 6);
/// Conflicts of identifies_within on small tree-depth classes. With
/// Engine::kStream every pair is decided by the streaming engine (fast mode).
ExperimentReport treedepth_identification(const ExperimentOptions& options);
/// k-WL vs. (k+1)-OWL distinguishing verdicts for k in {1,2}: all pairs of
/// graphs with <= max_n vertices and <= 2 colors, and all uncolored pairs with
/// <= max_n + 1 vertices.
ExperimentReport wl_owl_equivalence(const ExperimentOptions& options, int max_n = 5);

/// Names accepted by run_experiment.
std::vector<std::string> experiment_names();
/// Throws DomainError for unknown names.
ExperimentReport run_experiment(const std::string& name, const ExperimentOptions& options);

}  // namespace rqwl
