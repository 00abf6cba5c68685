#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ccgwl/dataset.hpp"
#include "ccgwl/kvconfig.hpp"
#include "ccgwl/learner.hpp"

namespace ccgwl::experiment {

struct ExperimentConfig {
  scene::DatasetConfig dataset;
  learner::LearnerConfig base;     // mode forced to Base
  learner::LearnerConfig overhyp;  // mode forced to Overhypothesis
  int restarts = 50;
  int eval_every = 1;  // online accuracy cadence in trials
  int bootstrap_resamples = 10000;
  int jobs = 0;  // 0 = hardware concurrency
  uint64_t master_seed = 0;
};

// Loads the key-value config format; unknown keys are rejected. The
// CCGWL_SEED environment variable, when set, overrides experiment.seed.
ExperimentConfig load_config(const std::filesystem::path& path);
ExperimentConfig config_from_kv(const KeyValueConfig& kv);

// Serialized default-config template (documented keys).
std::string default_config_text();

struct CurvePoint {
  int trial = 0;
  double mean = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
};

// One learner run: metric values at every evaluation point.
struct RunRecord {
  std::vector<double> accuracy;
  std::vector<double> belief;
};

struct ExperimentResult {
  std::vector<int> eval_trials;  // t = 0 is the pre-training point
  std::vector<RunRecord> base_runs, overhyp_runs;
  std::vector<CurvePoint> base_curve, overhyp_curve;
  std::vector<CurvePoint> gap_curve;     // mean overhyp - base, paired by restart
  std::vector<CurvePoint> belief_curve;  // overhypothesis runs only

  double peak_gap = 0.0;
  int peak_gap_trial = 0;
  double final_gap = 0.0;
  double final_base_accuracy = 0.0;
  double final_overhyp_accuracy = 0.0;
  double final_belief = 0.0;
};

// Eq-5 style online accuracy: fraction of test trials whose predicted
// referent matches the ground truth. Throws ConfigError on an empty test set.
double online_accuracy(const learner::OnlineLearner& learner,
                       const std::vector<scene::ReferenceTrial>& test);

// Runs `restarts` paired base/overhypothesis learners over restart-shuffled
// train orders of one fixed dataset, evaluating on the fixed test set after
// every `eval_every` trials, then aggregates curves with bootstrap 95% CIs.
// Restarts execute on a worker pool; results are deterministic for a given
// config and master seed regardless of the job count.
ExperimentResult run_experiment(const ExperimentConfig& config);

// Writes accuracy_base.csv, accuracy_overhyp.csv, gap.csv, belief.csv,
// accuracy.svg, gap_belief.svg and summary.txt into outdir.
void emit_report(const ExperimentResult& result, const std::filesystem::path& outdir);

}  // namespace ccgwl::experiment
