#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ccgwl/induction.hpp"
#include "ccgwl/overhypothesis.hpp"
#include "ccgwl/rng.hpp"

namespace ccgwl::learner {

enum class Mode { Base, Overhypothesis };

std::string_view to_string(Mode m);
std::optional<Mode> parse_mode(std::string_view s);

enum class ProbeFrame { Modifier, Noun };

struct LearnerConfig {
  Mode mode = Mode::Overhypothesis;
  double tau = 0.25;   // concentration temperature
  double rho_s = 1.0;  // inert under predictive means; kept in configuration
  double rho_w = 1.0;
  double margin = 1.0;               // perceptron margin gamma
  double base_init_epsilon = 0.001;  // base mode: theta ~ U(0, epsilon)
  double prior_scale = 1.0;          // overhypothesis mode: theta = kappa * P(t,v|s,w)
  // Let induction propose material/size meanings too. Off by default: such
  // candidates validate in degenerate scenes and, with few values per type,
  // the value prior 1/|values(t)| then outbids every color or shape reading.
  bool distractor_candidates = false;
  uint64_t seed = 0;
};

struct InducedTokenLog {
  std::string token;
  int pool = 0;       // candidates passing the syntactic constraint
  int surviving = 0;  // after the validation filter
  std::vector<std::string> winners;  // entries inserted for this token
};

struct TrialOutcome {
  int trial = 0;
  bool skipped = false;         // induction failed; nothing learned
  bool parsed_before = false;   // pre-trial lexicon produced some parse
  bool valid_before = false;    // ... including a validating one
  bool correct_before = false;  // pre-trial referent prediction was right
  std::vector<InducedTokenLog> induced;
  std::vector<int> added_entries;
  bool updated = false;      // perceptron changed at least one weight
  double update_norm = 0.0;  // L2 of the weight delta
  double belief = 0.5;       // p(color | NP/NP) after the trial
};

struct UpdateReport {
  bool applied = false;
  std::map<int, double> deltas;  // entry id -> weight change
  double l2() const;
};

// Margin perceptron over the derivations of one trial: G holds derivations
// validating to {referent}, B the rest; the update is the mean feature
// vector of violating good parses minus the mean of violating bad ones.
// No-op when G or B is empty or every pair satisfies the margin.
UpdateReport perceptron_update(const std::vector<std::string>& utterance, int referent,
                               const scene::Scene& scene, grammar::Lexicon& lexicon,
                               double margin);

// The incremental word learner: validation-driven lexical induction,
// prior-seeded (or random) candidate weights, winner insertion, and a
// perceptron update per trial.
class OnlineLearner {
 public:
  OnlineLearner(LearnerConfig config, logic::PropertyInventory inventory);

  TrialOutcome observe(const scene::ReferenceTrial& trial);

  // Referent prediction for evaluation: best parse under the current
  // lexicon; the denotation must be a singleton, otherwise nullopt. Never
  // mutates state; unknown words simply fail to a nullopt.
  std::optional<int> predict_referent(const std::vector<std::string>& utterance,
                                      const scene::Scene& scene) const;

  // Marginal P(t | frame) for a fresh unseen token; uniform in base mode.
  std::map<logic::PropertyType, double> probe_novel_word(ProbeFrame frame) const;

  double belief() const;

  const grammar::Lexicon& lexicon() const { return lexicon_; }
  const overhyp::ConcentrationTable& concentrations() const { return table_; }
  const LearnerConfig& config() const { return config_; }
  const logic::PropertyInventory& inventory() const { return inventory_; }
  int trials_seen() const { return trials_; }
  uint64_t fingerprint() const { return lexicon_.fingerprint(); }

  // Rebuilds a learner around a saved lexicon (probe / resumed evaluation).
  static OnlineLearner restore(LearnerConfig config, logic::PropertyInventory inventory,
                               grammar::Lexicon lexicon);

  // Candidate weight initialization, switched by mode. Replaceable so tests
  // can prove both modes share every other state transition.
  using WeightSeeder =
      std::function<double(const induction::CandidateEntry&, const std::string& token)>;
  void set_weight_seeder(WeightSeeder seeder) { seeder_ = std::move(seeder); }

 private:
  double default_seed_weight(const induction::CandidateEntry& candidate,
                             const std::string& token);
  void refresh_table();

  LearnerConfig config_;
  logic::PropertyInventory inventory_;
  grammar::Lexicon lexicon_;
  overhyp::ConcentrationTable table_;
  induction::InductionConfig induction_config_;
  WeightSeeder seeder_;
  Rng rng_;
  int trials_ = 0;
};

}  // namespace ccgwl::learner
