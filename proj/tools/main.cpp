// ccgwl: synthetic reference games, online word learners, and the
// experiment harness behind one command-line tool.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ccgwl/dataset.hpp"
#include "ccgwl/errors.hpp"
#include "ccgwl/experiment.hpp"
#include "ccgwl/learner.hpp"

namespace {

using json = nlohmann::json;
namespace fs = std::filesystem;
using namespace ccgwl;

struct GenerateArgs {
  int colors = 10, shapes = 10, materials = 3, sizes = 3;
  int train = 400, test = 100;
  uint64_t seed = 0;
  bool test_known_words_only = false;
  std::string out;
};

int run_generate(const GenerateArgs& args) {
  scene::DatasetConfig config;
  config.inventory =
      logic::PropertyInventory::with_counts(args.colors, args.shapes, args.materials, args.sizes);
  config.train_size = args.train;
  config.test_size = args.test;
  config.seed = args.seed;
  config.test_known_words_only = args.test_known_words_only;

  scene::Dataset dataset = scene::generate_dataset(config);
  scene::write_dataset_dir(dataset, config.inventory, args.out);
  std::cout << "wrote " << dataset.train.size() << " train / " << dataset.test.size()
            << " test trials to " << args.out << "\n";
  return 0;
}

json inventory_to_json(const logic::PropertyInventory& inv) {
  json j;
  for (auto t : inv.types()) j[std::string(logic::to_string(t))] = inv.values(t);
  return j;
}

logic::PropertyInventory inventory_from_json(const json& j) {
  logic::PropertyInventory inv;
  for (auto t : logic::kAllPropertyTypes) {
    const std::string key(logic::to_string(t));
    if (j.contains(key)) inv.set_values(t, j.at(key).get<std::vector<std::string>>());
  }
  return inv;
}

void save_state(const learner::OnlineLearner& model, const fs::path& path) {
  const auto& cfg = model.config();
  json j;
  j["mode"] = std::string(learner::to_string(cfg.mode));
  j["tau"] = cfg.tau;
  j["rho_s"] = cfg.rho_s;
  j["rho_w"] = cfg.rho_w;
  j["kappa"] = cfg.prior_scale;
  j["margin"] = cfg.margin;
  j["epsilon"] = cfg.base_init_epsilon;
  j["distractor_candidates"] = cfg.distractor_candidates;
  j["seed"] = cfg.seed;
  j["inventory"] = inventory_to_json(model.inventory());
  j["lexicon"] = model.lexicon().to_tsv();
  std::ofstream out(path);
  if (!out) throw IoError("cannot write state file " + path.string());
  out << j.dump(2) << '\n';
}

learner::OnlineLearner load_state(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read state file " + path.string());
  json j = json::parse(in);
  learner::LearnerConfig cfg;
  auto mode = learner::parse_mode(j.at("mode").get<std::string>());
  if (!mode) throw ConfigError("bad mode in state file");
  cfg.mode = *mode;
  cfg.tau = j.value("tau", 0.25);
  cfg.rho_s = j.value("rho_s", 1.0);
  cfg.rho_w = j.value("rho_w", 1.0);
  cfg.prior_scale = j.value("kappa", 1.0);
  cfg.margin = j.value("margin", 1.0);
  cfg.base_init_epsilon = j.value("epsilon", 0.001);
  cfg.distractor_candidates = j.value("distractor_candidates", false);
  cfg.seed = j.value("seed", 0ull);
  auto inventory = inventory_from_json(j.at("inventory"));
  auto lexicon =
      grammar::Lexicon::from_tsv(j.at("lexicon").get<std::string>(), inventory);
  return learner::OnlineLearner::restore(cfg, std::move(inventory), std::move(lexicon));
}

struct TrainArgs {
  std::string mode = "overhyp";
  std::string dataset;
  uint64_t seed = 0;
  std::string log_path, state_path, belief_csv;
  double tau = 0.25, rho_s = 1.0, rho_w = 1.0, kappa = 1.0, margin = 1.0, epsilon = 0.001;
  bool distractor_candidates = false;
};

int run_train(const TrainArgs& args) {
  auto mode = learner::parse_mode(args.mode);
  if (!mode) throw ConfigError("unknown mode '" + args.mode + "'");

  auto loaded = scene::read_dataset_dir(args.dataset);
  learner::LearnerConfig cfg;
  cfg.mode = *mode;
  cfg.tau = args.tau;
  cfg.rho_s = args.rho_s;
  cfg.rho_w = args.rho_w;
  cfg.prior_scale = args.kappa;
  cfg.margin = args.margin;
  cfg.base_init_epsilon = args.epsilon;
  cfg.distractor_candidates = args.distractor_candidates;
  cfg.seed = args.seed;

  learner::OnlineLearner model(cfg, loaded.inventory);

  std::ofstream log_out, belief_out;
  if (!args.log_path.empty()) {
    log_out.open(args.log_path);
    if (!log_out) throw IoError("cannot write log " + args.log_path);
  }
  if (!args.belief_csv.empty()) {
    belief_out.open(args.belief_csv);
    if (!belief_out) throw IoError("cannot write belief trace " + args.belief_csv);
    belief_out << "trial_index,p_color_given_mod\n";
  }

  int correct_pre = 0, skipped = 0;
  for (const auto& trial : loaded.dataset.train) {
    auto outcome = model.observe(trial);
    correct_pre += outcome.correct_before ? 1 : 0;
    skipped += outcome.skipped ? 1 : 0;
    if (log_out) {
      json j;
      j["trial"] = outcome.trial;
      j["parsed"] = outcome.parsed_before;
      j["valid"] = outcome.valid_before;
      j["correct"] = outcome.correct_before;
      j["skipped"] = outcome.skipped;
      j["induced"] = json::array();
      for (const auto& tok : outcome.induced) {
        j["induced"].push_back(json{{"token", tok.token},
                                    {"pool", tok.pool},
                                    {"surviving", tok.surviving},
                                    {"winners", tok.winners}});
      }
      j["added_entries"] = outcome.added_entries;
      j["update_norm"] = outcome.update_norm;
      j["belief"] = outcome.belief;
      log_out << j.dump() << '\n';
    }
    if (belief_out) {
      belief_out << outcome.trial << ',' << outcome.belief << '\n';
    }
  }

  int correct_test = 0;
  for (const auto& trial : loaded.dataset.test) {
    auto predicted = model.predict_referent(trial.utterance, trial.scene);
    correct_test += (predicted && *predicted == trial.referent) ? 1 : 0;
  }

  std::cout << "mode " << args.mode << ": " << loaded.dataset.train.size() << " trials ("
            << skipped << " skipped), lexicon size " << model.lexicon().size() << "\n";
  std::cout << "online (pre-update) train accuracy: "
            << static_cast<double>(correct_pre) /
                   static_cast<double>(loaded.dataset.train.size())
            << "\n";
  if (!loaded.dataset.test.empty()) {
    std::cout << "test accuracy: "
              << static_cast<double>(correct_test) /
                     static_cast<double>(loaded.dataset.test.size())
              << "\n";
  }
  std::cout << "final belief p(color|NP/NP): " << model.belief() << "\n";

  if (!args.state_path.empty()) save_state(model, args.state_path);
  return 0;
}

struct ExperimentArgs {
  std::string config_path, out_dir;
  int restarts = -1;
  int jobs = -1;
  std::string write_default;
};

int run_experiment_cmd(const ExperimentArgs& args) {
  if (!args.write_default.empty()) {
    std::ofstream out(args.write_default);
    if (!out) throw IoError("cannot write " + args.write_default);
    out << experiment::default_config_text();
    std::cout << "wrote default config to " << args.write_default << "\n";
    return 0;
  }
  experiment::ExperimentConfig config = args.config_path.empty()
                                            ? experiment::config_from_kv(KeyValueConfig::parse(""))
                                            : experiment::load_config(args.config_path);
  if (args.restarts > 0) config.restarts = args.restarts;
  if (args.jobs >= 0) config.jobs = args.jobs;

  auto result = experiment::run_experiment(config);
  experiment::emit_report(result, args.out_dir);

  std::cout << "restarts: " << result.base_runs.size() << "\n";
  std::cout << "peak gap: " << result.peak_gap << " at trial " << result.peak_gap_trial << "\n";
  std::cout << "final gap: " << result.final_gap << "\n";
  std::cout << "final accuracy (base / overhyp): " << result.final_base_accuracy << " / "
            << result.final_overhyp_accuracy << "\n";
  std::cout << "final belief: " << result.final_belief << "\n";
  std::cout << "report written to " << args.out_dir << "\n";
  return 0;
}

struct ProbeArgs {
  std::string state_path;
  std::string frame = "modifier";
};

int run_probe(const ProbeArgs& args) {
  auto model = load_state(args.state_path);
  learner::ProbeFrame frame;
  if (args.frame == "modifier") {
    frame = learner::ProbeFrame::Modifier;
  } else if (args.frame == "noun") {
    frame = learner::ProbeFrame::Noun;
  } else {
    throw ConfigError("unknown frame '" + args.frame + "' (expected modifier or noun)");
  }
  auto dist = model.probe_novel_word(frame);
  for (const auto& [type, p] : dist) {
    std::cout << logic::to_string(type) << " " << p << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"grounded reference-game word learning"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "sample a reference-game dataset");
  generate->add_option("--colors", gen.colors, "color inventory size")->capture_default_str();
  generate->add_option("--shapes", gen.shapes, "shape inventory size")->capture_default_str();
  generate->add_option("--materials", gen.materials, "material inventory size")
      ->capture_default_str();
  generate->add_option("--sizes", gen.sizes, "size inventory size")->capture_default_str();
  generate->add_option("--train", gen.train, "train trial count")->capture_default_str();
  generate->add_option("--test", gen.test, "test trial count")->capture_default_str();
  generate->add_option("--seed", gen.seed, "dataset seed")->capture_default_str();
  generate->add_flag("--test-known-words-only", gen.test_known_words_only,
                     "restrict test utterances to words seen in training");
  generate->add_option("--out", gen.out, "output directory")->required();

  TrainArgs train;
  auto* train_cmd = app.add_subcommand("train", "run one learner over a dataset");
  train_cmd->add_option("--mode", train.mode, "base or overhyp")->capture_default_str();
  train_cmd->add_option("--dataset", train.dataset, "dataset directory from 'generate'")
      ->required();
  train_cmd->add_option("--seed", train.seed, "learner seed")->capture_default_str();
  train_cmd->add_option("--log", train.log_path, "per-trial JSONL log");
  train_cmd->add_option("--save-state", train.state_path, "write learner state JSON");
  train_cmd->add_option("--belief-csv", train.belief_csv,
                        "per-trial belief trace (trial_index,p_color_given_mod)");
  train_cmd->add_option("--tau", train.tau, "concentration temperature")->capture_default_str();
  train_cmd->add_option("--rho-s", train.rho_s, "syntax mass parameter")->capture_default_str();
  train_cmd->add_option("--rho-w", train.rho_w, "word mass parameter")->capture_default_str();
  train_cmd->add_option("--kappa", train.kappa, "prior-to-weight scale")->capture_default_str();
  train_cmd->add_option("--margin", train.margin, "perceptron margin")->capture_default_str();
  train_cmd->add_option("--epsilon", train.epsilon, "base-mode init range")
      ->capture_default_str();
  train_cmd->add_flag("--distractor-candidates", train.distractor_candidates,
                      "let induction propose material/size meanings too");

  ExperimentArgs exp;
  auto* exp_cmd = app.add_subcommand("experiment", "paired base/overhypothesis restarts");
  exp_cmd->add_option("--config", exp.config_path, "key-value config file");
  exp_cmd->add_option("--out", exp.out_dir, "report directory");
  exp_cmd->add_option("--restarts", exp.restarts, "override experiment.restarts");
  exp_cmd->add_option("--jobs", exp.jobs, "override experiment.jobs");
  exp_cmd->add_option("--write-default-config", exp.write_default,
                      "write a commented default config and exit");

  ProbeArgs probe;
  auto* probe_cmd = app.add_subcommand("probe", "novel-word probe on a saved state");
  probe_cmd->add_option("--state", probe.state_path, "state file from train --save-state")
      ->required();
  probe_cmd->add_option("--frame", probe.frame, "modifier or noun")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate->parsed()) return run_generate(gen);
    if (train_cmd->parsed()) return run_train(train);
    if (exp_cmd->parsed()) {
      if (exp.write_default.empty() && exp.out_dir.empty()) {
        std::cerr << "experiment: --out is required\n";
        return 2;
      }
      return run_experiment_cmd(exp);
    }
    if (probe_cmd->parsed()) return run_probe(probe);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
