#include "ccgwl/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "ccgwl/errors.hpp"

namespace ccgwl::experiment {

namespace {

constexpr uint64_t kDatasetStream = 0xd5ull;
constexpr uint64_t kOrderStream = 0x0edeull;
constexpr uint64_t kBaseStream = 0xba5eull;
constexpr uint64_t kOverhypStream = 0x0feull;
constexpr uint64_t kBootstrapStream = 0xb007ull;

std::vector<int> eval_points(int train_size, int eval_every) {
  std::vector<int> points{0};
  for (int t = eval_every; t < train_size; t += eval_every) points.push_back(t);
  if (train_size > 0) points.push_back(train_size);
  return points;
}

double mean_over(const std::vector<const std::vector<double>*>& rows, size_t k) {
  double s = 0.0;
  for (const auto* r : rows) s += (*r)[k];
  return s / static_cast<double>(rows.size());
}

double percentile(std::vector<double>& sorted, double p) {
  if (sorted.empty()) return 0.0;
  const double rank = p * static_cast<double>(sorted.size() - 1);
  const size_t lo = static_cast<size_t>(rank);
  const double frac = rank - static_cast<double>(lo);
  if (lo + 1 >= sorted.size()) return sorted.back();
  return sorted[lo] * (1.0 - frac) + sorted[lo + 1] * frac;
}

// Bootstrap the per-point mean of `values` (one row per restart) by
// resampling restarts with replacement.
std::vector<CurvePoint> bootstrap_curve(const std::vector<std::vector<double>>& values,
                                        const std::vector<int>& eval_trials, int resamples,
                                        Rng rng) {
  const size_t n = values.size();
  const size_t k_points = eval_trials.size();
  std::vector<CurvePoint> curve(k_points);
  for (size_t k = 0; k < k_points; ++k) {
    double s = 0.0;
    for (const auto& row : values) s += row[k];
    curve[k].trial = eval_trials[k];
    curve[k].mean = s / static_cast<double>(n);
  }
  if (n == 1 || resamples <= 0) {
    for (auto& p : curve) {
      p.ci_low = p.mean;
      p.ci_high = p.mean;
    }
    return curve;
  }

  std::vector<std::vector<double>> samples(k_points,
                                           std::vector<double>(static_cast<size_t>(resamples)));
  std::vector<const std::vector<double>*> picked(n);
  for (int b = 0; b < resamples; ++b) {
    for (size_t i = 0; i < n; ++i) {
      picked[i] = &values[static_cast<size_t>(rng.uniform_int(0, static_cast<int>(n) - 1))];
    }
    for (size_t k = 0; k < k_points; ++k) {
      samples[k][static_cast<size_t>(b)] = mean_over(picked, k);
    }
  }
  for (size_t k = 0; k < k_points; ++k) {
    std::sort(samples[k].begin(), samples[k].end());
    curve[k].ci_low = percentile(samples[k], 0.025);
    curve[k].ci_high = percentile(samples[k], 0.975);
  }
  return curve;
}

RunRecord run_one(const learner::LearnerConfig& config,
                  const logic::PropertyInventory& inventory,
                  const std::vector<const scene::ReferenceTrial*>& order,
                  const std::vector<scene::ReferenceTrial>& test,
                  const std::vector<int>& eval_trials) {
  learner::OnlineLearner model(config, inventory);
  RunRecord rec;
  rec.accuracy.reserve(eval_trials.size());
  rec.belief.reserve(eval_trials.size());
  size_t next_eval = 0;
  auto record_at = [&](int t) {
    while (next_eval < eval_trials.size() && eval_trials[next_eval] == t) {
      rec.accuracy.push_back(online_accuracy(model, test));
      rec.belief.push_back(model.belief());
      ++next_eval;
    }
  };
  record_at(0);
  for (size_t i = 0; i < order.size(); ++i) {
    model.observe(*order[i]);
    record_at(static_cast<int>(i) + 1);
  }
  return rec;
}

}  // namespace

double online_accuracy(const learner::OnlineLearner& learner,
                       const std::vector<scene::ReferenceTrial>& test) {
  if (test.empty()) throw ConfigError("online accuracy needs a nonempty test set");
  int correct = 0;
  for (const auto& trial : test) {
    auto predicted = learner.predict_referent(trial.utterance, trial.scene);
    if (predicted && *predicted == trial.referent) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(test.size());
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  if (config.restarts < 1) throw ConfigError("experiment.restarts must be >= 1");
  if (config.eval_every < 1) throw ConfigError("experiment.eval_every must be >= 1");

  scene::DatasetConfig dataset_config = config.dataset;
  dataset_config.seed = mix_seed(config.master_seed, kDatasetStream);
  const scene::Dataset dataset = scene::generate_dataset(dataset_config);

  ExperimentResult result;
  result.eval_trials = eval_points(config.dataset.train_size, config.eval_every);
  result.base_runs.resize(static_cast<size_t>(config.restarts));
  result.overhyp_runs.resize(static_cast<size_t>(config.restarts));

  const int jobs = config.jobs > 0
                       ? config.jobs
                       : std::max(1, static_cast<int>(std::thread::hardware_concurrency()));

  std::atomic<int> next{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;

  auto worker = [&]() {
    for (int r = next.fetch_add(1); r < config.restarts; r = next.fetch_add(1)) {
      try {
        // Restart-specific reshuffle of the fixed train set.
        std::vector<const scene::ReferenceTrial*> order;
        order.reserve(dataset.train.size());
        for (const auto& t : dataset.train) order.push_back(&t);
        Rng order_rng(mix_seed(config.master_seed, kOrderStream,
                               static_cast<uint64_t>(r)));
        order_rng.shuffle(order);

        learner::LearnerConfig base = config.base;
        base.mode = learner::Mode::Base;
        base.seed = mix_seed(config.master_seed, kBaseStream, static_cast<uint64_t>(r));
        result.base_runs[static_cast<size_t>(r)] =
            run_one(base, config.dataset.inventory, order, dataset.test, result.eval_trials);

        learner::LearnerConfig over = config.overhyp;
        over.mode = learner::Mode::Overhypothesis;
        over.seed = mix_seed(config.master_seed, kOverhypStream, static_cast<uint64_t>(r));
        result.overhyp_runs[static_cast<size_t>(r)] =
            run_one(over, config.dataset.inventory, order, dataset.test, result.eval_trials);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  const int workers = std::min(jobs, config.restarts);
  pool.reserve(static_cast<size_t>(workers));
  for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);

  const size_t k_points = result.eval_trials.size();
  std::vector<std::vector<double>> base_acc, over_acc, gap, belief;
  for (const auto& rec : result.base_runs) base_acc.push_back(rec.accuracy);
  for (const auto& rec : result.overhyp_runs) {
    over_acc.push_back(rec.accuracy);
    belief.push_back(rec.belief);
  }
  for (size_t r = 0; r < base_acc.size(); ++r) {
    std::vector<double> g(k_points);
    for (size_t k = 0; k < k_points; ++k) g[k] = over_acc[r][k] - base_acc[r][k];
    gap.push_back(std::move(g));
  }

  const int b = config.bootstrap_resamples;
  result.base_curve = bootstrap_curve(base_acc, result.eval_trials, b,
                                      Rng(mix_seed(config.master_seed, kBootstrapStream, 1)));
  result.overhyp_curve = bootstrap_curve(over_acc, result.eval_trials, b,
                                         Rng(mix_seed(config.master_seed, kBootstrapStream, 2)));
  result.gap_curve = bootstrap_curve(gap, result.eval_trials, b,
                                     Rng(mix_seed(config.master_seed, kBootstrapStream, 3)));
  result.belief_curve = bootstrap_curve(belief, result.eval_trials, b,
                                        Rng(mix_seed(config.master_seed, kBootstrapStream, 4)));

  result.peak_gap = 0.0;
  result.peak_gap_trial = 0;
  for (const auto& p : result.gap_curve) {
    if (p.mean > result.peak_gap) {
      result.peak_gap = p.mean;
      result.peak_gap_trial = p.trial;
    }
  }
  result.final_gap = result.gap_curve.back().mean;
  result.final_base_accuracy = result.base_curve.back().mean;
  result.final_overhyp_accuracy = result.overhyp_curve.back().mean;
  result.final_belief = result.belief_curve.back().mean;
  return result;
}

ExperimentConfig config_from_kv(const KeyValueConfig& kv) {
  static const std::set<std::string> allowed = {
      "dataset.colors",          "dataset.shapes",
      "dataset.materials",       "dataset.sizes",
      "dataset.train",           "dataset.test",
      "dataset.test_known_words_only",
      "learner.base.epsilon",    "learner.base.margin",
      "learner.distractor_candidates",
      "learner.overhyp.tau",     "learner.overhyp.rho_s",
      "learner.overhyp.rho_w",   "learner.overhyp.kappa",
      "learner.overhyp.margin",  "experiment.restarts",
      "experiment.eval_every",   "experiment.bootstrap_resamples",
      "experiment.jobs",         "experiment.seed"};
  kv.require_known_keys(allowed);

  ExperimentConfig cfg;
  cfg.dataset.inventory = logic::PropertyInventory::with_counts(
      kv.get_int("dataset.colors", 10), kv.get_int("dataset.shapes", 10),
      kv.get_int("dataset.materials", 3), kv.get_int("dataset.sizes", 3));
  cfg.dataset.train_size = kv.get_int("dataset.train", 400);
  cfg.dataset.test_size = kv.get_int("dataset.test", 100);
  cfg.dataset.test_known_words_only = kv.get_bool("dataset.test_known_words_only", false);

  const bool distractors = kv.get_bool("learner.distractor_candidates", false);

  cfg.base.mode = learner::Mode::Base;
  cfg.base.distractor_candidates = distractors;
  cfg.base.base_init_epsilon = kv.get_double("learner.base.epsilon", 0.001);
  cfg.base.margin = kv.get_double("learner.base.margin", 1.0);

  cfg.overhyp.mode = learner::Mode::Overhypothesis;
  cfg.overhyp.distractor_candidates = distractors;
  cfg.overhyp.tau = kv.get_double("learner.overhyp.tau", 0.25);
  cfg.overhyp.rho_s = kv.get_double("learner.overhyp.rho_s", 1.0);
  cfg.overhyp.rho_w = kv.get_double("learner.overhyp.rho_w", 1.0);
  cfg.overhyp.prior_scale = kv.get_double("learner.overhyp.kappa", 1.0);
  cfg.overhyp.margin = kv.get_double("learner.overhyp.margin", 1.0);

  cfg.restarts = kv.get_int("experiment.restarts", 50);
  cfg.eval_every = kv.get_int("experiment.eval_every", 1);
  cfg.bootstrap_resamples = kv.get_int("experiment.bootstrap_resamples", 10000);
  cfg.jobs = kv.get_int("experiment.jobs", 0);
  cfg.master_seed = kv.get_u64("experiment.seed", 0);

  if (const char* env = std::getenv("CCGWL_SEED")) {
    try {
      cfg.master_seed = std::stoull(env);
    } catch (const std::exception&) {
      throw ConfigError(std::string("CCGWL_SEED is not an unsigned integer: ") + env);
    }
  }
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  return config_from_kv(KeyValueConfig::parse_file(path));
}

std::string default_config_text() {
  return
      "# Reference-game word learning experiment\n"
      "dataset.colors 10\n"
      "dataset.shapes 10\n"
      "dataset.materials 3\n"
      "dataset.sizes 3\n"
      "dataset.train 400\n"
      "dataset.test 100\n"
      "dataset.test_known_words_only false\n"
      "\n"
      "learner.base.epsilon 0.001\n"
      "learner.base.margin 1.0\n"
      "\n"
      "# Shared by both modes: let induction propose material/size meanings.\n"
      "learner.distractor_candidates false\n"
      "\n"
      "learner.overhyp.tau 0.25\n"
      "learner.overhyp.rho_s 1.0\n"
      "learner.overhyp.rho_w 1.0\n"
      "learner.overhyp.kappa 1.0\n"
      "learner.overhyp.margin 1.0\n"
      "\n"
      "experiment.restarts 50\n"
      "experiment.eval_every 1\n"
      "experiment.bootstrap_resamples 10000\n"
      "experiment.jobs 0\n"
      "experiment.seed 0\n";
}

}  // namespace ccgwl::experiment
