// Acceptance suite: one test case per stated criterion, each printing a
// single [AC-n] PASS/FAIL line with the measured quantities.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ccgwl/errors.hpp"
#include "ccgwl/experiment.hpp"
#include "ccgwl/meanings.hpp"
#include "test_util.hpp"

using namespace ccgwl;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(const char* id, bool pass, const std::string& detail) {
  std::printf("[%s] %s — %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
}

const logic::PropertyInventory& inv() {
  static const logic::PropertyInventory i = logic::PropertyInventory::defaults();
  return i;
}

// The default experiment configuration (the shipped defaults, untouched).
experiment::ExperimentConfig default_config() {
  return experiment::config_from_kv(KeyValueConfig::parse(experiment::default_config_text()));
}

// One overhypothesis training campaign on the default dataset: per-restart
// belief trajectories and end-state probes. Shared by AC-3 and AC-5.
struct OverhypCampaign {
  std::vector<std::vector<double>> beliefs;  // [restart][0..T]
  int modifier_color_wins = 0;
  int noun_shape_wins = 0;
  int restarts = 0;
};

const OverhypCampaign& overhyp_campaign() {
  static const OverhypCampaign campaign = [] {
    OverhypCampaign c;
    c.restarts = 20;
    auto cfg = default_config();
    scene::DatasetConfig dc = cfg.dataset;
    dc.seed = mix_seed(cfg.master_seed, 0xd5ull);
    auto ds = scene::generate_dataset(dc);
    for (int r = 0; r < c.restarts; ++r) {
      std::vector<const scene::ReferenceTrial*> order;
      for (const auto& t : ds.train) order.push_back(&t);
      Rng rng(mix_seed(cfg.master_seed, 0x0edeull, static_cast<uint64_t>(r)));
      rng.shuffle(order);

      learner::LearnerConfig lc = cfg.overhyp;
      lc.mode = learner::Mode::Overhypothesis;
      lc.seed = mix_seed(cfg.master_seed, 0x0feull, static_cast<uint64_t>(r));
      learner::OnlineLearner model(lc, dc.inventory);
      std::vector<double> curve{model.belief()};
      for (const auto* trial : order) {
        (void)model.observe(*trial);
        curve.push_back(model.belief());
      }
      c.beliefs.push_back(std::move(curve));

      auto modifier = model.probe_novel_word(learner::ProbeFrame::Modifier);
      auto noun = model.probe_novel_word(learner::ProbeFrame::Noun);
      using logic::PropertyType;
      if (modifier[PropertyType::Color] > modifier[PropertyType::Shape]) {
        c.modifier_color_wins += 1;
      }
      if (noun[PropertyType::Shape] > noun[PropertyType::Color]) c.noun_shape_wins += 1;
    }
    return c;
  }();
  return campaign;
}

// The full paired experiment at shipped defaults. Shared by AC-4.
const experiment::ExperimentResult& default_experiment() {
  static const experiment::ExperimentResult result = [] {
    auto cfg = default_config();
    cfg.jobs = 0;  // all cores
    return experiment::run_experiment(cfg);
  }();
  return result;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("AC-1 parser exactness against brute force") {
  const auto t0 = Clock::now();
  Rng rng(20260811);
  const std::vector<std::string> pool{"a", "b", "c"};
  const auto utterances = testutil::all_utterances(pool, 4);
  int lexicons = 0, comparisons = 0, mismatches = 0;
  for (int round = 0; round < 1000; ++round) {
    auto lex = testutil::random_lexicon(rng, pool, 3, inv());
    ++lexicons;
    for (const auto& u : utterances) {
      auto chart = testutil::flatten(grammar::parse_all(u, lex));
      auto oracle = testutil::brute_force_parses(u, lex);
      ++comparisons;
      if (chart != oracle) ++mismatches;
    }
  }
  const double elapsed = seconds_since(t0);
  const bool pass = mismatches == 0 && elapsed < 30.0;
  report("AC-1", pass,
         std::to_string(lexicons) + " lexicons x " + std::to_string(utterances.size()) +
             " utterances (len<=4), " + std::to_string(mismatches) + " mismatches in " +
             std::to_string(comparisons) + " comparisons, " + std::to_string(elapsed) + " s");
  CHECK(mismatches == 0);
  CHECK(elapsed < 30.0);
}

TEST_CASE("AC-2 log-linear distribution contract") {
  // Normalization within 1e-9 and shift invariance on random lexicons.
  Rng rng(42);
  const std::vector<std::string> pool{"a", "b"};
  double worst_sum_err = 0.0, worst_shift_err = 0.0;
  for (int round = 0; round < 200; ++round) {
    auto lex = testutil::random_lexicon(rng, pool, 3, inv());
    grammar::Lexicon shifted = lex;
    for (int id = 0; id < shifted.size(); ++id) shifted.add_weight(id, 13.25);
    for (const auto& u : testutil::all_utterances(pool, 3)) {
      std::vector<std::pair<grammar::Derivation, double>> dist;
      try {
        dist = grammar::parse_distribution(u, lex);
      } catch (const NoParseError&) {
        continue;
      }
      double total = 0.0;
      for (const auto& [d, p] : dist) total += p;
      worst_sum_err = std::max(worst_sum_err, std::abs(total - 1.0));
      auto dist2 = grammar::parse_distribution(u, shifted);
      for (size_t i = 0; i < dist.size(); ++i) {
        worst_shift_err = std::max(worst_shift_err,
                                   std::abs(dist[i].second - dist2[i].second));
      }
      if (grammar::best_parse(u, lex).leaf_entries !=
          grammar::best_parse(u, shifted).leaf_entries) {
        worst_shift_err = 1.0;
      }
    }
  }

  // The two-parse case with scores (1.0, 0.0).
  grammar::Lexicon lex;
  lex.add(grammar::LexicalEntry{"ball", grammar::Category::np(),
                                logic::noun_meaning(*inv().descriptor("sphere")), 1.0});
  lex.add(grammar::LexicalEntry{"ball", grammar::Category::np(),
                                logic::noun_meaning(*inv().descriptor("cube")), 0.0});
  std::vector<std::string> u{"ball"};
  auto dist = grammar::parse_distribution(u, lex);
  const double p_hi = dist[0].second, p_lo = dist[1].second;
  const double err_hi = std::abs(p_hi - 0.7311), err_lo = std::abs(p_lo - 0.2689);

  const bool pass =
      worst_sum_err < 1e-9 && worst_shift_err < 1e-9 && err_hi <= 1e-4 && err_lo <= 1e-4;
  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "sum err %.2e, shift err %.2e, two-parse probs (%.6f, %.6f) vs (0.7311, 0.2689)",
                worst_sum_err, worst_shift_err, p_hi, p_lo);
  report("AC-2", pass, buf);
  CHECK(worst_sum_err < 1e-9);
  CHECK(worst_shift_err < 1e-9);
  CHECK(err_hi <= 1e-4);
  CHECK(err_lo <= 1e-4);
}

TEST_CASE("AC-3 belief trajectory over 20 restarts") {
  const auto t0 = Clock::now();
  const auto& campaign = overhyp_campaign();
  const size_t points = campaign.beliefs.front().size();
  std::vector<double> mean(points, 0.0);
  for (const auto& curve : campaign.beliefs) {
    for (size_t k = 0; k < points; ++k) mean[k] += curve[k];
  }
  for (auto& m : mean) m /= static_cast<double>(campaign.restarts);

  const double at0 = mean[0];
  const double at50 = mean[50];

  // Window-10 moving average; non-decreasing up to double-precision noise.
  std::vector<double> smooth;
  for (size_t k = 0; k + 10 <= points; ++k) {
    double s = 0.0;
    for (size_t j = 0; j < 10; ++j) s += mean[k + j];
    smooth.push_back(s / 10.0);
  }
  double max_decrease = 0.0;
  for (size_t k = 1; k < smooth.size(); ++k) {
    max_decrease = std::max(max_decrease, smooth[k - 1] - smooth[k]);
  }
  const double elapsed = seconds_since(t0);

  const bool pass = std::abs(at0 - 0.5) <= 0.01 && at50 > 0.9 && max_decrease <= 1e-9 &&
                    elapsed < 300.0;
  char buf[220];
  std::snprintf(buf, sizeof(buf),
                "belief(0)=%.4f (target 0.5+-0.01), belief(50)=%.4f (>0.9), max smoothed "
                "decrease %.2e (<=1e-9 fp slack), %d restarts, %.1f s",
                at0, at50, max_decrease, campaign.restarts, elapsed);
  report("AC-3", pass, buf);
  CHECK(std::abs(at0 - 0.5) <= 0.01);
  CHECK(at50 > 0.9);
  CHECK(max_decrease <= 1e-9);
  CHECK(elapsed < 300.0);
}

TEST_CASE("AC-4 performance gap at shipped defaults") {
  const auto t0 = Clock::now();
  const auto& result = default_experiment();
  const double elapsed = seconds_since(t0);

  double peak = 0.0;
  int peak_trial = 0;
  for (const auto& p : result.gap_curve) {
    if (p.trial > 100) break;
    if (p.mean > peak) {
      peak = p.mean;
      peak_trial = p.trial;
    }
  }
  const double final_gap = result.gap_curve.back().mean;

  const bool in_band = peak >= 0.05 && peak <= 0.20;
  const bool pass = in_band && final_gap < peak && elapsed < 900.0;
  char buf[220];
  std::snprintf(buf, sizeof(buf),
                "peak gap %.4f at trial %d (band [0.05, 0.20]), final gap %.4f (< peak), "
                "50 restarts/mode, %.0f s",
                peak, peak_trial, final_gap, elapsed);
  report("AC-4", pass, buf);
  CHECK(peak >= 0.05);
  CHECK(peak <= 0.20);  // see the analysis note printed below on failure
  CHECK(final_gap < peak);
  CHECK(elapsed < 900.0);
  if (peak > 0.20) {
    std::printf(
        "[AC-4] note: the peak exceeds the stated band at the shipped defaults; the\n"
        "       prior-seeded learner resolves nearly every induction ambiguity on first\n"
        "       exposure once its belief forms, while the random-init baseline resolves\n"
        "       each one by coin flip, and this speed difference is invariant to the\n"
        "       temperature. The band is unreachable without changing pinned defaults.\n");
  }
}

TEST_CASE("AC-5 novel-word probes across restarts") {
  const auto& campaign = overhyp_campaign();
  const double threshold = 0.95 * campaign.restarts;
  const bool pass = campaign.modifier_color_wins >= threshold &&
                    campaign.noun_shape_wins >= threshold;
  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "modifier frame: color>shape in %d/%d restarts; noun frame: shape>color in "
                "%d/%d (need >=95%%)",
                campaign.modifier_color_wins, campaign.restarts, campaign.noun_shape_wins,
                campaign.restarts);
  report("AC-5", pass, buf);
  CHECK(campaign.modifier_color_wins >= threshold);
  CHECK(campaign.noun_shape_wins >= threshold);
}

TEST_CASE("AC-6 concentration oracle agreement") {
  Rng rng(606);
  const std::vector<std::string> pool{"blue", "red", "ball", "cube", "dax", "wug", "fep"};
  double worst = 0.0;
  for (int round = 0; round < 100; ++round) {
    auto lex = testutil::random_lexicon(rng, pool, 3, inv());
    const double tau = rng.uniform_real(0.2, 3.0);
    auto table = overhyp::compute_concentrations(
        lex, overhyp::PropertyOntology::make(inv(), lex), tau, 1.0, 1.0);
    auto naive = testutil::naive_concentrations(lex, inv(), tau);
    for (logic::PropertyType t : inv().types()) {
      const auto& got = table.alpha_s_given_t(t);
      const auto& want = naive.alpha_st.at(t);
      for (size_t c = 0; c < got.size(); ++c) {
        worst = std::max(worst, std::abs(got[c] - want[c]));
      }
    }
    for (const auto& value : inv().all_values()) {
      const auto& got = table.alpha_w_given_v(value.value);
      for (const auto& [word, want] : naive.alpha_wv.at(value.value)) {
        worst = std::max(worst, std::abs(got.at(word) - want));
      }
    }
  }
  const bool pass = worst < 1e-12;
  char buf[120];
  std::snprintf(buf, sizeof(buf), "100 random lexicons, max |alpha - naive| = %.3e (< 1e-12)",
                worst);
  report("AC-6", pass, buf);
  CHECK(worst < 1e-12);
}

TEST_CASE("AC-7 perceptron margin property") {
  using grammar::Category;
  using grammar::LexicalEntry;
  auto np = Category::np();
  auto np_np = Category::slash(np, np);
  scene::Scene scene{{{0, "blue", "sphere", "rubber", "small"},
                      {1, "red", "sphere", "rubber", "small"}}};
  std::vector<std::string> u{"the", "blue", "ball"};

  bool exact = true;
  double worst_margin_err = 0.0;
  // Single-violating-pair constructions over a range of initial weights.
  for (double w_good : {0.0, -0.5, 0.25}) {
    for (double w_bad : {0.0, 0.5, -0.25}) {
      grammar::Lexicon lex;
      lex.add(LexicalEntry{"the", np_np, logic::determiner_meaning(), 0.0});
      lex.add(LexicalEntry{"blue", np_np, logic::modifier_meaning(*inv().descriptor("blue")),
                           w_good});
      lex.add(LexicalEntry{"blue", np_np, logic::modifier_meaning(*inv().descriptor("sphere")),
                           w_bad});
      lex.add(LexicalEntry{"ball", np, logic::noun_meaning(*inv().descriptor("sphere")), 0.0});
      auto derivations = grammar::parse_all(u, lex);
      REQUIRE(derivations.size() == 2);
      const auto& good = derivations[0].leaf_entries[1] == 1 ? derivations[0] : derivations[1];
      const auto& bad = derivations[0].leaf_entries[1] == 1 ? derivations[1] : derivations[0];
      const double before =
          grammar::derivation_score(good, lex) - grammar::derivation_score(bad, lex);
      if (before >= 1.0) continue;  // not a violating construction
      auto rep = learner::perceptron_update(u, 0, scene, lex, 1.0);
      const double after =
          grammar::derivation_score(good, lex) - grammar::derivation_score(bad, lex);
      // phi(g) - phi(b) = (+1, -1) on the two "blue" entries: squared norm 2.
      worst_margin_err = std::max(worst_margin_err, std::abs((after - before) - 2.0));
      exact = exact && rep.applied && (after - before) == 2.0;
    }
  }

  // No-op cases leave all weights bit-identical.
  bool noop_exact = true;
  {
    grammar::Lexicon lex;
    lex.add(LexicalEntry{"the", np_np, logic::determiner_meaning(), 0.0});
    lex.add(LexicalEntry{"blue", np_np, logic::modifier_meaning(*inv().descriptor("blue")),
                         3.0});
    lex.add(LexicalEntry{"blue", np_np, logic::modifier_meaning(*inv().descriptor("sphere")),
                         0.0});
    lex.add(LexicalEntry{"ball", np, logic::noun_meaning(*inv().descriptor("sphere")), 0.0});
    const auto before = lex.fingerprint();
    auto rep = learner::perceptron_update(u, 0, scene, lex, 1.0);  // margin satisfied
    noop_exact = noop_exact && !rep.applied && lex.fingerprint() == before;
    auto rep2 = learner::perceptron_update(u, 1, scene, lex, 1.0);  // G empty
    noop_exact = noop_exact && !rep2.applied && lex.fingerprint() == before;
  }

  const bool pass = exact && noop_exact;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "margin gain == |phi(g)-phi(b)|^2 exactly (max err %.1e); no-op cases "
                "bit-identical: %s",
                worst_margin_err, noop_exact ? "yes" : "no");
  report("AC-7", pass, buf);
  CHECK(exact);
  CHECK(noop_exact);
}

TEST_CASE("AC-8 experiment determinism") {
  // Identical config and master seed; the job count must not matter either.
  auto cfg = experiment::config_from_kv(KeyValueConfig::parse(
      "dataset.train 80\n"
      "dataset.test 40\n"
      "experiment.restarts 6\n"
      "experiment.bootstrap_resamples 500\n"
      "experiment.seed 99\n"));
  auto dir_a = std::filesystem::temp_directory_path() / "ccgwl_ac8_a";
  auto dir_b = std::filesystem::temp_directory_path() / "ccgwl_ac8_b";
  std::filesystem::remove_all(dir_a);
  std::filesystem::remove_all(dir_b);

  cfg.jobs = 2;
  emit_report(experiment::run_experiment(cfg), dir_a);
  cfg.jobs = 1;
  emit_report(experiment::run_experiment(cfg), dir_b);

  bool identical = true;
  std::string first_diff;
  for (const char* name :
       {"accuracy_base.csv", "accuracy_overhyp.csv", "gap.csv", "belief.csv"}) {
    if (slurp(dir_a / name) != slurp(dir_b / name)) {
      identical = false;
      if (first_diff.empty()) first_diff = name;
    }
  }
  report("AC-8", identical,
         identical ? "byte-identical CSVs across two runs (jobs 2 vs 1)"
                   : "CSV mismatch in " + first_diff);
  CHECK(identical);
}
