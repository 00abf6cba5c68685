#include "ccgwl/learner.hpp"

#include <algorithm>
#include <cmath>

#include "ccgwl/errors.hpp"
#include "ccgwl/meanings.hpp"

namespace ccgwl::learner {

using grammar::Derivation;
using grammar::Lexicon;

std::string_view to_string(Mode m) { return m == Mode::Base ? "base" : "overhyp"; }

std::optional<Mode> parse_mode(std::string_view s) {
  if (s == "base") return Mode::Base;
  if (s == "overhyp" || s == "overhypothesis") return Mode::Overhypothesis;
  return std::nullopt;
}

double UpdateReport::l2() const {
  double s = 0.0;
  for (const auto& [id, d] : deltas) s += d * d;
  return std::sqrt(s);
}

namespace {

bool validates(const Derivation& d, const scene::Scene& scene, int referent) {
  try {
    return scene::validate(d.logical_form, scene) == std::set<int>{referent};
  } catch (const EvaluationError&) {
    return false;
  }
}

UpdateReport perceptron_core(const std::vector<Derivation>& derivations, int referent,
                             const scene::Scene& scene, Lexicon& lexicon, double margin) {
  UpdateReport report;
  std::vector<const Derivation*> good, bad;
  for (const auto& d : derivations) {
    (validates(d, scene, referent) ? good : bad).push_back(&d);
  }
  if (good.empty() || bad.empty()) return report;

  std::vector<double> good_scores(good.size()), bad_scores(bad.size());
  for (size_t i = 0; i < good.size(); ++i) {
    good_scores[i] = grammar::derivation_score(*good[i], lexicon);
  }
  for (size_t i = 0; i < bad.size(); ++i) {
    bad_scores[i] = grammar::derivation_score(*bad[i], lexicon);
  }

  std::vector<const Derivation*> violating_good, violating_bad;
  for (size_t g = 0; g < good.size(); ++g) {
    for (size_t b = 0; b < bad.size(); ++b) {
      if (good_scores[g] - bad_scores[b] < margin) {
        violating_good.push_back(good[g]);
        break;
      }
    }
  }
  for (size_t b = 0; b < bad.size(); ++b) {
    for (size_t g = 0; g < good.size(); ++g) {
      if (good_scores[g] - bad_scores[b] < margin) {
        violating_bad.push_back(bad[b]);
        break;
      }
    }
  }
  if (violating_good.empty()) return report;

  // Integer counts first so entries shared between both means cancel exactly.
  const double gn = static_cast<double>(violating_good.size());
  const double bn = static_cast<double>(violating_bad.size());
  std::map<int, int> good_counts, bad_counts;
  for (const auto* d : violating_good) {
    for (const auto& [id, count] : d->features()) good_counts[id] += count;
  }
  for (const auto* d : violating_bad) {
    for (const auto& [id, count] : d->features()) bad_counts[id] += count;
  }
  std::map<int, double> delta;
  for (const auto& [id, c] : good_counts) delta[id] += static_cast<double>(c) / gn;
  for (const auto& [id, c] : bad_counts) delta[id] -= static_cast<double>(c) / bn;
  for (const auto& [id, dd] : delta) {
    if (dd == 0.0) continue;
    lexicon.add_weight(id, dd);
    report.deltas[id] = dd;
  }
  report.applied = !report.deltas.empty();
  return report;
}

std::string entry_summary(const grammar::LexicalEntry& e) {
  return e.category.str() + " : " + e.meaning.str();
}

}  // namespace

UpdateReport perceptron_update(const std::vector<std::string>& utterance, int referent,
                               const scene::Scene& scene, Lexicon& lexicon, double margin) {
  auto derivations = grammar::parse_all(utterance, lexicon);
  return perceptron_core(derivations, referent, scene, lexicon, margin);
}

OnlineLearner::OnlineLearner(LearnerConfig config, logic::PropertyInventory inventory)
    : config_(config),
      inventory_(std::move(inventory)),
      table_(overhyp::compute_concentrations(
          lexicon_, overhyp::PropertyOntology::make(inventory_, lexicon_), config.tau,
          config.rho_s, config.rho_w)),
      rng_(mix_seed(config.seed, 0x6c6561726eull)) {
  // Bootstrap: the determiner, property-free and never re-inducted.
  grammar::Category np = grammar::Category::np();
  lexicon_.add(grammar::LexicalEntry{"the", grammar::Category::slash(np, np),
                                     logic::determiner_meaning(), 0.0});
  induction_config_.frozen_words = {"the"};
  if (config_.distractor_candidates) {
    induction_config_.candidate_types.assign(logic::kAllPropertyTypes.begin(),
                                             logic::kAllPropertyTypes.end());
  }
  refresh_table();
}

OnlineLearner OnlineLearner::restore(LearnerConfig config, logic::PropertyInventory inventory,
                                     grammar::Lexicon lexicon) {
  OnlineLearner learner(config, std::move(inventory));
  learner.lexicon_ = std::move(lexicon);
  learner.refresh_table();
  return learner;
}

void OnlineLearner::refresh_table() {
  table_ = overhyp::compute_concentrations(
      lexicon_, overhyp::PropertyOntology::make(inventory_, lexicon_), config_.tau,
      config_.rho_s, config_.rho_w);
}

double OnlineLearner::default_seed_weight(const induction::CandidateEntry& candidate,
                                          const std::string& token) {
  if (config_.mode == Mode::Base) {
    return rng_.uniform_real(0.0, config_.base_init_epsilon);
  }
  if (!candidate.property) return 0.0;
  auto posterior = overhyp::predictive(candidate.entry.category, token, table_);
  return config_.prior_scale * posterior.prob(*candidate.property);
}

double OnlineLearner::belief() const { return overhyp::belief_color_given_modifier(table_); }

TrialOutcome OnlineLearner::observe(const scene::ReferenceTrial& trial) {
  TrialOutcome out;
  out.trial = trials_++;
  out.belief = belief();

  const auto& u = trial.utterance;
  const int referent = trial.referent;

  auto predicted = predict_referent(u, trial.scene);
  out.correct_before = predicted && *predicted == referent;

  std::vector<Derivation> derivations;
  try {
    derivations = grammar::parse_all(u, lexicon_);
  } catch (const UnknownWordError&) {
  }
  out.parsed_before = !derivations.empty();
  for (const auto& d : derivations) {
    if (validates(d, trial.scene, referent)) {
      out.valid_before = true;
      break;
    }
  }

  if (!out.valid_before) {
    auto induced = induction::generate_candidates(u, referent, trial.scene, lexicon_, inventory_,
                                                  induction_config_);
    if (!induced.success) {
      out.skipped = true;
      return out;
    }

    // Seed candidate weights (prior in overhypothesis mode, small random
    // values in base mode), insert temporarily, and keep only the entries
    // of the best validating derivation.
    Lexicon scratch = lexicon_;
    struct Pending {
      size_t token_slot;
      const induction::CandidateEntry* candidate;
      double weight;
    };
    std::map<int, Pending> pending;
    for (size_t slot = 0; slot < induced.tokens.size(); ++slot) {
      auto& tc = induced.tokens[slot];
      out.induced.push_back(InducedTokenLog{tc.token, tc.pool_size,
                                            static_cast<int>(tc.candidates.size()),
                                            {}});
      for (const auto& cand : tc.candidates) {
        const double w = seeder_ ? seeder_(cand, tc.token) : default_seed_weight(cand, tc.token);
        grammar::LexicalEntry e = cand.entry;
        e.weight = w;
        const int id = scratch.add(std::move(e));
        pending.emplace(id, Pending{slot, &cand, w});
      }
    }

    auto augmented = grammar::parse_all(u, scratch);
    const Derivation* winner = nullptr;
    for (const auto& d : augmented) {
      if (!validates(d, trial.scene, referent)) continue;
      if (!winner || grammar::derivation_preferred(d, *winner)) winner = &d;
    }
    if (!winner) {
      out.skipped = true;  // candidates validated at weight zero; unreachable
      return out;
    }
    for (int id : winner->leaf_entries) {
      auto it = pending.find(id);
      if (it == pending.end()) continue;
      grammar::LexicalEntry e = it->second.candidate->entry;
      e.weight = it->second.weight;
      const int new_id = lexicon_.add(std::move(e));
      out.added_entries.push_back(new_id);
      out.induced[it->second.token_slot].winners.push_back(
          entry_summary(lexicon_.entry(new_id)));
    }
  }

  auto report = perceptron_update(u, referent, trial.scene, lexicon_, config_.margin);
  out.updated = report.applied;
  out.update_norm = report.l2();

  refresh_table();
  out.belief = belief();
  return out;
}

std::optional<int> OnlineLearner::predict_referent(const std::vector<std::string>& utterance,
                                                   const scene::Scene& scene) const {
  std::optional<Derivation> best;
  try {
    best = grammar::best_parse(utterance, lexicon_);
  } catch (const UnknownWordError&) {
    return std::nullopt;
  } catch (const NoParseError&) {
    return std::nullopt;
  }
  std::set<int> denoted;
  try {
    denoted = scene::validate(best->logical_form, scene);
  } catch (const EvaluationError&) {
    return std::nullopt;
  }
  if (denoted.size() != 1) return std::nullopt;
  return *denoted.begin();
}

std::map<logic::PropertyType, double> OnlineLearner::probe_novel_word(ProbeFrame frame) const {
  const auto types = inventory_.types();
  std::map<logic::PropertyType, double> out;
  if (config_.mode == Mode::Base) {
    for (auto t : types) out[t] = 1.0 / static_cast<double>(types.size());
    return out;
  }
  std::string token = "novelword";
  while (lexicon_.contains_word(token)) token += "x";
  grammar::Category np = grammar::Category::np();
  grammar::Category cat =
      frame == ProbeFrame::Modifier ? grammar::Category::slash(np, np) : np;
  auto posterior = overhyp::predictive(cat, token, table_);
  for (auto t : types) out[t] = posterior.marginal(t);
  return out;
}

}  // namespace ccgwl::learner
