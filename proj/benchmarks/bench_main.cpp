#include <benchmark/benchmark.h>

#include "ccgwl/dataset.hpp"
#include "ccgwl/experiment.hpp"
#include "ccgwl/learner.hpp"
#include "ccgwl/meanings.hpp"

namespace {

using namespace ccgwl;

const logic::PropertyInventory& inv() {
  static const logic::PropertyInventory i = logic::PropertyInventory::defaults();
  return i;
}

// A lexicon with `extra` ambiguous entries per content word.
grammar::Lexicon ambiguous_lexicon(int extra) {
  using grammar::Category;
  grammar::Lexicon lex;
  Category np = Category::np();
  lex.add(grammar::LexicalEntry{"the", Category::slash(np, np), logic::determiner_meaning(),
                                0.0});
  const auto values = inv().all_values();
  for (int k = 0; k <= extra; ++k) {
    lex.add(grammar::LexicalEntry{
        "blue", Category::slash(np, np),
        logic::modifier_meaning(values[static_cast<size_t>(k)]), 0.1 * k});
    lex.add(grammar::LexicalEntry{
        "ball", np, logic::noun_meaning(values[static_cast<size_t>(k + 10)]), 0.1 * k});
  }
  return lex;
}

void BM_ParseAll(benchmark::State& state) {
  auto lex = ambiguous_lexicon(static_cast<int>(state.range(0)));
  const std::vector<std::string> u{"the", "blue", "ball"};
  for (auto _ : state) {
    auto derivations = grammar::parse_all(u, lex);
    benchmark::DoNotOptimize(derivations);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ParseAll)->Arg(0)->Arg(2)->Arg(5);

void BM_BetaReduce(benchmark::State& state) {
  auto redex = logic::Term::application(
      logic::determiner_meaning(),
      logic::Term::application(logic::modifier_meaning(*inv().descriptor("blue")),
                               logic::noun_meaning(*inv().descriptor("sphere"))));
  for (auto _ : state) {
    auto t = logic::beta_reduce(redex);
    benchmark::DoNotOptimize(t);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_BetaReduce);

void BM_GenerateDataset(benchmark::State& state) {
  scene::DatasetConfig config;
  config.train_size = static_cast<int>(state.range(0));
  config.test_size = 0;
  for (auto _ : state) {
    auto ds = scene::generate_dataset(config);
    benchmark::DoNotOptimize(ds);
    config.seed += 1;
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GenerateDataset)->Arg(100)->Arg(400);

void BM_ObserveTrial(benchmark::State& state) {
  scene::DatasetConfig config;
  config.train_size = 400;
  config.test_size = 0;
  config.seed = 7;
  auto ds = scene::generate_dataset(config);
  learner::LearnerConfig lc;
  lc.seed = 3;
  size_t i = 0;
  learner::OnlineLearner model(lc, inv());
  for (auto _ : state) {
    auto outcome = model.observe(ds.train[i]);
    benchmark::DoNotOptimize(outcome);
    i = (i + 1) % ds.train.size();
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ObserveTrial);

void BM_ComputeConcentrations(benchmark::State& state) {
  scene::DatasetConfig config;
  config.train_size = 200;
  config.test_size = 0;
  config.seed = 11;
  auto ds = scene::generate_dataset(config);
  learner::LearnerConfig lc;
  lc.seed = 5;
  learner::OnlineLearner model(lc, inv());
  for (const auto& t : ds.train) model.observe(t);
  const auto& lex = model.lexicon();
  auto ontology = overhyp::PropertyOntology::make(inv(), lex);
  for (auto _ : state) {
    auto table = overhyp::compute_concentrations(lex, ontology, 0.25, 1.0, 1.0);
    benchmark::DoNotOptimize(table);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ComputeConcentrations);

void BM_PredictReferent(benchmark::State& state) {
  scene::DatasetConfig config;
  config.train_size = 200;
  config.test_size = 100;
  config.seed = 13;
  auto ds = scene::generate_dataset(config);
  learner::LearnerConfig lc;
  lc.seed = 5;
  learner::OnlineLearner model(lc, inv());
  for (const auto& t : ds.train) model.observe(t);
  size_t i = 0;
  for (auto _ : state) {
    auto p = model.predict_referent(ds.test[i].utterance, ds.test[i].scene);
    benchmark::DoNotOptimize(p);
    i = (i + 1) % ds.test.size();
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_PredictReferent);

}  // namespace

BENCHMARK_MAIN();
