#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ccgwl/chart.hpp"
#include "ccgwl/errors.hpp"
#include "ccgwl/meanings.hpp"
#include "test_util.hpp"

using namespace ccgwl;
using namespace ccgwl::grammar;
using logic::PropertyInventory;

namespace {

const PropertyInventory& inv() {
  static const PropertyInventory i = PropertyInventory::defaults();
  return i;
}

Category np() { return Category::np(); }
Category np_np() { return Category::slash(Category::np(), Category::np()); }

// The three-entry lexicon of the walkthrough: the, blue, ball.
Lexicon walkthrough_lexicon(double w_the = 0.0, double w_blue = 0.0, double w_ball = 0.0) {
  Lexicon lex;
  lex.add(LexicalEntry{"the", np_np(), logic::determiner_meaning(), w_the});
  lex.add(LexicalEntry{"blue", np_np(), logic::modifier_meaning(*inv().descriptor("blue")),
                       w_blue});
  lex.add(LexicalEntry{"ball", np(), logic::noun_meaning(*inv().descriptor("sphere")), w_ball});
  return lex;
}

}  // namespace

TEST_CASE("categories print and parse") {
  CHECK(np().str() == "NP");
  CHECK(np_np().str() == "NP/NP");
  CHECK(Category::slash(np_np(), np()).str() == "NP/NP/NP");
  CHECK(Category::slash(np(), np_np()).str() == "NP/(NP/NP)");
  for (const char* text : {"NP", "NP/NP", "NP/NP/NP", "NP/(NP/NP)"}) {
    CHECK(Category::parse(text).str() == text);
  }
  CHECK(Category::parse("NP/NP/NP") == Category::slash(np_np(), np()));
  CHECK_THROWS_AS(Category::parse("VP"), TypeError);
}

TEST_CASE("category admits the matching meaning types") {
  CHECK(category_admits(np(), logic::noun_meaning(*inv().descriptor("sphere")).type()));
  CHECK(category_admits(np(), logic::SemanticType::entity_set()));
  CHECK(category_admits(np_np(), logic::modifier_meaning(*inv().descriptor("blue")).type()));
  CHECK(category_admits(np_np(), logic::determiner_meaning().type()));
  CHECK_FALSE(category_admits(np(), logic::determiner_meaning().type()));
  CHECK_FALSE(category_admits(np_np(), logic::SemanticType::entity_set()));
}

TEST_CASE("lexicon enforces the entry invariants") {
  Lexicon lex;
  lex.add(LexicalEntry{"ball", np(), logic::noun_meaning(*inv().descriptor("sphere")), 0.0});
  CHECK_THROWS_AS(
      lex.add(LexicalEntry{"ball", np(), logic::noun_meaning(*inv().descriptor("sphere")), 1.0}),
      MalformedEntryError);
  CHECK_THROWS_AS(
      lex.add(LexicalEntry{"odd", np(), logic::determiner_meaning(), 0.0}),
      MalformedEntryError);
  CHECK_THROWS_AS(lex.add(LexicalEntry{"inf", np(),
                                       logic::noun_meaning(*inv().descriptor("cube")),
                                       std::numeric_limits<double>::infinity()}),
                  MalformedEntryError);
  lex.add(LexicalEntry{"ball", np(), logic::noun_meaning(*inv().descriptor("cube")), 0.0});
  CHECK(lex.entries_for("ball").size() == 2);
}

TEST_CASE("forward application follows the category and composes meanings") {
  auto blue = logic::modifier_meaning(*inv().descriptor("blue"));
  auto ball = logic::noun_meaning(*inv().descriptor("sphere"));
  auto combined = forward_apply(np_np(), blue, np(), ball);
  REQUIRE(combined.has_value());
  CHECK(combined->first == np());
  CHECK(combined->second.str() == "lambda x. and(sphere(x), blue(x))");

  auto root = forward_apply(np_np(), logic::determiner_meaning(), np(), combined->second);
  REQUIRE(root.has_value());
  CHECK(root->second.str() == "iota(and(sphere(x), blue(x)))");
}

TEST_CASE("forward application returns none without a functor") {
  auto ball = logic::noun_meaning(*inv().descriptor("sphere"));
  auto cube = logic::noun_meaning(*inv().descriptor("cube"));
  CHECK_FALSE(forward_apply(np(), ball, np(), cube).has_value());
  CHECK_FALSE(forward_apply(np_np(), logic::determiner_meaning(), np_np(),
                            logic::modifier_meaning(*inv().descriptor("red")))
                  .has_value());
}

TEST_CASE("matching categories with clashing types raise a composition error") {
  // NP admits both <e,t> and entity sets; the determiner wants a predicate.
  auto iota_np = logic::beta_reduce(logic::Term::application(
      logic::determiner_meaning(), logic::noun_meaning(*inv().descriptor("sphere"))));
  CHECK_THROWS_AS(forward_apply(np_np(), logic::determiner_meaning(), np(), iota_np),
                  CompositionError);
}

TEST_CASE("the walkthrough utterance has exactly one derivation") {
  auto lex = walkthrough_lexicon(0.25, 0.5, 0.125);
  std::vector<std::string> u{"the", "blue", "ball"};
  auto derivations = parse_all(u, lex);
  REQUIRE(derivations.size() == 1);
  const auto& d = derivations[0];
  CHECK(d.logical_form.str() == "iota(and(sphere(x), blue(x)))");
  CHECK(d.root->category == np());
  CHECK(d.score == doctest::Approx(0.25 + 0.5 + 0.125));
  CHECK(d.leaf_entries == std::vector<int>{0, 1, 2});
}

TEST_CASE("an unknown token raises an unknown-word error carrying it") {
  auto lex = walkthrough_lexicon();
  std::vector<std::string> u{"the", "dax", "ball"};
  try {
    parse_all(u, lex);
    FAIL("expected UnknownWordError");
  } catch (const UnknownWordError& e) {
    CHECK(e.token() == "dax");
  }
}

TEST_CASE("ambiguous entries multiply derivations, matching brute force") {
  auto lex = walkthrough_lexicon();
  lex.add(LexicalEntry{"blue", np_np(), logic::modifier_meaning(*inv().descriptor("sphere")),
                       0.0});
  lex.add(LexicalEntry{"ball", np(), logic::noun_meaning(*inv().descriptor("blue")), 0.0});
  std::vector<std::string> u{"the", "blue", "ball"};
  auto derivations = parse_all(u, lex);
  CHECK(derivations.size() == 4);
  CHECK(testutil::flatten(derivations) == testutil::brute_force_parses(u, lex));
}

TEST_CASE("chart equals brute force on randomized lexicons") {
  Rng rng(314);
  const std::vector<std::string> pool{"a", "b", "c"};
  for (int round = 0; round < 60; ++round) {
    auto lex = testutil::random_lexicon(rng, pool, 3, inv());
    for (const auto& u : testutil::all_utterances(pool, 3)) {
      CHECK(testutil::flatten(parse_all(u, lex)) == testutil::brute_force_parses(u, lex));
    }
  }
}

TEST_CASE("a single derivation has probability one") {
  auto lex = walkthrough_lexicon(1.0, 2.0, 3.0);
  std::vector<std::string> u{"the", "blue", "ball"};
  auto dist = parse_distribution(u, lex);
  REQUIRE(dist.size() == 1);
  CHECK(dist[0].second == doctest::Approx(1.0));
}

TEST_CASE("equal scores split probability evenly") {
  Lexicon lex;
  lex.add(LexicalEntry{"ball", np(), logic::noun_meaning(*inv().descriptor("sphere")), 0.5});
  lex.add(LexicalEntry{"ball", np(), logic::noun_meaning(*inv().descriptor("cube")), 0.5});
  std::vector<std::string> u{"ball"};
  auto dist = parse_distribution(u, lex);
  REQUIRE(dist.size() == 2);
  CHECK(dist[0].second == doctest::Approx(0.5));
  CHECK(dist[1].second == doctest::Approx(0.5));
}

TEST_CASE("scores (1, 0) yield the softmax pair (0.7311, 0.2689)") {
  Lexicon lex;
  lex.add(LexicalEntry{"ball", np(), logic::noun_meaning(*inv().descriptor("sphere")), 1.0});
  lex.add(LexicalEntry{"ball", np(), logic::noun_meaning(*inv().descriptor("cube")), 0.0});
  std::vector<std::string> u{"ball"};
  auto dist = parse_distribution(u, lex);
  REQUIRE(dist.size() == 2);
  // Independent evaluation of the normalized exponentials.
  const double e = std::exp(1.0);
  CHECK(dist[0].second == doctest::Approx(e / (e + 1.0)).epsilon(1e-9));
  CHECK(dist[1].second == doctest::Approx(1.0 / (e + 1.0)).epsilon(1e-9));
  CHECK(dist[0].second == doctest::Approx(0.7311).epsilon(2e-4));
  CHECK(dist[1].second == doctest::Approx(0.2689).epsilon(2e-4));
}

TEST_CASE("distribution sums to one and survives extreme scores") {
  Lexicon lex;
  lex.add(LexicalEntry{"ball", np(), logic::noun_meaning(*inv().descriptor("sphere")), 500.0});
  lex.add(LexicalEntry{"ball", np(), logic::noun_meaning(*inv().descriptor("cube")), -500.0});
  std::vector<std::string> u{"ball"};
  auto dist = parse_distribution(u, lex);
  double total = 0.0;
  for (const auto& [d, p] : dist) {
    CHECK(std::isfinite(p));
    total += p;
  }
  CHECK(std::abs(total - 1.0) < 1e-9);
}

TEST_CASE("adding a constant to every weight changes nothing but the scores") {
  Rng rng(9);
  const std::vector<std::string> pool{"a", "b"};
  auto lex = testutil::random_lexicon(rng, pool, 3, inv());
  Lexicon shifted = lex;
  for (int id = 0; id < shifted.size(); ++id) shifted.add_weight(id, 17.5);

  for (const auto& u : testutil::all_utterances(pool, 3)) {
    std::vector<std::pair<Derivation, double>> a, b;
    try {
      a = parse_distribution(u, lex);
    } catch (const NoParseError&) {
      CHECK_THROWS_AS(parse_distribution(u, shifted), NoParseError);
      continue;
    }
    b = parse_distribution(u, shifted);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].second == doctest::Approx(b[i].second).epsilon(1e-9));
    }
    CHECK(best_parse(u, lex).leaf_entries == best_parse(u, shifted).leaf_entries);
  }
}

TEST_CASE("removing an entry never adds derivations") {
  Rng rng(27);
  const std::vector<std::string> pool{"a", "b"};
  for (int round = 0; round < 20; ++round) {
    auto lex = testutil::random_lexicon(rng, pool, 3, inv());
    // Rebuild without the last entry.
    Lexicon smaller;
    for (int id = 0; id + 1 < lex.size(); ++id) {
      auto e = lex.entry(id);
      smaller.add(e);
    }
    for (const auto& u : testutil::all_utterances(pool, 2)) {
      auto big = testutil::brute_force_parses(u, lex);
      std::vector<testutil::FlatParse> small;
      try {
        small = testutil::flatten(parse_all(u, smaller));
      } catch (const UnknownWordError&) {
        continue;
      }
      for (const auto& p : small) {
        CHECK(std::find(big.begin(), big.end(), p) != big.end());
      }
      CHECK(small.size() <= big.size());
    }
  }
}

TEST_CASE("best_parse breaks ties by entry insertion order, reproducibly") {
  auto build = [] {
    Lexicon lex;
    lex.add(LexicalEntry{"the", np_np(), logic::determiner_meaning(), 0.0});
    lex.add(LexicalEntry{"blue", np_np(), logic::modifier_meaning(*inv().descriptor("blue")),
                         0.0});
    lex.add(LexicalEntry{"blue", np_np(), logic::modifier_meaning(*inv().descriptor("sphere")),
                         0.0});
    lex.add(LexicalEntry{"ball", np(), logic::noun_meaning(*inv().descriptor("sphere")), 0.0});
    lex.add(LexicalEntry{"ball", np(), logic::noun_meaning(*inv().descriptor("blue")), 0.0});
    return lex;
  };
  std::vector<std::string> u{"the", "blue", "ball"};
  auto lex = build();
  REQUIRE(parse_all(u, lex).size() == 4);  // 4-way score tie
  auto best = best_parse(u, lex);
  CHECK(best.leaf_entries == std::vector<int>{0, 1, 3});
  // Replay on an independently rebuilt equal lexicon.
  auto lex2 = build();
  CHECK(best_parse(u, lex2).leaf_entries == best.leaf_entries);

  // A higher-scoring derivation wins regardless of insertion order.
  lex.set_weight(2, 1.0);
  lex.set_weight(4, 1.0);
  CHECK(best_parse(u, lex).leaf_entries == std::vector<int>{0, 2, 4});
}

TEST_CASE("no-parse raises for distribution and best_parse") {
  Lexicon lex;
  lex.add(LexicalEntry{"the", np_np(), logic::determiner_meaning(), 0.0});
  std::vector<std::string> u{"the", "the"};
  CHECK(parse_all(u, lex).empty());
  CHECK_THROWS_AS(parse_distribution(u, lex), NoParseError);
  CHECK_THROWS_AS(best_parse(u, lex), NoParseError);
}

TEST_CASE("lexicon serialization round-trips entries and weights") {
  auto lex = walkthrough_lexicon(0.1, -2.5, 3.75e-3);
  auto text = lex.to_tsv();
  auto back = Lexicon::from_tsv(text, inv());
  REQUIRE(back.size() == lex.size());
  for (int id = 0; id < lex.size(); ++id) {
    CHECK(back.entry(id).word == lex.entry(id).word);
    CHECK(back.entry(id).category == lex.entry(id).category);
    CHECK(back.entry(id).meaning == lex.entry(id).meaning);
    CHECK(back.entry(id).weight == lex.entry(id).weight);
  }
  CHECK(back.fingerprint() == lex.fingerprint());
  CHECK(back.to_tsv() == text);
}
