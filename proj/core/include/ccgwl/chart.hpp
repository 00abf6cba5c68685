#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ccgwl/lexicon.hpp"

namespace ccgwl::grammar {

// A node of a derivation tree: either a lexicon leaf or a forward
// application of two children.
struct DerivationNode {
  Category category;
  logic::Term term;
  int entry_id = -1;     // leaves only
  int token_index = -1;  // leaves only
  std::shared_ptr<const DerivationNode> left, right;

  bool is_leaf() const { return entry_id >= 0; }
};

// A complete NP-rooted analysis of an utterance.
struct Derivation {
  std::shared_ptr<const DerivationNode> root;
  logic::Term logical_form;
  double score = 0.0;              // sum of leaf weights at parse time
  std::vector<int> leaf_entries;   // entry ids in token order

  // Feature counts phi(D): entry id -> number of leaves using it.
  std::map<int, int> features() const;

  // Encodes the bracketing for deterministic tie-breaking.
  std::string shape() const;
};

// Sum of current lexicon weights over the derivation's leaves.
double derivation_score(const Derivation& d, const Lexicon& lexicon);

// Forward application: X/Y + Y => X with beta-reduced function application.
// Returns nullopt when the categories do not combine; throws
// CompositionError when they combine but the semantic types clash (an
// ill-formed pairing of entries).
std::optional<std::pair<Category, logic::Term>> forward_apply(
    const Category& left_cat, const logic::Term& left_term, const Category& right_cat,
    const logic::Term& right_term);

// All complete NP-rooted derivations of the utterance, by exhaustive chart
// parsing over every combination of lexicon entries. Combinations whose
// semantic types clash are skipped. Throws UnknownWordError for a token with
// no entries. Output order is deterministic given entry insertion order.
std::vector<Derivation> parse_all(std::span<const std::string> utterance,
                                  const Lexicon& lexicon);

// Softmax over derivation scores (max-subtracted). Throws NoParseError when
// no derivation exists.
std::vector<std::pair<Derivation, double>> parse_distribution(
    std::span<const std::string> utterance, const Lexicon& lexicon);

// Argmax by score; ties broken by leaf entry ids (lexicographic), then by
// bracketing shape, so equal lexicons always reproduce the same parse.
Derivation best_parse(std::span<const std::string> utterance, const Lexicon& lexicon);

// The same deterministic order used by best_parse, exposed for winner
// selection among filtered derivation sets. Returns true when a should be
// preferred over b.
bool derivation_preferred(const Derivation& a, const Derivation& b);

}  // namespace ccgwl::grammar
