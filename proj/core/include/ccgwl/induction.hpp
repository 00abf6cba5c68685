#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ccgwl/chart.hpp"
#include "ccgwl/dataset.hpp"
#include "ccgwl/meanings.hpp"

namespace ccgwl::induction {

// A proposed lexical entry for a gap token. Weight is always zero at
// creation; the learner seeds weights afterwards.
struct CandidateEntry {
  grammar::LexicalEntry entry;
  std::optional<logic::PropertyDescriptor> property;
};

struct TokenCandidates {
  std::string token;
  std::vector<CandidateEntry> candidates;  // survivors of both constraints
  int pool_size = 0;                       // candidates passing the syntactic constraint
};

struct InductionResult {
  bool success = false;
  std::vector<TokenCandidates> tokens;  // gap tokens in utterance order
};

struct InductionConfig {
  // Bootstrap words that are never re-inducted (the seeded determiner).
  std::set<std::string> frozen_words;
  // Property types eligible for candidate meanings. Defaults to the types
  // utterances actually exercise; distractor attributes (material, size) can
  // be opted in, at the cost of letting them win validation in degenerate
  // scenes.
  std::vector<logic::PropertyType> candidate_types{logic::PropertyType::Color,
                                                   logic::PropertyType::Shape};
};

// Candidate generation for tokens that block a validating parse. Gap tokens
// are first the tokens with no entries at all; if every token is known (or
// no combination over the minimal gaps validates), every non-frozen token
// becomes a gap. Candidates come from the noun template NP : lambda x. v(x)
// and the modifier template NP/NP : lambda p. lambda x. and(p(x), v(x)) over
// every inventory value, keeping only candidates that take part in at least
// one full derivation D with V(L_D) = {referent}. The persistent lexicon is
// never mutated. success=false when no combination validates.
InductionResult generate_candidates(const std::vector<std::string>& utterance, int referent,
                                    const scene::Scene& scene, const grammar::Lexicon& lexicon,
                                    const logic::PropertyInventory& inventory,
                                    const InductionConfig& config = {});

// The categories a token at `position` can take such that some complete
// NP-rooted category-level parse of the utterance exists, with other tokens
// ranging over their known categories (or the {NP, NP/NP} templates when
// unknown). Subset of {NP, NP/NP}, in that order.
std::vector<grammar::Category> syntactic_slot(const std::vector<std::string>& utterance,
                                              int position, const grammar::Lexicon& lexicon);

}  // namespace ccgwl::induction
