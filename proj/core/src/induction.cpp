#include "ccgwl/induction.hpp"

#include <algorithm>
#include <map>

#include "ccgwl/errors.hpp"

namespace ccgwl::induction {

using grammar::Category;
using grammar::Lexicon;

namespace {

// Category-level CYK existence check: can the category assignment sets
// per position combine to a complete NP parse?
bool np_parse_exists(const std::vector<std::vector<Category>>& options) {
  const size_t n = options.size();
  std::vector<std::vector<std::vector<Category>>> cells(n,
                                                        std::vector<std::vector<Category>>(n + 1));
  for (size_t i = 0; i < n; ++i) cells[i][1] = options[i];
  for (size_t len = 2; len <= n; ++len) {
    for (size_t i = 0; i + len <= n; ++i) {
      auto& out = cells[i][len];
      for (size_t llen = 1; llen < len; ++llen) {
        for (const auto& l : cells[i][llen]) {
          if (l.is_primitive()) continue;
          for (const auto& r : cells[i + llen][len - llen]) {
            if (l.argument() != r) continue;
            Category res = l.result();
            if (std::find(out.begin(), out.end(), res) == out.end()) out.push_back(res);
          }
        }
      }
    }
  }
  const auto& roots = cells[0][n];
  return std::find(roots.begin(), roots.end(), Category::np()) != roots.end();
}

std::vector<Category> known_categories(const Lexicon& lexicon, const std::string& token) {
  std::vector<Category> cats;
  for (int id : lexicon.entries_for(token)) {
    const auto& c = lexicon.entry(id).category;
    if (std::find(cats.begin(), cats.end(), c) == cats.end()) cats.push_back(c);
  }
  return cats;
}

std::vector<Category> template_categories() {
  return {Category::np(), Category::slash(Category::np(), Category::np())};
}

std::vector<logic::PropertyDescriptor> candidate_values(
    const logic::PropertyInventory& inventory, const InductionConfig& config) {
  std::vector<logic::PropertyDescriptor> out;
  for (logic::PropertyType t : config.candidate_types) {
    for (const auto& v : inventory.values(t)) {
      out.push_back(logic::PropertyDescriptor{t, v});
    }
  }
  return out;
}

// One attempt over a fixed set of gap tokens. Returns success plus the
// surviving candidates per gap token.
bool attempt(const std::vector<std::string>& utterance, int referent,
             const scene::Scene& scene, const Lexicon& lexicon,
             const logic::PropertyInventory& inventory, const InductionConfig& config,
             const std::set<std::string>& gaps, std::vector<TokenCandidates>& out) {
  out.clear();

  // Slot categories per gap token (union over its positions).
  std::map<std::string, std::vector<Category>> slots;
  for (size_t i = 0; i < utterance.size(); ++i) {
    const auto& tok = utterance[i];
    if (!gaps.count(tok)) continue;
    for (const auto& c : syntactic_slot(utterance, static_cast<int>(i), lexicon)) {
      auto& v = slots[tok];
      if (std::find(v.begin(), v.end(), c) == v.end()) v.push_back(c);
    }
  }

  // Scratch lexicon: existing entries plus zero-weight candidates.
  Lexicon scratch = lexicon;
  struct Pending {
    size_t token_slot;   // index into out
    CandidateEntry candidate;
  };
  std::map<int, Pending> pending;  // scratch entry id -> candidate

  const Category np = Category::np();
  const Category modifier_cat = Category::slash(np, np);
  const auto values = candidate_values(inventory, config);
  std::set<std::string> seen_tokens;
  for (const auto& tok : utterance) {
    if (!gaps.count(tok) || seen_tokens.count(tok)) continue;
    seen_tokens.insert(tok);
    TokenCandidates tc;
    tc.token = tok;
    const size_t slot_index = out.size();
    const auto& allowed = slots[tok];
    for (const auto& value : values) {
      for (int tmpl = 0; tmpl < 2; ++tmpl) {
        const bool is_noun = tmpl == 0;
        const Category& cat = is_noun ? np : modifier_cat;
        if (std::find(allowed.begin(), allowed.end(), cat) == allowed.end()) continue;
        logic::Term meaning =
            is_noun ? logic::noun_meaning(value) : logic::modifier_meaning(value);
        tc.pool_size += 1;
        if (lexicon.find(tok, cat, meaning)) continue;  // already a real entry
        CandidateEntry cand{grammar::LexicalEntry{tok, cat, std::move(meaning), 0.0},
                            value};
        const int id = scratch.add(cand.entry);
        pending.emplace(id, Pending{slot_index, std::move(cand)});
      }
    }
    out.push_back(std::move(tc));
  }

  std::vector<grammar::Derivation> derivations;
  try {
    derivations = grammar::parse_all(utterance, scratch);
  } catch (const UnknownWordError&) {
    return false;  // a frozen or gap-less token has no entries at all
  }

  std::set<int> survivors;
  bool any_valid = false;
  for (const auto& d : derivations) {
    std::set<int> denoted;
    try {
      denoted = scene::validate(d.logical_form, scene);
    } catch (const EvaluationError&) {
      continue;
    }
    if (denoted != std::set<int>{referent}) continue;
    any_valid = true;
    for (int id : d.leaf_entries) {
      if (pending.count(id)) survivors.insert(id);
    }
  }
  if (!any_valid) return false;

  for (auto& [id, p] : pending) {
    if (survivors.count(id)) out[p.token_slot].candidates.push_back(std::move(p.candidate));
  }
  return true;
}

}  // namespace

std::vector<Category> syntactic_slot(const std::vector<std::string>& utterance, int position,
                                     const grammar::Lexicon& lexicon) {
  std::vector<std::vector<Category>> options(utterance.size());
  for (size_t i = 0; i < utterance.size(); ++i) {
    if (static_cast<int>(i) == position) continue;
    options[i] = known_categories(lexicon, utterance[i]);
    if (options[i].empty()) options[i] = template_categories();
  }
  std::vector<Category> result;
  for (const auto& cat : template_categories()) {
    options[static_cast<size_t>(position)] = {cat};
    if (np_parse_exists(options)) result.push_back(cat);
  }
  return result;
}

InductionResult generate_candidates(const std::vector<std::string>& utterance, int referent,
                                    const scene::Scene& scene, const grammar::Lexicon& lexicon,
                                    const logic::PropertyInventory& inventory,
                                    const InductionConfig& config) {
  InductionResult result;

  // Minimal gaps: tokens with no entries at all.
  std::set<std::string> unknown;
  for (const auto& tok : utterance) {
    if (!lexicon.contains_word(tok)) unknown.insert(tok);
  }
  for (const auto& tok : unknown) {
    if (config.frozen_words.count(tok)) return result;  // unlearnable token
  }

  // No gap at all: a validating parse already exists.
  if (unknown.empty()) {
    try {
      for (const auto& d : grammar::parse_all(utterance, lexicon)) {
        std::set<int> denoted;
        try {
          denoted = scene::validate(d.logical_form, scene);
        } catch (const EvaluationError&) {
          continue;
        }
        if (denoted == std::set<int>{referent}) {
          result.success = true;
          return result;
        }
      }
    } catch (const UnknownWordError&) {
    }
  }

  if (!unknown.empty() &&
      attempt(utterance, referent, scene, lexicon, inventory, config, unknown,
              result.tokens)) {
    result.success = true;
    return result;
  }
  result.tokens.clear();

  // Escalate: some known entries are wrong. Re-induct every non-frozen token
  // (existing entries stay usable inside combinations).
  std::set<std::string> all;
  for (const auto& tok : utterance) {
    if (!config.frozen_words.count(tok)) all.insert(tok);
  }
  if (all.empty() || all == unknown) return result;
  result.success =
      attempt(utterance, referent, scene, lexicon, inventory, config, all, result.tokens);
  if (!result.success) result.tokens.clear();
  return result;
}

}  // namespace ccgwl::induction
