#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ccgwl/category.hpp"
#include "ccgwl/term.hpp"

namespace ccgwl::grammar {

// One weighted lexicon entry (w, s, m, theta).
struct LexicalEntry {
  std::string word;
  Category category;
  logic::Term meaning;
  double weight = 0.0;
};

// The learner's lexicon: entries are append-only and addressed by dense
// insertion index, which doubles as the deterministic tie-break order for
// parsing. A wordform may carry any number of entries.
class Lexicon {
 public:
  // Throws MalformedEntryError when the meaning type does not fit the
  // category, when the weight is not finite, or when the (w, s, m) triple
  // already exists. Returns the new entry id.
  int add(LexicalEntry entry);

  int size() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }
  const LexicalEntry& entry(int id) const { return entries_[static_cast<size_t>(id)]; }

  double weight(int id) const { return entries_[static_cast<size_t>(id)].weight; }
  void set_weight(int id, double w);
  void add_weight(int id, double delta) { set_weight(id, weight(id) + delta); }

  // Entry ids for a wordform, in insertion order. Empty when unknown.
  const std::vector<int>& entries_for(std::string_view word) const;
  bool contains_word(std::string_view word) const;

  std::optional<int> find(std::string_view word, const Category& cat,
                          const logic::Term& meaning) const;

  // Observed wordforms, in first-insertion order.
  const std::vector<std::string>& words() const { return words_; }

  // One record per entry: word TAB category TAB term TAB weight.
  std::string to_tsv() const;
  static Lexicon from_tsv(std::string_view text, const logic::PropertyInventory& inventory);

  uint64_t fingerprint() const;

 private:
  std::vector<LexicalEntry> entries_;
  std::map<std::string, std::vector<int>, std::less<>> by_word_;
  std::vector<std::string> words_;
};

}  // namespace ccgwl::grammar
