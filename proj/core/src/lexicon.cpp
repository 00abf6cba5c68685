#include "ccgwl/lexicon.hpp"

#include <cmath>
#include <cstdio>

#include "ccgwl/errors.hpp"

namespace ccgwl::grammar {

namespace {

std::string format_weight(double w) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", w);
  return buf;
}

uint64_t fnv1a(uint64_t h, const void* data, size_t n) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

uint64_t fnv1a(uint64_t h, const std::string& s) { return fnv1a(h, s.data(), s.size()); }

}  // namespace

int Lexicon::add(LexicalEntry entry) {
  if (entry.word.empty()) throw MalformedEntryError("empty wordform");
  if (!std::isfinite(entry.weight)) {
    throw MalformedEntryError("non-finite weight for '" + entry.word + "'");
  }
  if (!category_admits(entry.category, entry.meaning.type())) {
    throw MalformedEntryError("meaning of type " + entry.meaning.type().str() +
                              " does not fit category " + entry.category.str() + " for '" +
                              entry.word + "'");
  }
  if (find(entry.word, entry.category, entry.meaning)) {
    throw MalformedEntryError("duplicate lexicon entry for '" + entry.word + "'");
  }
  const int id = size();
  auto it = by_word_.find(entry.word);
  if (it == by_word_.end()) {
    words_.push_back(entry.word);
    by_word_[entry.word] = {id};
  } else {
    it->second.push_back(id);
  }
  entries_.push_back(std::move(entry));
  return id;
}

void Lexicon::set_weight(int id, double w) {
  if (!std::isfinite(w)) throw MalformedEntryError("non-finite weight");
  entries_[static_cast<size_t>(id)].weight = w;
}

const std::vector<int>& Lexicon::entries_for(std::string_view word) const {
  static const std::vector<int> empty;
  auto it = by_word_.find(word);
  return it == by_word_.end() ? empty : it->second;
}

bool Lexicon::contains_word(std::string_view word) const {
  return by_word_.find(word) != by_word_.end();
}

std::optional<int> Lexicon::find(std::string_view word, const Category& cat,
                                 const logic::Term& meaning) const {
  for (int id : entries_for(word)) {
    const auto& e = entries_[static_cast<size_t>(id)];
    if (e.category == cat && e.meaning == meaning) return id;
  }
  return std::nullopt;
}

std::string Lexicon::to_tsv() const {
  std::string out;
  for (const auto& e : entries_) {
    out += e.word;
    out += '\t';
    out += e.category.str();
    out += '\t';
    out += e.meaning.str();
    out += '\t';
    out += format_weight(e.weight);
    out += '\n';
  }
  return out;
}

Lexicon Lexicon::from_tsv(std::string_view text, const logic::PropertyInventory& inventory) {
  Lexicon lex;
  size_t start = 0;
  while (start < text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (line.empty()) continue;

    std::vector<std::string_view> fields;
    size_t f = 0;
    while (true) {
      size_t tab = line.find('\t', f);
      if (tab == std::string_view::npos) {
        fields.push_back(line.substr(f));
        break;
      }
      fields.push_back(line.substr(f, tab - f));
      f = tab + 1;
    }
    if (fields.size() != 4) throw IoError("malformed lexicon record: " + std::string(line));

    LexicalEntry e{std::string(fields[0]), Category::parse(fields[1]),
                   logic::parse_term(fields[2], inventory), std::stod(std::string(fields[3]))};
    lex.add(std::move(e));
  }
  return lex;
}

uint64_t Lexicon::fingerprint() const {
  uint64_t h = 0xcbf29ce484222325ull;
  for (const auto& e : entries_) {
    h = fnv1a(h, e.word);
    h = fnv1a(h, e.category.str());
    h = fnv1a(h, e.meaning.str());
    double w = e.weight;
    h = fnv1a(h, &w, sizeof(w));
  }
  return h;
}

}  // namespace ccgwl::grammar
