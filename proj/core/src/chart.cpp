#include "ccgwl/chart.hpp"

#include <algorithm>
#include <cmath>

#include "ccgwl/errors.hpp"

namespace ccgwl::grammar {

std::map<int, int> Derivation::features() const {
  std::map<int, int> phi;
  for (int id : leaf_entries) phi[id] += 1;
  return phi;
}

namespace {

void shape_of(const DerivationNode& n, std::string& out) {
  if (n.is_leaf()) {
    out += 'L';
    return;
  }
  out += '(';
  shape_of(*n.left, out);
  shape_of(*n.right, out);
  out += ')';
}

void collect_leaves(const DerivationNode& n, std::vector<int>& out) {
  if (n.is_leaf()) {
    out.push_back(n.entry_id);
    return;
  }
  collect_leaves(*n.left, out);
  collect_leaves(*n.right, out);
}

// Nothrow combination used by the chart: nullopt both when categories do not
// match and when the semantic types clash.
std::optional<std::pair<Category, logic::Term>> try_apply(const Category& lc,
                                                          const logic::Term& lt,
                                                          const Category& rc,
                                                          const logic::Term& rt) {
  if (lc.is_primitive() || lc.argument() != rc) return std::nullopt;
  const logic::SemanticType& ft = lt.type();
  if (!ft.is_function() || ft.from() != rt.type()) return std::nullopt;
  return std::make_pair(lc.result(), logic::beta_reduce(logic::Term::application(lt, rt)));
}

}  // namespace

std::string Derivation::shape() const {
  std::string out;
  if (root) shape_of(*root, out);
  return out;
}

double derivation_score(const Derivation& d, const Lexicon& lexicon) {
  double s = 0.0;
  for (int id : d.leaf_entries) s += lexicon.weight(id);
  return s;
}

std::optional<std::pair<Category, logic::Term>> forward_apply(const Category& left_cat,
                                                              const logic::Term& left_term,
                                                              const Category& right_cat,
                                                              const logic::Term& right_term) {
  if (left_cat.is_primitive() || left_cat.argument() != right_cat) return std::nullopt;
  const logic::SemanticType& ft = left_term.type();
  if (!ft.is_function() || ft.from() != right_term.type()) {
    throw CompositionError("categories " + left_cat.str() + " + " + right_cat.str() +
                           " combine but semantic types " + left_term.type().str() + " + " +
                           right_term.type().str() + " do not");
  }
  return std::make_pair(left_cat.result(),
                        logic::beta_reduce(logic::Term::application(left_term, right_term)));
}

std::vector<Derivation> parse_all(std::span<const std::string> utterance,
                                  const Lexicon& lexicon) {
  const size_t n = utterance.size();
  if (n == 0) return {};
  for (const auto& tok : utterance) {
    if (!lexicon.contains_word(tok)) throw UnknownWordError(tok);
  }

  using NodePtr = std::shared_ptr<const DerivationNode>;
  // cells[i][len] holds every analysis of the span starting at i of length len.
  std::vector<std::vector<std::vector<NodePtr>>> cells(
      n, std::vector<std::vector<NodePtr>>(n + 1));

  for (size_t i = 0; i < n; ++i) {
    for (int id : lexicon.entries_for(utterance[i])) {
      const auto& e = lexicon.entry(id);
      auto leaf = std::make_shared<DerivationNode>(
          DerivationNode{e.category, e.meaning, id, static_cast<int>(i), nullptr, nullptr});
      cells[i][1].push_back(std::move(leaf));
    }
  }

  for (size_t len = 2; len <= n; ++len) {
    for (size_t i = 0; i + len <= n; ++i) {
      auto& out = cells[i][len];
      for (size_t llen = 1; llen < len; ++llen) {
        for (const auto& left : cells[i][llen]) {
          for (const auto& right : cells[i + llen][len - llen]) {
            auto combined = try_apply(left->category, left->term, right->category, right->term);
            if (!combined) continue;
            out.push_back(std::make_shared<DerivationNode>(DerivationNode{
                std::move(combined->first), std::move(combined->second), -1, -1, left, right}));
          }
        }
      }
    }
  }

  std::vector<Derivation> result;
  for (const auto& root : cells[0][n]) {
    if (!(root->category == Category::np())) continue;
    Derivation d{root, root->term, 0.0, {}};
    collect_leaves(*root, d.leaf_entries);
    for (int id : d.leaf_entries) d.score += lexicon.weight(id);
    result.push_back(std::move(d));
  }
  return result;
}

std::vector<std::pair<Derivation, double>> parse_distribution(
    std::span<const std::string> utterance, const Lexicon& lexicon) {
  auto derivations = parse_all(utterance, lexicon);
  if (derivations.empty()) throw NoParseError("no complete derivation");

  double max_score = derivations.front().score;
  for (const auto& d : derivations) max_score = std::max(max_score, d.score);
  double z = 0.0;
  for (const auto& d : derivations) z += std::exp(d.score - max_score);

  std::vector<std::pair<Derivation, double>> out;
  out.reserve(derivations.size());
  for (auto& d : derivations) {
    const double p = std::exp(d.score - max_score) / z;
    out.emplace_back(std::move(d), p);
  }
  return out;
}

bool derivation_preferred(const Derivation& a, const Derivation& b) {
  if (a.score != b.score) return a.score > b.score;
  if (a.leaf_entries != b.leaf_entries) return a.leaf_entries < b.leaf_entries;
  return a.shape() < b.shape();
}

Derivation best_parse(std::span<const std::string> utterance, const Lexicon& lexicon) {
  auto derivations = parse_all(utterance, lexicon);
  if (derivations.empty()) throw NoParseError("no complete derivation");
  size_t best = 0;
  for (size_t i = 1; i < derivations.size(); ++i) {
    if (derivation_preferred(derivations[i], derivations[best])) best = i;
  }
  return derivations[best];
}

}  // namespace ccgwl::grammar
