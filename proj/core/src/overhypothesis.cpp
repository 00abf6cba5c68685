#include "ccgwl/overhypothesis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ccgwl/errors.hpp"

namespace ccgwl::overhyp {

using grammar::Category;
using logic::PropertyType;

namespace {

// logsumexp with max subtraction; empty input yields -inf.
double logsumexp(const std::vector<double>& xs) {
  if (xs.empty()) return -std::numeric_limits<double>::infinity();
  double m = *std::max_element(xs.begin(), xs.end());
  double s = 0.0;
  for (double x : xs) s += std::exp(x - m);
  return m + std::log(s);
}

}  // namespace

PropertyOntology PropertyOntology::make(const logic::PropertyInventory& inventory,
                                        const grammar::Lexicon& lexicon) {
  PropertyOntology o;
  o.inventory = inventory;
  o.syntactic_inventory = {Category::np(), Category::slash(Category::np(), Category::np())};
  o.words = lexicon.words();
  return o;
}

const std::vector<double>& ConcentrationTable::alpha_s_given_t(PropertyType t) const {
  static const std::vector<double> empty;
  auto it = alpha_st_.find(t);
  return it == alpha_st_.end() ? empty : it->second;
}

double ConcentrationTable::alpha_s_given_t(const Category& s, PropertyType t) const {
  const auto& v = alpha_s_given_t(t);
  for (size_t i = 0; i < ontology_.syntactic_inventory.size(); ++i) {
    if (ontology_.syntactic_inventory[i] == s) return i < v.size() ? v[i] : 0.0;
  }
  return 0.0;
}

const std::map<std::string, double>& ConcentrationTable::alpha_w_given_v(
    const std::string& value) const {
  static const std::map<std::string, double> empty;
  auto it = alpha_wv_.find(value);
  return it == alpha_wv_.end() ? empty : it->second;
}

double ConcentrationTable::word_factor(const std::string& word, const std::string& value) const {
  auto denom_it = log_denom_wv_.find(value);
  const double log_denom = denom_it == log_denom_wv_.end()
                               ? -std::numeric_limits<double>::infinity()
                               : denom_it->second;
  const auto& row = alpha_w_given_v(value);
  auto it = row.find(word);
  if (it != row.end()) return it->second;
  // Unseen word: raw term exp(0) = 1 joins the normalization.
  // 1 / (sum_raw + 1) computed stably from log sum_raw.
  if (std::isinf(log_denom)) return 1.0;  // no observed words at all
  const double m = std::max(log_denom, 0.0);
  return std::exp(-m) / (std::exp(log_denom - m) + std::exp(-m));
}

ConcentrationTable compute_concentrations(const grammar::Lexicon& lexicon,
                                          const PropertyOntology& ontology, double tau,
                                          double rho_s, double rho_w) {
  if (!(tau > 0.0)) throw ConfigError("temperature tau must be positive");
  ConcentrationTable table;
  table.ontology_ = ontology;
  table.tau_ = tau;
  table.rho_s_ = rho_s;
  table.rho_w_ = rho_w;

  const auto& cats = table.ontology_.syntactic_inventory;
  const auto types = ontology.inventory.types();

  // Per-entry property and category index, property-free meanings excluded.
  struct Row {
    size_t cat;
    logic::PropertyDescriptor prop;
    const std::string* word;
    double weight;
  };
  std::vector<Row> rows;
  for (int id = 0; id < lexicon.size(); ++id) {
    const auto& e = lexicon.entry(id);
    auto prop = logic::extract_property(e.meaning);
    if (!prop) continue;
    size_t cat_index = cats.size();
    for (size_t c = 0; c < cats.size(); ++c) {
      if (cats[c] == e.category) {
        cat_index = c;
        break;
      }
    }
    if (cat_index == cats.size()) continue;  // category outside S
    rows.push_back(Row{cat_index, *prop, &e.word, e.weight});
  }

  for (PropertyType t : types) {
    std::vector<double> log_raw(cats.size(), 0.0);
    for (const auto& r : rows) {
      if (r.prop.type == t) log_raw[r.cat] += r.weight / tau;
    }
    const double denom = logsumexp(log_raw);
    std::vector<double> alpha(cats.size());
    for (size_t c = 0; c < cats.size(); ++c) alpha[c] = std::exp(log_raw[c] - denom);
    table.alpha_st_[t] = std::move(alpha);
  }

  const auto& words = table.ontology_.words;
  for (const auto& value : ontology.inventory.all_values()) {
    std::vector<double> log_raw(words.size(), 0.0);
    for (const auto& r : rows) {
      if (r.prop == value) {
        for (size_t wi = 0; wi < words.size(); ++wi) {
          if (words[wi] == *r.word) {
            log_raw[wi] += r.weight / tau;
            break;
          }
        }
      }
    }
    const double denom = logsumexp(log_raw);
    std::map<std::string, double> alpha;
    for (size_t wi = 0; wi < words.size(); ++wi) {
      alpha[words[wi]] = std::exp(log_raw[wi] - denom);
    }
    table.alpha_wv_[value.value] = std::move(alpha);
    table.log_denom_wv_[value.value] = denom;
  }
  return table;
}

double NovelWordPosterior::prob(const logic::PropertyDescriptor& tv) const {
  auto it = table.find(tv);
  return it == table.end() ? 0.0 : it->second;
}

double NovelWordPosterior::marginal(PropertyType t) const {
  double s = 0.0;
  for (const auto& [tv, p] : table) {
    if (tv.type == t) s += p;
  }
  return s;
}

NovelWordPosterior predictive(const Category& s, const std::string& w,
                              const ConcentrationTable& table) {
  const auto& inv = table.ontology().inventory;
  const auto types = inv.types();
  NovelWordPosterior post;
  double z = 0.0;
  for (PropertyType t : types) {
    const auto& values = inv.values(t);
    const double p_t = 1.0 / static_cast<double>(types.size());
    const double p_v_given_t = 1.0 / static_cast<double>(values.size());
    const double syn = table.alpha_s_given_t(s, t);
    for (const auto& v : values) {
      const double p = p_t * p_v_given_t * syn * table.word_factor(w, v);
      post.table[logic::PropertyDescriptor{t, v}] = p;
      z += p;
    }
  }
  if (z > 0.0) {
    for (auto& [tv, p] : post.table) p /= z;
  }
  return post;
}

double belief_color_given_modifier(const ConcentrationTable& table) {
  const Category modifier = Category::slash(Category::np(), Category::np());
  const double c = table.alpha_s_given_t(modifier, PropertyType::Color);
  const double s = table.alpha_s_given_t(modifier, PropertyType::Shape);
  if (c + s <= 0.0) return 0.5;
  return c / (c + s);
}

}  // namespace ccgwl::overhyp
