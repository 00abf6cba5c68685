#pragma once

#include <map>
#include <string>
#include <vector>

#include "ccgwl/lexicon.hpp"
#include "ccgwl/property.hpp"

namespace ccgwl::overhyp {

// The fixed structure the probabilistic model is defined over: property
// types with their value inventories (a deterministic value -> type map),
// the syntactic inventory S = {NP, NP/NP}, and the observed wordforms W.
struct PropertyOntology {
  logic::PropertyInventory inventory;
  std::vector<grammar::Category> syntactic_inventory;
  std::vector<std::string> words;

  static PropertyOntology make(const logic::PropertyInventory& inventory,
                               const grammar::Lexicon& lexicon);
};

// Normalized Dirichlet concentrations derived from the weighted lexicon:
// alpha(s|t) proportional to exp(sum of weights of entries with property
// type t and category s, scaled by 1/tau), normalized over s for each t;
// alpha(w|v) likewise over observed words for each value v. Property-free
// meanings (the determiner) are excluded from both sums. The mass parameters
// rho_s, rho_w are carried for configuration and serialization but are inert
// under predictive means: the mean of Dirichlet(rho * alpha) is alpha.
class ConcentrationTable {
 public:
  double tau() const { return tau_; }
  double rho_s() const { return rho_s_; }
  double rho_w() const { return rho_w_; }
  const PropertyOntology& ontology() const { return ontology_; }

  // Normalized alpha(s|t); vector layout follows ontology.syntactic_inventory.
  const std::vector<double>& alpha_s_given_t(logic::PropertyType t) const;
  double alpha_s_given_t(const grammar::Category& s, logic::PropertyType t) const;

  // Normalized alpha(w|v) over observed words; empty lexicon => no words.
  const std::map<std::string, double>& alpha_w_given_v(const std::string& value) const;

  // Dirichlet predictive mean E[P(w|v)]. A word outside W extends the
  // support with a unit raw term (exp(0)) and renormalizes.
  double word_factor(const std::string& word, const std::string& value) const;

 private:
  friend ConcentrationTable compute_concentrations(const grammar::Lexicon&,
                                                   const PropertyOntology&, double, double,
                                                   double);
  PropertyOntology ontology_;
  double tau_ = 1.0, rho_s_ = 1.0, rho_w_ = 1.0;
  std::map<logic::PropertyType, std::vector<double>> alpha_st_;
  std::map<std::string, std::map<std::string, double>> alpha_wv_;  // value -> word -> alpha
  std::map<std::string, double> log_denom_wv_;                     // value -> logsumexp of raws
};

ConcentrationTable compute_concentrations(const grammar::Lexicon& lexicon,
                                          const PropertyOntology& ontology, double tau,
                                          double rho_s, double rho_w);

// P(t, v | s, w) over the full (type, value) table; entries outside the
// deterministic value -> type map are exactly zero and omitted.
struct NovelWordPosterior {
  std::map<logic::PropertyDescriptor, double> table;

  double prob(const logic::PropertyDescriptor& tv) const;
  double marginal(logic::PropertyType t) const;
};

// P(t,v | s,w) proportional to P(t) P(v|t) E[P(s|t)] E[P(w|v)] with uniform
// P(t) and P(v|t) uniform over the type's values.
NovelWordPosterior predictive(const grammar::Category& s, const std::string& w,
                              const ConcentrationTable& table);

// P(t=color | s=NP/NP) normalized over the two utterance-relevant types
// {color, shape}; 0.5 for an empty (or property-free) lexicon.
double belief_color_given_modifier(const ConcentrationTable& table);

}  // namespace ccgwl::overhyp
