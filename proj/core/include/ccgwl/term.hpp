#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "ccgwl/property.hpp"
#include "ccgwl/semantic_type.hpp"

namespace ccgwl::logic {

namespace detail {
struct TermAccess;
}

// An immutable, typed lambda-calculus term. Bound variables are de Bruijn
// indices (0 = innermost binder), so alpha-equivalent terms are structurally
// identical and operator== decides alpha-equivalence. Every constructor
// type-checks; ill-typed terms cannot be built.
//
// The definite operator stores its predicate eta-long: iota(P) for a
// non-abstraction P of type <e,t> is canonicalized to iota(lambda x. P(x)).
class Term {
 public:
  enum class Kind { Variable, Abstraction, Application, Property, Conjunction, Iota };

  // Factories. All throw TypeError on ill-typed input.
  static Term variable(int index, const SemanticType& type);
  static Term abstraction(const SemanticType& param_type, const Term& body);
  static Term application(const Term& fn, const Term& arg);
  static Term property(const PropertyDescriptor& value);
  static Term conjunction(const Term& lhs, const Term& rhs);
  static Term iota(const Term& predicate);

  Kind kind() const;
  const SemanticType& type() const;

  // Accessors; each asserts the matching kind.
  int var_index() const;
  SemanticType param_type() const;  // Abstraction
  Term body() const;                // Abstraction
  Term fn() const;                         // Application
  Term arg() const;                        // Application
  const PropertyDescriptor& property_value() const;
  Term lhs() const;        // Conjunction
  Term rhs() const;        // Conjunction
  Term predicate() const;  // Iota (always an abstraction)

  bool is_closed() const;
  bool is_normal() const;

  // Readable text form, e.g. "lambda p. lambda x. and(p(x), blue(x))" or
  // "iota(and(sphere(x), blue(x)))".
  std::string str() const;

  // Structural equality == alpha-equivalence.
  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }
  friend bool operator<(const Term& a, const Term& b);  // arbitrary total order

  struct Node;

  const Node& node() const { return *node_; }

 private:
  friend struct detail::TermAccess;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Beta-normal form. Terminates for every well-typed term (the language has
// no recursion); idempotent; preserves the type.
Term beta_reduce(const Term& term);

// The unique property mentioned by a word-level meaning, or nullopt for
// property-free meanings (the determiner). Throws MalformedEntryError when
// the meaning mentions more than one property constant.
std::optional<PropertyDescriptor> extract_property(const Term& term);

// Parses the textual syntax printed by Term::str(). Binder types are
// inferred by unification; identifiers are resolved as bound variables
// first, then as property constants from the inventory. A free entity
// variable inside iota(...) is bound by the iota. Throws TypeError on
// unknown identifiers or unresolvable types.
Term parse_term(std::string_view text, const PropertyInventory& inventory);

}  // namespace ccgwl::logic
