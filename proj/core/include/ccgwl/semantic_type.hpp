#pragma once

#include <memory>
#include <string>

namespace ccgwl::logic {

// Types of the meaning language: e (entity), t (truth value), E (entity
// set, the result of the definite operator), and function types <a,b>.
class SemanticType {
 public:
  enum class Kind { Entity, Truth, EntitySet, Function };

  static const SemanticType& entity();
  static const SemanticType& truth();
  static const SemanticType& entity_set();
  static SemanticType function(const SemanticType& from, const SemanticType& to);

  // Shorthand for <e,t>, the type of property predicates.
  static const SemanticType& predicate();

  Kind kind() const { return node_->kind; }
  bool is_function() const { return kind() == Kind::Function; }

  // Function types only.
  SemanticType from() const;
  SemanticType to() const;

  std::string str() const;

  friend bool operator==(const SemanticType& a, const SemanticType& b);
  friend bool operator!=(const SemanticType& a, const SemanticType& b) { return !(a == b); }

 private:
  struct Node {
    Kind kind;
    std::shared_ptr<const Node> from, to;
  };
  explicit SemanticType(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static bool equal(const Node& a, const Node& b);

  std::shared_ptr<const Node> node_;
};

}  // namespace ccgwl::logic
