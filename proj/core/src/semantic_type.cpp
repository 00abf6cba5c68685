#include "ccgwl/semantic_type.hpp"

#include "ccgwl/errors.hpp"

namespace ccgwl::logic {

const SemanticType& SemanticType::entity() {
  static const SemanticType t{std::make_shared<Node>(Node{Kind::Entity, nullptr, nullptr})};
  return t;
}

const SemanticType& SemanticType::truth() {
  static const SemanticType t{std::make_shared<Node>(Node{Kind::Truth, nullptr, nullptr})};
  return t;
}

const SemanticType& SemanticType::entity_set() {
  static const SemanticType t{std::make_shared<Node>(Node{Kind::EntitySet, nullptr, nullptr})};
  return t;
}

SemanticType SemanticType::function(const SemanticType& from, const SemanticType& to) {
  return SemanticType{std::make_shared<Node>(Node{Kind::Function, from.node_, to.node_})};
}

const SemanticType& SemanticType::predicate() {
  static const SemanticType t = function(entity(), truth());
  return t;
}

SemanticType SemanticType::from() const {
  if (!is_function()) throw TypeError("from() on non-function type " + str());
  return SemanticType{node_->from};
}

SemanticType SemanticType::to() const {
  if (!is_function()) throw TypeError("to() on non-function type " + str());
  return SemanticType{node_->to};
}

bool SemanticType::equal(const Node& a, const Node& b) {
  if (a.kind != b.kind) return false;
  if (a.kind != Kind::Function) return true;
  return equal(*a.from, *b.from) && equal(*a.to, *b.to);
}

bool operator==(const SemanticType& a, const SemanticType& b) {
  if (a.node_ == b.node_) return true;
  return SemanticType::equal(*a.node_, *b.node_);
}

std::string SemanticType::str() const {
  switch (kind()) {
    case Kind::Entity: return "e";
    case Kind::Truth: return "t";
    case Kind::EntitySet: return "E";
    case Kind::Function:
      return "<" + SemanticType{node_->from}.str() + "," + SemanticType{node_->to}.str() + ">";
  }
  return "?";
}

}  // namespace ccgwl::logic
