#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "ccgwl/semantic_type.hpp"

namespace ccgwl::grammar {

// Syntactic categories built from NP and the forward slash: NP, NP/NP,
// (NP/NP)/NP, ... The slash is left-associative in the printed form, and a
// composite argument is parenthesized: NP/(NP/NP).
class Category {
 public:
  static const Category& np();
  static Category slash(const Category& result, const Category& argument);

  bool is_primitive() const { return node_->result == nullptr; }
  Category result() const;
  Category argument() const;

  std::string str() const;
  static Category parse(std::string_view text);

  friend bool operator==(const Category& a, const Category& b);
  friend bool operator!=(const Category& a, const Category& b) { return !(a == b); }

 private:
  struct Node {
    std::shared_ptr<const Node> result, argument;  // both null => NP
  };
  explicit Category(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static bool equal(const Node& a, const Node& b);

  std::shared_ptr<const Node> node_;
};

// Whether a meaning type is admissible for a category: NP carries <e,t> or an
// entity set; X/Y carries a function from a Y-admissible type to an
// X-admissible type.
bool category_admits(const Category& cat, const logic::SemanticType& type);

}  // namespace ccgwl::grammar
