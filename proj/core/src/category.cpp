#include "ccgwl/category.hpp"

#include "ccgwl/errors.hpp"

namespace ccgwl::grammar {

const Category& Category::np() {
  static const Category c{std::make_shared<Node>(Node{nullptr, nullptr})};
  return c;
}

Category Category::slash(const Category& result, const Category& argument) {
  return Category{std::make_shared<Node>(Node{result.node_, argument.node_})};
}

Category Category::result() const {
  if (is_primitive()) throw TypeError("result() on primitive category");
  return Category{node_->result};
}

Category Category::argument() const {
  if (is_primitive()) throw TypeError("argument() on primitive category");
  return Category{node_->argument};
}

bool Category::equal(const Node& a, const Node& b) {
  const bool ap = a.result == nullptr;
  const bool bp = b.result == nullptr;
  if (ap != bp) return false;
  if (ap) return true;
  return equal(*a.result, *b.result) && equal(*a.argument, *b.argument);
}

bool operator==(const Category& a, const Category& b) {
  if (a.node_ == b.node_) return true;
  return Category::equal(*a.node_, *b.node_);
}

std::string Category::str() const {
  if (is_primitive()) return "NP";
  const Category arg = argument();
  const std::string arg_str = arg.is_primitive() ? arg.str() : "(" + arg.str() + ")";
  return result().str() + "/" + arg_str;
}

namespace {

// category := part ('/' part)*   (left-associative)
// part     := 'NP' | '(' category ')'
Category parse_part(std::string_view s, size_t& i);

Category parse_category(std::string_view s, size_t& i) {
  Category c = parse_part(s, i);
  while (i < s.size() && s[i] == '/') {
    ++i;
    c = Category::slash(c, parse_part(s, i));
  }
  return c;
}

Category parse_part(std::string_view s, size_t& i) {
  if (i < s.size() && s[i] == '(') {
    ++i;
    Category c = parse_category(s, i);
    if (i >= s.size() || s[i] != ')') throw TypeError("unbalanced parentheses in category");
    ++i;
    return c;
  }
  if (s.substr(i, 2) == "NP") {
    i += 2;
    return Category::np();
  }
  throw TypeError("cannot parse category: " + std::string(s));
}

}  // namespace

Category Category::parse(std::string_view text) {
  size_t i = 0;
  Category c = parse_category(text, i);
  if (i != text.size()) throw TypeError("trailing characters in category: " + std::string(text));
  return c;
}

bool category_admits(const Category& cat, const logic::SemanticType& type) {
  using logic::SemanticType;
  if (cat.is_primitive()) {
    return type == SemanticType::predicate() || type == SemanticType::entity_set();
  }
  if (!type.is_function()) return false;
  return category_admits(cat.argument(), type.from()) && category_admits(cat.result(), type.to());
}

}  // namespace ccgwl::grammar
