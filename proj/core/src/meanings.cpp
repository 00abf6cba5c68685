#include "ccgwl/meanings.hpp"

namespace ccgwl::logic {

Term noun_meaning(const PropertyDescriptor& v) {
  Term x = Term::variable(0, SemanticType::entity());
  return Term::abstraction(SemanticType::entity(), Term::application(Term::property(v), x));
}

Term modifier_meaning(const PropertyDescriptor& v) {
  Term p = Term::variable(1, SemanticType::predicate());
  Term x = Term::variable(0, SemanticType::entity());
  Term body = Term::conjunction(Term::application(p, x),
                                Term::application(Term::property(v), x));
  return Term::abstraction(SemanticType::predicate(),
                           Term::abstraction(SemanticType::entity(), body));
}

Term determiner_meaning() {
  Term p = Term::variable(0, SemanticType::predicate());
  return Term::abstraction(SemanticType::predicate(), Term::iota(p));
}

}  // namespace ccgwl::logic
