#pragma once

#include "ccgwl/term.hpp"

namespace ccgwl::logic {

// The word-meaning templates of the dataset grammar.

// lambda x. v(x)
Term noun_meaning(const PropertyDescriptor& v);

// lambda p. lambda x. and(p(x), v(x))
Term modifier_meaning(const PropertyDescriptor& v);

// lambda p. iota(p) -- the definite determiner, property-free.
Term determiner_meaning();

}  // namespace ccgwl::logic
