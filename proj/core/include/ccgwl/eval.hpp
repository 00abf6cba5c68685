#pragma once

#include <set>

#include "ccgwl/scene.hpp"
#include "ccgwl/term.hpp"

namespace ccgwl::logic {

// Grounds a closed term against a scene. A predicate (<e,t>) denotes the set
// of objects satisfying it; an entity-set term (iota) denotes its satisfier
// set, which may be empty or hold several objects. Any other type throws
// EvaluationError.
std::set<int> evaluate(const Term& term, const scene::Scene& scene);

}  // namespace ccgwl::logic
