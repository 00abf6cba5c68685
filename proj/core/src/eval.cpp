#include "ccgwl/eval.hpp"

#include <variant>
#include <vector>

#include "ccgwl/errors.hpp"

namespace ccgwl::logic {

namespace {

struct Value;
using Env = std::vector<Value>;

struct Closure {
  Term abstraction;
  Env env;
};

// Runtime values: truth values, scene objects, satisfier sets, property
// predicates and closures.
struct Value {
  std::variant<bool, const scene::SceneObject*, std::set<int>, PropertyDescriptor, Closure> v;
};

class Evaluator {
 public:
  explicit Evaluator(const scene::Scene& s) : scene_(s) {}

  Value eval(const Term& t, const Env& env) {
    switch (t.kind()) {
      case Term::Kind::Variable: {
        const size_t idx = static_cast<size_t>(t.var_index());
        if (idx >= env.size()) throw EvaluationError("unbound variable during evaluation");
        return env[env.size() - 1 - idx];
      }
      case Term::Kind::Abstraction: return Value{Closure{t, env}};
      case Term::Kind::Property: return Value{t.property_value()};
      case Term::Kind::Application: return apply(eval(t.fn(), env), eval(t.arg(), env));
      case Term::Kind::Conjunction:
        return Value{truthy(eval(t.lhs(), env)) && truthy(eval(t.rhs(), env))};
      case Term::Kind::Iota: {
        Value pred = eval(t.predicate(), env);
        std::set<int> out;
        for (const auto& o : scene_.objects) {
          if (truthy(apply(pred, Value{&o}))) out.insert(o.id);
        }
        return Value{std::move(out)};
      }
    }
    throw EvaluationError("unhandled term kind");
  }

  Value apply(const Value& fn, const Value& arg) {
    if (const auto* prop = std::get_if<PropertyDescriptor>(&fn.v)) {
      const auto* const* obj = std::get_if<const scene::SceneObject*>(&arg.v);
      if (!obj) throw EvaluationError("property predicate applied to a non-entity");
      return Value{(*obj)->has(*prop)};
    }
    if (const auto* cl = std::get_if<Closure>(&fn.v)) {
      Env env = cl->env;
      env.push_back(arg);
      return eval(cl->abstraction.body(), env);
    }
    throw EvaluationError("cannot apply a non-function value");
  }

  static bool truthy(const Value& v) {
    const bool* b = std::get_if<bool>(&v.v);
    if (!b) throw EvaluationError("expected a truth value");
    return *b;
  }

 private:
  const scene::Scene& scene_;
};

}  // namespace

std::set<int> evaluate(const Term& term, const scene::Scene& scene) {
  if (!term.is_closed()) throw EvaluationError("cannot evaluate an open term");
  Evaluator ev(scene);
  const SemanticType& ty = term.type();
  if (ty == SemanticType::entity_set()) {
    Value v = ev.eval(term, {});
    auto* s = std::get_if<std::set<int>>(&v.v);
    if (!s) throw EvaluationError("entity-set term did not evaluate to a set");
    return std::move(*s);
  }
  if (ty == SemanticType::predicate()) {
    Value fn = ev.eval(term, {});
    std::set<int> out;
    for (const auto& o : scene.objects) {
      if (Evaluator::truthy(ev.apply(fn, Value{&o}))) out.insert(o.id);
    }
    return out;
  }
  throw EvaluationError("term of type " + ty.str() + " has no scene denotation");
}

}  // namespace ccgwl::logic
