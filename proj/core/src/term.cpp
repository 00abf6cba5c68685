#include "ccgwl/term.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <map>
#include <memory>
#include <set>
#include <vector>

#include "ccgwl/errors.hpp"

namespace ccgwl::logic {

struct Term::Node {
  Term::Kind kind;
  SemanticType type;
  int index;                           // Variable
  std::shared_ptr<const Node> c0, c1;  // children (body / fn,arg / lhs,rhs / predicate)
  PropertyDescriptor prop;             // Property

  Node(Term::Kind k, SemanticType t)
      : kind(k), type(std::move(t)), index(-1), prop{PropertyType::Color, std::string()} {}
};

namespace detail {
struct TermAccess {
  static Term make(std::shared_ptr<const Term::Node> n) { return Term(std::move(n)); }
  static const std::shared_ptr<const Term::Node>& node(const Term& t) { return t.node_; }
};
}  // namespace detail

namespace {

using detail::TermAccess;

Term wrap(std::shared_ptr<const Term::Node> n) { return TermAccess::make(std::move(n)); }

// Renumbers free variables with index >= cutoff by d.
Term shift(const Term& t, int d, int cutoff) {
  switch (t.kind()) {
    case Term::Kind::Variable:
      return t.var_index() >= cutoff ? Term::variable(t.var_index() + d, t.type()) : t;
    case Term::Kind::Abstraction:
      return Term::abstraction(t.param_type(), shift(t.body(), d, cutoff + 1));
    case Term::Kind::Application:
      return Term::application(shift(t.fn(), d, cutoff), shift(t.arg(), d, cutoff));
    case Term::Kind::Conjunction:
      return Term::conjunction(shift(t.lhs(), d, cutoff), shift(t.rhs(), d, cutoff));
    case Term::Kind::Iota:
      return Term::iota(shift(t.predicate(), d, cutoff));
    case Term::Kind::Property:
      return t;
  }
  return t;
}

// Capture-avoiding substitution [j := s]t.
Term subst(const Term& t, int j, const Term& s) {
  switch (t.kind()) {
    case Term::Kind::Variable:
      return t.var_index() == j ? s : t;
    case Term::Kind::Abstraction:
      return Term::abstraction(t.param_type(), subst(t.body(), j + 1, shift(s, 1, 0)));
    case Term::Kind::Application:
      return Term::application(subst(t.fn(), j, s), subst(t.arg(), j, s));
    case Term::Kind::Conjunction:
      return Term::conjunction(subst(t.lhs(), j, s), subst(t.rhs(), j, s));
    case Term::Kind::Iota:
      return Term::iota(subst(t.predicate(), j, s));
    case Term::Kind::Property:
      return t;
  }
  return t;
}

// One beta contraction: (lambda. body) arg.
Term beta_step(const Term& body, const Term& arg) {
  return shift(subst(body, 0, shift(arg, 1, 0)), -1, 1);
}

void check_binder_types(const Term::Node& n, int depth, const SemanticType& param) {
  switch (n.kind) {
    case Term::Kind::Variable:
      if (n.index == depth && n.type != param) {
        throw TypeError("bound variable typed " + n.type.str() + " under binder of type " +
                        param.str());
      }
      return;
    case Term::Kind::Abstraction:
    case Term::Kind::Iota:
      // Iota stores its predicate as an abstraction whose own case adds the
      // depth increment, so only recurse here.
      if (n.kind == Term::Kind::Abstraction) {
        check_binder_types(*n.c0, depth + 1, param);
      } else {
        check_binder_types(*n.c0, depth, param);
      }
      return;
    case Term::Kind::Application:
    case Term::Kind::Conjunction:
      check_binder_types(*n.c0, depth, param);
      check_binder_types(*n.c1, depth, param);
      return;
    case Term::Kind::Property:
      return;
  }
}

int max_free_index(const Term::Node& n, int depth) {
  switch (n.kind) {
    case Term::Kind::Variable: return n.index - depth;
    case Term::Kind::Abstraction: return max_free_index(*n.c0, depth + 1);
    case Term::Kind::Application:
    case Term::Kind::Conjunction:
      return std::max(max_free_index(*n.c0, depth), max_free_index(*n.c1, depth));
    case Term::Kind::Iota: return max_free_index(*n.c0, depth);
    case Term::Kind::Property: return -1;
  }
  return -1;
}

}  // namespace

Term Term::variable(int index, const SemanticType& type) {
  if (index < 0) throw TypeError("variable index must be nonnegative");
  auto n = std::make_shared<Node>(Kind::Variable, type);
  n->index = index;
  return wrap(n);
}

Term Term::abstraction(const SemanticType& param_type, const Term& body) {
  check_binder_types(*body.node_, 0, param_type);
  auto n =
      std::make_shared<Node>(Kind::Abstraction, SemanticType::function(param_type, body.type()));
  n->c0 = body.node_;
  return wrap(n);
}

Term Term::application(const Term& fn, const Term& arg) {
  const SemanticType& ft = fn.type();
  if (!ft.is_function()) {
    throw TypeError("cannot apply non-function of type " + ft.str());
  }
  if (ft.from() != arg.type()) {
    throw TypeError("argument type " + arg.type().str() + " does not match parameter type " +
                    ft.from().str());
  }
  auto n = std::make_shared<Node>(Kind::Application, ft.to());
  n->c0 = fn.node_;
  n->c1 = arg.node_;
  return wrap(n);
}

Term Term::property(const PropertyDescriptor& value) {
  auto n = std::make_shared<Node>(Kind::Property, SemanticType::predicate());
  n->prop = value;
  return wrap(n);
}

Term Term::conjunction(const Term& lhs, const Term& rhs) {
  if (lhs.type() != SemanticType::truth() || rhs.type() != SemanticType::truth()) {
    throw TypeError("conjunction requires truth-typed operands, got " + lhs.type().str() +
                    " and " + rhs.type().str());
  }
  auto n = std::make_shared<Node>(Kind::Conjunction, SemanticType::truth());
  n->c0 = lhs.node_;
  n->c1 = rhs.node_;
  return wrap(n);
}

Term Term::iota(const Term& predicate) {
  if (predicate.type() != SemanticType::predicate()) {
    throw TypeError("iota requires a predicate of type <e,t>, got " + predicate.type().str());
  }
  Term pred = predicate;
  if (pred.kind() != Kind::Abstraction) {
    // Canonical eta-long form: iota(P) == iota(lambda x. P(x)).
    pred = abstraction(SemanticType::entity(),
                       application(shift(pred, 1, 0), variable(0, SemanticType::entity())));
  }
  auto n = std::make_shared<Node>(Kind::Iota, SemanticType::entity_set());
  n->c0 = pred.node_;
  return wrap(n);
}

Term::Kind Term::kind() const { return node_->kind; }
const SemanticType& Term::type() const { return node_->type; }

int Term::var_index() const {
  assert(kind() == Kind::Variable);
  return node_->index;
}

SemanticType Term::param_type() const {
  assert(kind() == Kind::Abstraction);
  return node_->type.from();
}

Term Term::body() const {
  assert(kind() == Kind::Abstraction);
  return wrap(node_->c0);
}

Term Term::fn() const {
  assert(kind() == Kind::Application);
  return wrap(node_->c0);
}

Term Term::arg() const {
  assert(kind() == Kind::Application);
  return wrap(node_->c1);
}

const PropertyDescriptor& Term::property_value() const {
  assert(kind() == Kind::Property);
  return node_->prop;
}

Term Term::lhs() const {
  assert(kind() == Kind::Conjunction);
  return wrap(node_->c0);
}

Term Term::rhs() const {
  assert(kind() == Kind::Conjunction);
  return wrap(node_->c1);
}

Term Term::predicate() const {
  assert(kind() == Kind::Iota);
  return wrap(node_->c0);
}

bool Term::is_closed() const { return max_free_index(*node_, 0) < 0; }

bool Term::is_normal() const {
  switch (kind()) {
    case Kind::Variable:
    case Kind::Property:
      return true;
    case Kind::Abstraction: return body().is_normal();
    case Kind::Application:
      return fn().kind() != Kind::Abstraction && fn().is_normal() && arg().is_normal();
    case Kind::Conjunction: return lhs().is_normal() && rhs().is_normal();
    case Kind::Iota: return predicate().is_normal();
  }
  return true;
}

namespace {

int compare(const Term& a, const Term& b) {
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  switch (a.kind()) {
    case Term::Kind::Variable: {
      if (a.var_index() != b.var_index()) return a.var_index() < b.var_index() ? -1 : 1;
      if (a.type() == b.type()) return 0;
      return a.type().str() < b.type().str() ? -1 : 1;
    }
    case Term::Kind::Property: {
      const auto& pa = a.property_value();
      const auto& pb = b.property_value();
      if (pa == pb) return 0;
      return pa < pb ? -1 : 1;
    }
    case Term::Kind::Abstraction: {
      if (a.param_type() != b.param_type()) {
        return a.param_type().str() < b.param_type().str() ? -1 : 1;
      }
      return compare(a.body(), b.body());
    }
    case Term::Kind::Application: {
      int c = compare(a.fn(), b.fn());
      return c != 0 ? c : compare(a.arg(), b.arg());
    }
    case Term::Kind::Conjunction: {
      int c = compare(a.lhs(), b.lhs());
      return c != 0 ? c : compare(a.rhs(), b.rhs());
    }
    case Term::Kind::Iota: return compare(a.predicate(), b.predicate());
  }
  return 0;
}

}  // namespace

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  return compare(a, b) == 0;
}

bool operator<(const Term& a, const Term& b) { return compare(a, b) < 0; }

Term beta_reduce(const Term& term) {
  switch (term.kind()) {
    case Term::Kind::Application: {
      Term f = beta_reduce(term.fn());
      if (f.kind() == Term::Kind::Abstraction) {
        return beta_reduce(beta_step(f.body(), term.arg()));
      }
      return Term::application(f, beta_reduce(term.arg()));
    }
    case Term::Kind::Abstraction:
      return Term::abstraction(term.param_type(), beta_reduce(term.body()));
    case Term::Kind::Conjunction:
      return Term::conjunction(beta_reduce(term.lhs()), beta_reduce(term.rhs()));
    case Term::Kind::Iota: return Term::iota(beta_reduce(term.predicate()));
    default: return term;
  }
}

namespace {

void collect_properties(const Term& t, std::vector<PropertyDescriptor>& out) {
  switch (t.kind()) {
    case Term::Kind::Property: out.push_back(t.property_value()); return;
    case Term::Kind::Abstraction: collect_properties(t.body(), out); return;
    case Term::Kind::Application:
      collect_properties(t.fn(), out);
      collect_properties(t.arg(), out);
      return;
    case Term::Kind::Conjunction:
      collect_properties(t.lhs(), out);
      collect_properties(t.rhs(), out);
      return;
    case Term::Kind::Iota: collect_properties(t.predicate(), out); return;
    case Term::Kind::Variable: return;
  }
}

}  // namespace

std::optional<PropertyDescriptor> extract_property(const Term& term) {
  std::vector<PropertyDescriptor> props;
  collect_properties(term, props);
  if (props.empty()) return std::nullopt;
  if (props.size() > 1) {
    throw MalformedEntryError("word-level meaning mentions " + std::to_string(props.size()) +
                              " property constants: " + term.str());
  }
  return props.front();
}

// ---------------------------------------------------------------------------
// Printing

namespace {

std::string fresh_name(const SemanticType& t, std::set<std::string>& used) {
  const char* const* pool;
  size_t pool_size;
  static const char* entity_pool[] = {"x", "y", "z"};
  static const char* fn_pool[] = {"p", "q", "r"};
  if (t == SemanticType::entity()) {
    pool = entity_pool;
    pool_size = 3;
  } else {
    pool = fn_pool;
    pool_size = 3;
  }
  for (size_t i = 0; i < pool_size; ++i) {
    if (used.insert(pool[i]).second) return pool[i];
  }
  for (int i = 1;; ++i) {
    std::string name = std::string(pool[0]) + std::to_string(i);
    if (used.insert(name).second) return name;
  }
}

std::string print(const Term& t, std::vector<std::string>& names, std::set<std::string>& used) {
  switch (t.kind()) {
    case Term::Kind::Variable: {
      const int idx = t.var_index();
      if (idx < static_cast<int>(names.size())) {
        return names[names.size() - 1 - static_cast<size_t>(idx)];
      }
      return "?" + std::to_string(idx - static_cast<int>(names.size()));  // free variable
    }
    case Term::Kind::Property: return t.property_value().value;
    case Term::Kind::Abstraction: {
      std::string name = fresh_name(t.param_type(), used);
      names.push_back(name);
      std::string body = print(t.body(), names, used);
      names.pop_back();
      return "lambda " + name + ". " + body;
    }
    case Term::Kind::Application: {
      Term f = t.fn();
      std::string fs = print(f, names, used);
      if (f.kind() == Term::Kind::Abstraction) fs = "(" + fs + ")";
      return fs + "(" + print(t.arg(), names, used) + ")";
    }
    case Term::Kind::Conjunction:
      return "and(" + print(t.lhs(), names, used) + ", " + print(t.rhs(), names, used) + ")";
    case Term::Kind::Iota: {
      // The predicate is an abstraction; print its body with the bound
      // entity variable named: iota(and(sphere(x), blue(x))).
      Term pred = t.predicate();
      std::string name = fresh_name(pred.param_type(), used);
      names.push_back(name);
      std::string body = print(pred.body(), names, used);
      names.pop_back();
      return "iota(" + body + ")";
    }
  }
  return "?";
}

}  // namespace

std::string Term::str() const {
  std::vector<std::string> names;
  std::set<std::string> used;
  return print(*this, names, used);
}

// ---------------------------------------------------------------------------
// Parsing: tokenise -> raw AST -> type inference -> de Bruijn term.

namespace {

struct Tok {
  enum Kind { Ident, Lambda, Dot, LParen, RParen, Comma, End } kind;
  std::string text;
};

std::vector<Tok> tokenize(std::string_view s) {
  std::vector<Tok> out;
  size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '.') {
      out.push_back({Tok::Dot, "."});
      ++i;
    } else if (c == '(') {
      out.push_back({Tok::LParen, "("});
      ++i;
    } else if (c == ')') {
      out.push_back({Tok::RParen, ")"});
      ++i;
    } else if (c == ',') {
      out.push_back({Tok::Comma, ","});
      ++i;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      std::string word(s.substr(i, j - i));
      out.push_back({word == "lambda" ? Tok::Lambda : Tok::Ident, std::move(word)});
      i = j;
    } else {
      throw TypeError("unexpected character '" + std::string(1, c) + "' in term text");
    }
  }
  out.push_back({Tok::End, ""});
  return out;
}

struct Ast {
  enum Kind { Lam, App, And, IotaK, Ident } kind;
  std::string name;                         // Lam parameter / Ident
  std::vector<std::unique_ptr<Ast>> kids;
};

class Parser {
 public:
  explicit Parser(std::vector<Tok> toks) : toks_(std::move(toks)) {}

  std::unique_ptr<Ast> parse() {
    auto t = parse_expr();
    expect(Tok::End, "end of input");
    return t;
  }

 private:
  const Tok& peek() const { return toks_[pos_]; }
  Tok take() { return toks_[pos_++]; }
  void expect(Tok::Kind k, const char* what) {
    if (peek().kind != k) throw TypeError(std::string("expected ") + what + " in term text");
    ++pos_;
  }

  std::unique_ptr<Ast> parse_expr() {
    if (peek().kind == Tok::Lambda) {
      take();
      if (peek().kind != Tok::Ident) throw TypeError("expected parameter name after 'lambda'");
      auto node = std::make_unique<Ast>();
      node->kind = Ast::Lam;
      node->name = take().text;
      expect(Tok::Dot, "'.' after lambda parameter");
      node->kids.push_back(parse_expr());
      return node;
    }
    auto t = parse_atom();
    while (peek().kind == Tok::LParen) {
      take();
      auto node = std::make_unique<Ast>();
      node->kind = Ast::App;
      node->kids.push_back(std::move(t));
      node->kids.push_back(parse_expr());
      expect(Tok::RParen, "')'");
      t = std::move(node);
    }
    return t;
  }

  std::unique_ptr<Ast> parse_atom() {
    if (peek().kind == Tok::LParen) {
      take();
      auto t = parse_expr();
      expect(Tok::RParen, "')'");
      return t;
    }
    if (peek().kind != Tok::Ident) throw TypeError("expected identifier in term text");
    std::string name = take().text;
    if (name == "and" && peek().kind == Tok::LParen) {
      take();
      auto node = std::make_unique<Ast>();
      node->kind = Ast::And;
      node->kids.push_back(parse_expr());
      expect(Tok::Comma, "',' between conjuncts");
      node->kids.push_back(parse_expr());
      expect(Tok::RParen, "')'");
      return node;
    }
    if (name == "iota" && peek().kind == Tok::LParen) {
      take();
      auto node = std::make_unique<Ast>();
      node->kind = Ast::IotaK;
      node->kids.push_back(parse_expr());
      expect(Tok::RParen, "')'");
      return node;
    }
    auto node = std::make_unique<Ast>();
    node->kind = Ast::Ident;
    node->name = std::move(name);
    return node;
  }

  std::vector<Tok> toks_;
  size_t pos_ = 0;
};

// --- type inference over the raw AST ---

struct TypeExpr {
  enum Kind { Var, Entity, Truth, ESet, Fun } kind;
  int id = -1;  // Var
  std::shared_ptr<TypeExpr> a, b;
};

using TX = std::shared_ptr<TypeExpr>;

TX tx_const(TypeExpr::Kind k) { return std::make_shared<TypeExpr>(TypeExpr{k, -1, nullptr, nullptr}); }
TX tx_fun(TX a, TX b) {
  return std::make_shared<TypeExpr>(TypeExpr{TypeExpr::Fun, -1, std::move(a), std::move(b)});
}

class Unifier {
 public:
  TX fresh() {
    bindings_.push_back(nullptr);
    auto v = std::make_shared<TypeExpr>();
    v->kind = TypeExpr::Var;
    v->id = static_cast<int>(bindings_.size()) - 1;
    return v;
  }

  TX resolve(TX t) {
    while (t->kind == TypeExpr::Var && bindings_[static_cast<size_t>(t->id)]) {
      t = bindings_[static_cast<size_t>(t->id)];
    }
    return t;
  }

  void unify(TX x, TX y) {
    x = resolve(std::move(x));
    y = resolve(std::move(y));
    if (x->kind == TypeExpr::Var && y->kind == TypeExpr::Var && x->id == y->id) return;
    if (x->kind == TypeExpr::Var) {
      if (occurs(x->id, y)) throw TypeError("cyclic type in term text");
      bindings_[static_cast<size_t>(x->id)] = y;
      return;
    }
    if (y->kind == TypeExpr::Var) {
      unify(y, x);
      return;
    }
    if (x->kind != y->kind) throw TypeError("type mismatch in term text");
    if (x->kind == TypeExpr::Fun) {
      unify(x->a, y->a);
      unify(x->b, y->b);
    }
  }

  SemanticType concrete(TX t) {
    t = resolve(std::move(t));
    switch (t->kind) {
      case TypeExpr::Var: throw TypeError("cannot infer a binder type in term text");
      case TypeExpr::Entity: return SemanticType::entity();
      case TypeExpr::Truth: return SemanticType::truth();
      case TypeExpr::ESet: return SemanticType::entity_set();
      case TypeExpr::Fun: return SemanticType::function(concrete(t->a), concrete(t->b));
    }
    return SemanticType::entity();
  }

 private:
  bool occurs(int id, const TX& t_in) {
    TX t = resolve(t_in);
    if (t->kind == TypeExpr::Var) return t->id == id;
    if (t->kind == TypeExpr::Fun) return occurs(id, t->a) || occurs(id, t->b);
    return false;
  }

  std::vector<TX> bindings_;
};

// A binder in scope: explicit lambda parameters and the implicit entity
// variable of an iota body. Iota binders adopt the first unknown identifier
// seen in their scope.
struct Binder {
  std::string name;  // empty for an unadopted iota binder
  TX type;
  bool iota_implicit = false;
  bool adopted = false;
  int id;
};

class Resolver {
 public:
  Resolver(const PropertyInventory& inv, Unifier& u) : inv_(inv), u_(u) {}

  // Infers types; records per-node variable bindings keyed by AST pointer.
  TX infer(const Ast* n) {
    switch (n->kind) {
      case Ast::Lam: {
        scope_.push_back(Binder{n->name, u_.fresh(), false, true, next_id_++});
        binder_of_[n] = scope_.back().id;
        binder_types_[scope_.back().id] = scope_.back().type;
        TX body = infer(n->kids[0].get());
        TX param = scope_.back().type;
        scope_.pop_back();
        return tx_fun(param, body);
      }
      case Ast::App: {
        TX f = infer(n->kids[0].get());
        TX a = infer(n->kids[1].get());
        TX r = u_.fresh();
        u_.unify(f, tx_fun(a, r));
        return r;
      }
      case Ast::And: {
        u_.unify(infer(n->kids[0].get()), tx_const(TypeExpr::Truth));
        u_.unify(infer(n->kids[1].get()), tx_const(TypeExpr::Truth));
        return tx_const(TypeExpr::Truth);
      }
      case Ast::IotaK: {
        scope_.push_back(Binder{"", tx_const(TypeExpr::Entity), true, false, next_id_++});
        const int binder_id = scope_.back().id;
        binder_of_[n] = binder_id;
        binder_types_[binder_id] = scope_.back().type;
        TX body = infer(n->kids[0].get());
        const bool adopted = scope_.back().adopted;
        scope_.pop_back();
        iota_adopted_[n] = adopted;
        if (adopted) {
          u_.unify(body, tx_const(TypeExpr::Truth));
        } else {
          u_.unify(body, tx_fun(tx_const(TypeExpr::Entity), tx_const(TypeExpr::Truth)));
        }
        return tx_const(TypeExpr::ESet);
      }
      case Ast::Ident: {
        for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
          if (it->name == n->name && (!it->iota_implicit || it->adopted)) {
            var_binder_[n] = it->id;
            return it->type;
          }
        }
        if (inv_.contains(n->name)) {
          return tx_fun(tx_const(TypeExpr::Entity), tx_const(TypeExpr::Truth));
        }
        // Unknown identifier: adopt it as the entity variable of the
        // innermost iota that has not adopted a name yet.
        for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
          if (it->iota_implicit && !it->adopted) {
            it->adopted = true;
            it->name = n->name;
            var_binder_[n] = it->id;
            return it->type;
          }
        }
        throw TypeError("unknown identifier '" + n->name + "' in term text");
      }
    }
    throw TypeError("malformed term text");
  }

  // Builds the de Bruijn term after inference has fixed all types.
  Term build(const Ast* n) {
    switch (n->kind) {
      case Ast::Lam: {
        const int id = binder_of_.at(n);
        SemanticType param = u_.concrete(type_of_binder(id));
        stack_.push_back(id);
        Term body = build(n->kids[0].get());
        stack_.pop_back();
        return Term::abstraction(param, body);
      }
      case Ast::App:
        return Term::application(build(n->kids[0].get()), build(n->kids[1].get()));
      case Ast::And:
        return Term::conjunction(build(n->kids[0].get()), build(n->kids[1].get()));
      case Ast::IotaK: {
        if (iota_adopted_.at(n)) {
          stack_.push_back(binder_of_.at(n));
          Term body = build(n->kids[0].get());
          stack_.pop_back();
          return Term::iota(Term::abstraction(SemanticType::entity(), body));
        }
        return Term::iota(build(n->kids[0].get()));
      }
      case Ast::Ident: {
        auto it = var_binder_.find(n);
        if (it != var_binder_.end()) {
          for (size_t k = 0; k < stack_.size(); ++k) {
            if (stack_[stack_.size() - 1 - k] == it->second) {
              return Term::variable(static_cast<int>(k), u_.concrete(type_of_binder(it->second)));
            }
          }
          throw TypeError("unbound variable '" + n->name + "'");
        }
        auto desc = inv_.descriptor(n->name);
        if (!desc) throw TypeError("unknown identifier '" + n->name + "'");
        return Term::property(*desc);
      }
    }
    throw TypeError("malformed term text");
  }

 private:
  TX type_of_binder(int id) { return binder_types_.at(id); }

  std::map<int, TX> binder_types_;

  const PropertyInventory& inv_;
  Unifier& u_;
  std::vector<Binder> scope_;
  std::vector<int> stack_;
  std::map<const Ast*, int> binder_of_;
  std::map<const Ast*, int> var_binder_;
  std::map<const Ast*, bool> iota_adopted_;
  int next_id_ = 0;
};

}  // namespace

Term parse_term(std::string_view text, const PropertyInventory& inventory) {
  Parser parser(tokenize(text));
  auto ast = parser.parse();

  Unifier unifier;
  Resolver resolver(inventory, unifier);
  resolver.infer(ast.get());
  return resolver.build(ast.get());
}

}  // namespace ccgwl::logic
