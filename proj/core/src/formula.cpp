#include "sgd/formula.hpp"

#include <algorithm>

#include "sgd/error.hpp"

namespace sgd {

struct Term::Node {
  Kind kind = Kind::kOne;
  Var var = 0;
  std::vector<Term> args;
  std::size_t nodes = 1;
  std::size_t depth = 1;
};

Term::Term() : Term(Term::one()) {}

Term::Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Term Term::one() {
  static const auto node = std::make_shared<const Node>();
  return Term(node);
}

Term Term::var(Var index) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kVar;
  node->var = index;
  return Term(std::move(node));
}

Term Term::mul(Term left, Term right) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kMul;
  node->nodes = 1 + left.node_count() + right.node_count();
  node->depth = 1 + std::max(left.depth(), right.depth());
  node->args = {std::move(left), std::move(right)};
  return Term(std::move(node));
}

Term Term::inv(Term arg) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kInv;
  node->nodes = 1 + arg.node_count();
  node->depth = 1 + arg.depth();
  node->args = {std::move(arg)};
  return Term(std::move(node));
}

Term::Kind Term::kind() const noexcept { return node_->kind; }
Var Term::var_index() const noexcept { return node_->var; }

const Term& Term::left() const {
  if (node_->args.empty()) throw Error(Errc::kArity, "term has no operands");
  return node_->args[0];
}

const Term& Term::right() const {
  if (node_->args.size() < 2) throw Error(Errc::kArity, "term has no right operand");
  return node_->args[1];
}

std::size_t Term::node_count() const noexcept { return node_->nodes; }
std::size_t Term::depth() const noexcept { return node_->depth; }

void Term::collect_vars(std::set<Var>& out) const {
  if (node_->kind == Kind::kVar) out.insert(node_->var);
  for (const auto& a : node_->args) a.collect_vars(out);
}

std::set<Var> Term::vars() const {
  std::set<Var> out;
  collect_vars(out);
  return out;
}

std::size_t Term::occurrences(Var v) const noexcept {
  if (node_->kind == Kind::kVar) return node_->var == v ? 1 : 0;
  std::size_t n = 0;
  for (const auto& a : node_->args) n += a.occurrences(v);
  return n;
}

bool operator==(const Term& a, const Term& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.node_->kind != b.node_->kind || a.node_->nodes != b.node_->nodes) return false;
  if (a.node_->kind == Term::Kind::kVar) return a.node_->var == b.node_->var;
  return a.node_->args == b.node_->args;
}

// ---------------------------------------------------------------------------

struct Formula::Node {
  Kind kind = Kind::kEq;
  Term lhs;
  Term rhs;
  std::vector<Formula> children;
  Var var = 0;
};

Formula::Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Formula Formula::eq(Term lhs, Term rhs) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kEq;
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  return Formula(std::move(node));
}

Formula Formula::neq(Term lhs, Term rhs) { return negation(eq(std::move(lhs), std::move(rhs))); }

Formula Formula::negation(Formula f) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kNot;
  node->children = {std::move(f)};
  return Formula(std::move(node));
}

namespace {

std::vector<Formula> flatten(Formula::Kind kind, std::vector<Formula> items) {
  std::vector<Formula> out;
  out.reserve(items.size());
  for (auto& item : items) {
    if (item.kind() == kind) {
      auto kids = item.children();
      out.insert(out.end(), kids.begin(), kids.end());
    } else {
      out.push_back(std::move(item));
    }
  }
  return out;
}

}  // namespace

Formula Formula::conj(std::vector<Formula> items) {
  if (items.empty()) throw Error(Errc::kArity, "empty conjunction");
  auto node = std::make_shared<Node>();
  node->kind = Kind::kAnd;
  node->children = flatten(Kind::kAnd, std::move(items));
  return Formula(std::move(node));
}

Formula Formula::disj(std::vector<Formula> items) {
  if (items.empty()) throw Error(Errc::kArity, "empty disjunction");
  auto node = std::make_shared<Node>();
  node->kind = Kind::kOr;
  node->children = flatten(Kind::kOr, std::move(items));
  return Formula(std::move(node));
}

Formula Formula::implies(Formula premise, Formula conclusion) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kImplies;
  node->children = {std::move(premise), std::move(conclusion)};
  return Formula(std::move(node));
}

Formula Formula::forall(Var v, Formula body) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kForall;
  node->var = v;
  node->children = {std::move(body)};
  return Formula(std::move(node));
}

Formula Formula::exists(Var v, Formula body) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kExists;
  node->var = v;
  node->children = {std::move(body)};
  return Formula(std::move(node));
}

Formula::Kind Formula::kind() const noexcept { return node_->kind; }

const Term& Formula::lhs() const {
  if (node_->kind != Kind::kEq) throw Error(Errc::kInvalidInput, "lhs() on non-equation");
  return node_->lhs;
}

const Term& Formula::rhs() const {
  if (node_->kind != Kind::kEq) throw Error(Errc::kInvalidInput, "rhs() on non-equation");
  return node_->rhs;
}

std::span<const Formula> Formula::children() const { return node_->children; }

Var Formula::bound_var() const {
  if (!is_quantifier()) throw Error(Errc::kInvalidInput, "bound_var() on non-quantifier");
  return node_->var;
}

const Formula& Formula::body() const {
  if (!is_quantifier()) throw Error(Errc::kInvalidInput, "body() on non-quantifier");
  return node_->children[0];
}

namespace {

void collect_free(const Formula& f, std::set<Var>& bound, std::set<Var>& out) {
  switch (f.kind()) {
    case Formula::Kind::kEq: {
      std::set<Var> vs = f.lhs().vars();
      f.rhs().collect_vars(vs);
      for (Var v : vs)
        if (!bound.contains(v)) out.insert(v);
      return;
    }
    case Formula::Kind::kForall:
    case Formula::Kind::kExists: {
      const bool fresh = bound.insert(f.bound_var()).second;
      collect_free(f.body(), bound, out);
      if (fresh) bound.erase(f.bound_var());
      return;
    }
    default:
      for (const auto& c : f.children()) collect_free(c, bound, out);
  }
}

void collect_all(const Formula& f, std::set<Var>& out) {
  switch (f.kind()) {
    case Formula::Kind::kEq:
      f.lhs().collect_vars(out);
      f.rhs().collect_vars(out);
      return;
    case Formula::Kind::kForall:
    case Formula::Kind::kExists:
      out.insert(f.bound_var());
      collect_all(f.body(), out);
      return;
    default:
      for (const auto& c : f.children()) collect_all(c, out);
  }
}

}  // namespace

std::set<Var> Formula::free_vars() const {
  std::set<Var> bound, out;
  collect_free(*this, bound, out);
  return out;
}

std::set<Var> Formula::all_vars() const {
  std::set<Var> out;
  collect_all(*this, out);
  return out;
}

bool operator==(const Formula& a, const Formula& b) noexcept {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind) return false;
  if (x.kind == Formula::Kind::kEq) return x.lhs == y.lhs && x.rhs == y.rhs;
  if (a.is_quantifier() && x.var != y.var) return false;
  return x.children == y.children;
}

// ---------------------------------------------------------------------------

namespace {

struct Measure {
  std::size_t symbols = 0;
  std::size_t quantifiers = 0;
  std::size_t depth = 0;
};

Measure measure(const Formula& f) {
  Measure m;
  switch (f.kind()) {
    case Formula::Kind::kEq:
      m.symbols = 1 + f.lhs().node_count() + f.rhs().node_count();
      m.depth = 1 + std::max(f.lhs().depth(), f.rhs().depth());
      return m;
    default: {
      m.symbols = 1;
      if (f.is_quantifier()) m.quantifiers = 1;
      std::size_t deepest = 0;
      for (const auto& c : f.children()) {
        Measure sub = measure(c);
        m.symbols += sub.symbols;
        m.quantifiers += sub.quantifiers;
        deepest = std::max(deepest, sub.depth);
      }
      m.depth = 1 + deepest;
      return m;
    }
  }
}

}  // namespace

LengthReport length(const Formula& f) {
  Measure m = measure(f);
  return LengthReport{m.symbols, m.quantifiers, f.all_vars().size(), m.depth};
}

// ---------------------------------------------------------------------------

Term substitute(const Term& term, Var v, const Term& t) {
  switch (term.kind()) {
    case Term::Kind::kOne:
      return term;
    case Term::Kind::kVar:
      return term.var_index() == v ? t : term;
    case Term::Kind::kMul: {
      if (term.occurrences(v) == 0) return term;
      return Term::mul(substitute(term.left(), v, t), substitute(term.right(), v, t));
    }
    case Term::Kind::kInv:
      if (term.occurrences(v) == 0) return term;
      return Term::inv(substitute(term.arg(), v, t));
  }
  return term;
}

namespace {

Formula substitute_impl(const Formula& f, Var v, const Term& t, const std::set<Var>& t_vars,
                        Var& next_fresh) {
  switch (f.kind()) {
    case Formula::Kind::kEq:
      return Formula::eq(substitute(f.lhs(), v, t), substitute(f.rhs(), v, t));
    case Formula::Kind::kNot:
      return Formula::negation(substitute_impl(f.children()[0], v, t, t_vars, next_fresh));
    case Formula::Kind::kImplies:
      return Formula::implies(substitute_impl(f.children()[0], v, t, t_vars, next_fresh),
                              substitute_impl(f.children()[1], v, t, t_vars, next_fresh));
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr: {
      std::vector<Formula> kids;
      for (const auto& c : f.children()) kids.push_back(substitute_impl(c, v, t, t_vars, next_fresh));
      return f.kind() == Formula::Kind::kAnd ? Formula::conj(std::move(kids))
                                             : Formula::disj(std::move(kids));
    }
    case Formula::Kind::kForall:
    case Formula::Kind::kExists: {
      const Var y = f.bound_var();
      if (y == v || !f.body().free_vars().contains(v)) return f;
      Formula body = f.body();
      Var binder = y;
      if (t_vars.contains(y)) {
        binder = next_fresh++;
        body = substitute_impl(body, y, Term::var(binder), {binder}, next_fresh);
      }
      body = substitute_impl(body, v, t, t_vars, next_fresh);
      return f.kind() == Formula::Kind::kForall ? Formula::forall(binder, std::move(body))
                                                : Formula::exists(binder, std::move(body));
    }
  }
  return f;
}

}  // namespace

Formula substitute(const Formula& f, Var v, const Term& t) {
  std::set<Var> t_vars = t.vars();
  std::set<Var> everything = f.all_vars();
  everything.insert(t_vars.begin(), t_vars.end());
  everything.insert(v);
  Var next_fresh = *everything.rbegin() + 1;
  return substitute_impl(f, v, t, t_vars, next_fresh);
}

}  // namespace sgd
