#include "sgd/model_check.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <thread>

#include "sgd/error.hpp"
#include "sgd/structure.hpp"

namespace sgd {

namespace {

struct CompiledTerm {
  Term::Kind kind = Term::Kind::kOne;
  Var var = 0;
  int left = -1;
  int right = -1;
};

// Route from one side of an equation down to the single occurrence of the
// quantified variable.
struct Step {
  int term;
  bool toward_left;
};

struct Solver {
  int eq_node = -1;
  bool in_rhs = false;
  std::vector<Step> path;
};

struct CompiledNode {
  Formula::Kind kind = Formula::Kind::kEq;
  Var var = 0;
  int lhs = -1;
  int rhs = -1;
  std::vector<int> kids;
  std::vector<Solver> solvers;
  // Memo: one cell per value of the innermost-bound free variable, valid
  // while the packed values of the other free variables stay unchanged.
  bool memo = false;
  bool has_inner = false;
  Var inner = 0;
  std::vector<Var> outer;
  std::uint64_t outer_key = 0;
  std::uint32_t epoch = 0;
  std::vector<std::uint32_t> stamp;
  std::vector<std::uint8_t> cell;
};

}  // namespace

struct Evaluator::Impl {
  Impl(const Formula& f, const GroupTable& group, const CheckOptions& opts)
      : g(group), options(opts), free_vars(f.free_vars()) {
    const auto vars = f.all_vars();
    values.assign(vars.empty() ? 1 : *vars.rbegin() + 1, 0);
    memo_enabled = options.memo == MemoMode::kOn ||
                   (options.memo == MemoMode::kAuto && length(f).quantifier_count > 4);
    bits = std::max(1, static_cast<int>(std::bit_width(g.order() - 1)));
    std::vector<Var> enclosing;
    root = compile(f, enclosing, false);
  }

  int compile_term(const Term& t) {
    CompiledTerm ct;
    ct.kind = t.kind();
    if (t.kind() == Term::Kind::kVar) ct.var = t.var_index();
    if (t.kind() == Term::Kind::kMul) {
      ct.left = compile_term(t.left());
      ct.right = compile_term(t.right());
    } else if (t.kind() == Term::Kind::kInv) {
      ct.left = compile_term(t.arg());
    }
    terms.push_back(ct);
    return static_cast<int>(terms.size() - 1);
  }

  std::optional<Solver> solver_for(const Formula& eq, int eq_node, Var x) const {
    if (eq.kind() != Formula::Kind::kEq) return std::nullopt;
    const std::size_t in_l = eq.lhs().occurrences(x);
    const std::size_t in_r = eq.rhs().occurrences(x);
    if (in_l + in_r != 1) return std::nullopt;
    Solver s;
    s.eq_node = eq_node;
    s.in_rhs = in_r == 1;
    const Term* t = s.in_rhs ? &eq.rhs() : &eq.lhs();
    int ct = s.in_rhs ? nodes[eq_node].rhs : nodes[eq_node].lhs;
    while (t->kind() != Term::Kind::kVar) {
      if (t->kind() == Term::Kind::kInv) {
        s.path.push_back({ct, true});
        t = &t->arg();
        ct = terms[ct].left;
      } else {
        const bool left = t->left().occurrences(x) == 1;
        s.path.push_back({ct, left});
        t = left ? &t->left() : &t->right();
        ct = left ? terms[ct].left : terms[ct].right;
      }
    }
    return s;
  }

  int compile(const Formula& f, std::vector<Var>& enclosing, bool quantifier_body) {
    CompiledNode node;
    node.kind = f.kind();
    if (f.kind() == Formula::Kind::kEq) {
      node.lhs = compile_term(f.lhs());
      node.rhs = compile_term(f.rhs());
      nodes.push_back(std::move(node));
      return static_cast<int>(nodes.size() - 1);
    }
    if (f.is_quantifier()) {
      node.var = f.bound_var();
      enclosing.push_back(node.var);
      node.kids.push_back(compile(f.body(), enclosing, true));
      enclosing.pop_back();
    } else {
      for (const auto& c : f.children()) node.kids.push_back(compile(c, enclosing, false));
    }
    const int index = static_cast<int>(nodes.size());
    nodes.push_back(std::move(node));
    if (f.is_quantifier()) configure_quantifier(f, index, enclosing, quantifier_body);
    return index;
  }

  void configure_quantifier(const Formula& f, int index, const std::vector<Var>& enclosing, bool quantifier_body) {
    const Var x = f.bound_var();
    const Formula& body = f.body();
    const int body_node = nodes[index].kids[0];
    if (options.solve_equations) {
      if (f.kind() == Formula::Kind::kExists) {
        if (auto s = solver_for(body, body_node, x)) {
          nodes[index].solvers.push_back(std::move(*s));
        } else if (body.kind() == Formula::Kind::kAnd) {
          const auto kids = body.children();
          for (std::size_t i = 0; i < kids.size(); ++i) {
            if (auto s2 = solver_for(kids[i], nodes[body_node].kids[i], x)) {
              nodes[index].solvers.push_back(std::move(*s2));
              break;
            }
          }
        }
      } else if (body.kind() == Formula::Kind::kImplies) {
        const Formula& premise = body.children()[0];
        const int premise_node = nodes[body_node].kids[0];
        std::vector<Solver> solvers;
        bool ok = true;
        if (premise.kind() == Formula::Kind::kOr) {
          const auto kids = premise.children();
          for (std::size_t i = 0; i < kids.size() && ok; ++i) {
            auto s = solver_for(kids[i], nodes[premise_node].kids[i], x);
            ok = s.has_value();
            if (ok) solvers.push_back(std::move(*s));
          }
        } else {
          auto s = solver_for(premise, premise_node, x);
          ok = s.has_value();
          if (ok) solvers.push_back(std::move(*s));
        }
        if (ok) nodes[index].solvers = std::move(solvers);
      }
    }
    if (!memo_enabled || quantifier_body) return;
    const auto fv = f.free_vars();
    bool independent = false;
    for (Var e : enclosing) independent = independent || !fv.contains(e);
    if (!independent) return;
    CompiledNode& node = nodes[index];
    for (auto it = enclosing.rbegin(); it != enclosing.rend() && !node.has_inner; ++it) {
      if (fv.contains(*it)) {
        node.has_inner = true;
        node.inner = *it;
      }
    }
    for (Var v : fv)
      if (!node.has_inner || v != node.inner) node.outer.push_back(v);
    if (node.outer.size() * static_cast<std::size_t>(bits) > 64) {
      node.outer.clear();
      node.has_inner = false;
      return;
    }
    node.memo = true;
    node.epoch = 1;
    node.stamp.assign(node.has_inner ? g.order() : 1, 0);
    node.cell.assign(node.stamp.size(), 0);
  }

  Elem term(int t) const {
    const CompiledTerm& ct = terms[t];
    switch (ct.kind) {
      case Term::Kind::kOne: return g.identity();
      case Term::Kind::kVar: return values[ct.var];
      case Term::Kind::kMul: return g.mul(term(ct.left), term(ct.right));
      case Term::Kind::kInv: return g.inv(term(ct.left));
    }
    return g.identity();
  }

  Elem solve(const Solver& s) const {
    const CompiledNode& eq = nodes[s.eq_node];
    Elem target = term(s.in_rhs ? eq.lhs : eq.rhs);
    for (const Step& step : s.path) {
      const CompiledTerm& ct = terms[step.term];
      if (ct.kind == Term::Kind::kInv) {
        target = g.inv(target);
      } else if (step.toward_left) {
        target = g.mul(target, g.inv(term(ct.right)));
      } else {
        target = g.mul(g.inv(term(ct.left)), target);
      }
    }
    return target;
  }

  std::uint64_t outer_key(const CompiledNode& node) const {
    std::uint64_t k = 0;
    for (Var v : node.outer) k = (k << bits) | values[v];
    return k;
  }

  bool eval(int index) {
    if (++visited > options.budget)
      throw Error(Errc::kBudgetExceeded, "node budget of " + std::to_string(options.budget) + " exhausted");
    CompiledNode& node = nodes[index];
    switch (node.kind) {
      case Formula::Kind::kEq:
        return term(node.lhs) == term(node.rhs);
      case Formula::Kind::kNot:
        return !eval(node.kids[0]);
      case Formula::Kind::kAnd:
        for (int k : node.kids)
          if (!eval(k)) return false;
        return true;
      case Formula::Kind::kOr:
        for (int k : node.kids)
          if (eval(k)) return true;
        return false;
      case Formula::Kind::kImplies:
        return !eval(node.kids[0]) || eval(node.kids[1]);
      case Formula::Kind::kForall:
      case Formula::Kind::kExists: {
        if (!node.memo) return quantify(index);
        const std::uint64_t k = outer_key(node);
        if (k != node.outer_key) {
          node.outer_key = k;
          if (++node.epoch == 0) {
            std::fill(node.stamp.begin(), node.stamp.end(), 0);
            node.epoch = 1;
          }
        }
        const std::size_t slot = node.has_inner ? values[node.inner] : 0;
        if (node.stamp[slot] == node.epoch) return node.cell[slot] != 0;
        const bool r = quantify(index);
        node.stamp[slot] = node.epoch;
        node.cell[slot] = r ? 1 : 0;
        return r;
      }
    }
    return false;
  }

  bool quantify(int index) {
    const CompiledNode& node = nodes[index];
    const bool is_exists = node.kind == Formula::Kind::kExists;
    const Var x = node.var;
    const int body = node.kids[0];
    const Elem saved = values[x];
    bool result = !is_exists;
    if (!node.solvers.empty()) {
      Elem candidates[8];
      std::vector<Elem> overflow;
      std::size_t count = 0;
      for (const Solver& s : node.solvers) {
        const Elem c = solve(s);
        bool dup = false;
        for (std::size_t i = 0; i < count && !dup; ++i)
          dup = (i < 8 ? candidates[i] : overflow[i - 8]) == c;
        if (dup) continue;
        if (count < 8) {
          candidates[count] = c;
        } else {
          overflow.push_back(c);
        }
        ++count;
      }
      for (std::size_t i = 0; i < count; ++i) {
        values[x] = i < 8 ? candidates[i] : overflow[i - 8];
        if (eval(body) == is_exists) {
          result = is_exists;
          break;
        }
      }
    } else {
      const auto n = static_cast<Elem>(g.order());
      for (Elem e = 0; e < n; ++e) {
        values[x] = e;
        if (eval(body) == is_exists) {
          result = is_exists;
          break;
        }
      }
    }
    values[x] = saved;
    return result;
  }

  void bind(const Environment& env) {
    for (Var v : free_vars) {
      auto it = env.bindings.find(v);
      if (it == env.bindings.end())
        throw Error(Errc::kUnboundVariable, "free variable v" + std::to_string(v) + " is not bound");
      if (it->second >= g.order()) throw Error(Errc::kIndexOutOfRange, "binding is not a group element");
      values[v] = it->second;
    }
  }

  const GroupTable& g;
  CheckOptions options;
  std::set<Var> free_vars;
  std::vector<CompiledTerm> terms;
  std::vector<CompiledNode> nodes;
  std::vector<Elem> values;
  bool memo_enabled = false;
  int bits = 1;
  int root = -1;
  std::uint64_t visited = 0;
};

Evaluator::Evaluator(const Formula& f, const GroupTable& g, const CheckOptions& options)
    : impl_(std::make_unique<Impl>(f, g, options)) {}
Evaluator::~Evaluator() = default;
Evaluator::Evaluator(Evaluator&&) noexcept = default;
Evaluator& Evaluator::operator=(Evaluator&&) noexcept = default;

bool Evaluator::evaluate(const Environment& env) {
  impl_->bind(env);
  return impl_->eval(impl_->root);
}

std::uint64_t Evaluator::nodes_visited() const noexcept { return impl_->visited; }

CheckOutcome eval(const Formula& f, const GroupTable& g, const Environment& env, const CheckOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  Evaluator ev(f, g, options);
  CheckOutcome out;
  out.value = ev.evaluate(env);
  out.nodes_visited = ev.nodes_visited();
  out.elapsed = std::chrono::steady_clock::now() - start;
  return out;
}

namespace {

// Splits the outermost quantifier's domain across worker threads. Each worker
// owns an Evaluator (and so its own memo tables).
CheckOutcome check_parallel(const Formula& s, const GroupTable& g, const CheckOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const bool is_exists = s.kind() == Formula::Kind::kExists;
  const Var x = s.bound_var();
  const unsigned jobs = std::min<unsigned>(options.jobs, static_cast<unsigned>(g.order()));
  std::atomic<bool> decided{false};
  std::atomic<std::uint64_t> visited{0};
  std::mutex error_mutex;
  std::exception_ptr error;

  auto worker = [&](unsigned id) {
    try {
      CheckOptions local = options;
      local.jobs = 1;
      Evaluator ev(s.body(), g, local);
      Environment env;
      std::uint64_t reported = 0;
      for (Elem e = id; e < g.order() && !decided.load(); e += jobs) {
        env.bindings[x] = e;
        const bool v = ev.evaluate(env);
        visited += ev.nodes_visited() - reported;
        reported = ev.nodes_visited();
        if (visited.load() > options.budget)
          throw Error(Errc::kBudgetExceeded, "node budget of " + std::to_string(options.budget) + " exhausted");
        if (v == is_exists) decided = true;
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      decided = true;
    }
  };
  std::vector<std::thread> threads;
  for (unsigned id = 0; id < jobs; ++id) threads.emplace_back(worker, id);
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);

  CheckOutcome out;
  out.value = is_exists ? decided.load() : !decided.load();
  out.nodes_visited = visited.load() + 1;
  out.elapsed = std::chrono::steady_clock::now() - start;
  return out;
}

}  // namespace

CheckOutcome check_sentence(const Formula& s, const GroupTable& g, const CheckOptions& options) {
  if (!s.is_sentence()) throw Error(Errc::kNotClosed, "formula has free variables");
  if (options.jobs > 1 && s.is_quantifier() && g.order() > 1) return check_parallel(s, g, options);
  return eval(s, g, Environment{}, options);
}

UniquenessReport describes_uniquely(const Formula& s, const GroupTable& target,
                                    const std::vector<NamedGroup>& catalog, const CheckOptions& options) {
  UniquenessReport report;
  for (const auto& member : catalog) {
    UniquenessEntry e;
    e.name = member.name;
    e.order = member.table->order();
    e.isomorphic_to_target = is_isomorphic(*member.table, target).has_value();
    const CheckOutcome out = check_sentence(s, *member.table, options);
    e.value = out.value;
    e.nodes_visited = out.nodes_visited;
    e.elapsed = out.elapsed;
    report.target_in_catalog = report.target_in_catalog || e.isomorphic_to_target;
    if (e.value != e.isomorphic_to_target) report.violators.push_back(e.name);
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace sgd
