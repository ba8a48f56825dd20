#include "pljs/engine/interp.hpp"

#include <functional>

#include "pljs/parser.hpp"

namespace pljs::engine {

std::string answer_text(Store& st, const std::vector<Ref>& vars) {
  std::map<Ref, int> names;
  std::string s = "[";
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) s += ",";
    s += st.show(vars[i], names);
  }
  return s + "]";
}

namespace {

struct GoalNode;
using GoalList = std::shared_ptr<const GoalNode>;

/// A pending goal. `cut` is the choice stack height `!` cuts back to;
/// `cut_to` goals carry no term and cut to `cut` when reached.
struct GoalNode {
  Ref goal = 0;
  std::size_t cut = 0;
  bool cut_to = false;
  GoalList next;
};

GoalList push(Ref g, std::size_t cut, GoalList next) {
  return std::make_shared<const GoalNode>(GoalNode{g, cut, false, std::move(next)});
}
GoalList push_cut_to(std::size_t height, GoalList next) {
  return std::make_shared<const GoalNode>(GoalNode{0, height, true, std::move(next)});
}

struct ClauseTemplate {
  Ref head;
  Ref body;
};

struct Choice {
  enum class Kind { Clauses, Alt, Between };
  Kind kind = Kind::Alt;
  Store::Mark mark;
  GoalList cont;
  // Clauses
  const std::vector<ClauseTemplate>* clauses = nullptr;
  Ref goal = 0;
  std::size_t next = 0;
  // Between
  double lo = 0, hi = 0;
  Ref var = 0;
};

}  // namespace

struct Interpreter::Impl {
  SolveOptions opts;
  Store st;
  std::map<std::pair<std::string, std::size_t>, std::vector<ClauseTemplate>> db;
  std::vector<Choice> choices;
  std::size_t steps = 0;
  std::string out;

  void add(const TermPtr& head, const TermPtr& body) {
    std::map<std::string, Ref> vars;
    Ref h = st.from_term(*head, vars);
    Ref b = st.from_term(*body, vars);
    db[st.indicator(h)].push_back({h, b});
  }

  bool backtrack(GoalList& goals);
  bool try_clauses(const std::vector<ClauseTemplate>& cs, Ref g, std::size_t start,
                   GoalList cont, GoalList& goals);
  bool between_from(double lo, double hi, Ref var, GoalList cont, GoalList& goals);
  Ref add_args(Ref g, const std::vector<Ref>& extra);
  bool step(GoalList& goals);
};

Interpreter::Interpreter(SolveOptions opts) : impl_(std::make_unique<Impl>()) {
  impl_->opts = opts;
}
Interpreter::~Interpreter() = default;

void Interpreter::add_clause(const TermPtr& head, const TermPtr& body) { impl_->add(head, body); }

void Interpreter::add_clause(const PlainClause& c) {
  TermPtr body = make_atom("true");
  for (std::size_t i = c.body.size(); i-- > 0;) {
    body = body->is_atom("true") ? c.body[i] : make_compound(",", {c.body[i], body});
  }
  impl_->add(c.head, body);
}

bool Interpreter::Impl::try_clauses(const std::vector<ClauseTemplate>& cs, Ref g, std::size_t start,
                                    GoalList cont, GoalList& goals) {
  const std::size_t height = choices.size();
  for (std::size_t i = start; i < cs.size(); ++i) {
    Store::Mark m = st.mark();
    std::unordered_map<Ref, Ref> vars;
    Ref h = st.copy(cs[i].head, vars);
    if (!st.unify(h, g)) {
      st.undo(m);
      continue;
    }
    Ref b = st.copy(cs[i].body, vars);
    if (i + 1 < cs.size()) {
      Choice c;
      c.kind = Choice::Kind::Clauses;
      c.mark = m;
      c.cont = cont;
      c.clauses = &cs;
      c.goal = g;
      c.next = i + 1;
      choices.push_back(std::move(c));
    }
    goals = push(b, height, std::move(cont));
    return true;
  }
  return false;
}

bool Interpreter::Impl::between_from(double lo, double hi, Ref var, GoalList cont,
                                     GoalList& goals) {
  if (lo > hi) return false;
  Store::Mark m = st.mark();
  if (lo < hi) {
    Choice c;
    c.kind = Choice::Kind::Between;
    c.mark = m;
    c.cont = cont;
    c.lo = lo + 1;
    c.hi = hi;
    c.var = var;
    choices.push_back(std::move(c));
  }
  if (!st.unify(var, st.new_num(lo))) return false;
  goals = std::move(cont);
  return true;
}

bool Interpreter::Impl::backtrack(GoalList& goals) {
  while (!choices.empty()) {
    Choice c = std::move(choices.back());
    choices.pop_back();
    st.undo(c.mark);
    switch (c.kind) {
      case Choice::Kind::Alt:
        goals = c.cont;
        return true;
      case Choice::Kind::Clauses:
        if (try_clauses(*c.clauses, c.goal, c.next, c.cont, goals)) return true;
        break;
      case Choice::Kind::Between:
        if (between_from(c.lo, c.hi, c.var, c.cont, goals)) return true;
        break;
    }
  }
  return false;
}

Ref Interpreter::Impl::add_args(Ref g, const std::vector<Ref>& extra) {
  g = st.deref(g);
  if (st.is_var(g)) throw EngineError("instantiation error");
  if (!st.is_callable(g)) throw EngineError("type error: callable expected");
  if (extra.empty()) return g;
  std::vector<Ref> args;
  const Cell& c = st.cell(g);
  if (c.tag == Tag::Struct)
    for (std::size_t i = 0; i < st.arity(g); ++i) args.push_back(st.arg(g, i));
  args.insert(args.end(), extra.begin(), extra.end());
  return st.new_struct(st.name(g), args);
}

// Runs one goal; false means the goal failed.
bool Interpreter::Impl::step(GoalList& goals) {
  if (++steps > opts.step_limit) throw StepLimit();
  GoalList node = goals;
  goals = node->next;
  if (node->cut_to) {
    choices.resize(std::min(choices.size(), node->cut));
    return true;
  }
  const std::size_t cut = node->cut;
  Ref g = st.deref(node->goal);
  if (st.is_var(g)) throw EngineError("instantiation error");
  if (!st.is_callable(g)) throw EngineError("type error: callable expected");
  auto [name, n] = st.indicator(g);
  auto a = [&](std::size_t i) { return st.arg(g, i); };

  if (n == 0 && name == "!") {
    choices.resize(std::min(choices.size(), cut));
    return true;
  }
  if (n == 2 && name == ",") {
    goals = push(a(0), cut, push(a(1), cut, goals));
    return true;
  }
  auto if_then_else = [&](Ref c, Ref t, std::optional<Ref> e) {
    const std::size_t height = choices.size();
    if (e) {
      Choice ch;
      ch.kind = Choice::Kind::Alt;
      ch.mark = st.mark();
      ch.cont = push(*e, cut, goals);
      choices.push_back(std::move(ch));
    }
    goals = push(c, choices.size(), push_cut_to(height, push(t, cut, goals)));
  };
  if (n == 2 && name == ";") {
    Ref lhs = st.deref(a(0));
    if (st.cell(lhs).tag == Tag::Struct && st.indicator(lhs) == std::make_pair(std::string("->"), std::size_t{2})) {
      if_then_else(st.arg(lhs, 0), st.arg(lhs, 1), a(1));
      return true;
    }
    Choice ch;
    ch.kind = Choice::Kind::Alt;
    ch.mark = st.mark();
    ch.cont = push(a(1), cut, goals);
    choices.push_back(std::move(ch));
    goals = push(lhs, cut, goals);
    return true;
  }
  if (n == 2 && name == "->") {
    if_then_else(a(0), a(1), std::nullopt);
    return true;
  }
  if (n == 1 && name == "\\+") {
    const std::size_t height = choices.size();
    Choice ch;
    ch.kind = Choice::Kind::Alt;
    ch.mark = st.mark();
    ch.cont = goals;
    choices.push_back(std::move(ch));
    goals = push(a(0), choices.size(), push_cut_to(height, push(st.new_atom("fail"), 0, nullptr)));
    return true;
  }
  if (name == "call" && n >= 1) {
    std::vector<Ref> extra;
    for (std::size_t i = 1; i < n; ++i) extra.push_back(a(i));
    goals = push(add_args(a(0), extra), choices.size(), goals);
    return true;
  }
  if (n == 1 && name == kGetCut) return st.unify(a(0), st.new_barrier(cut));
  if (n == 1 && name == kCutTo) {
    Ref b = st.deref(a(0));
    if (st.cell(b).tag != Tag::Barrier) throw EngineError("type error: barrier expected");
    choices.resize(std::min<std::size_t>(choices.size(), st.cell(b).b));
    return true;
  }
  if (n == 3 && name == "between") {
    double lo = st.eval(a(0)), hi = st.eval(a(1));
    Ref x = st.deref(a(2));
    if (!st.is_var(x)) {
      double v = st.eval(x);
      return v >= lo && v <= hi;
    }
    return between_from(lo, hi, x, goals, goals);
  }
  if (n == 1 && name == "write") {
    out += st.show(a(0));
    return true;
  }
  if (n == 0 && name == "nl") {
    out += "\n";
    return true;
  }
  auto it = db.find({name, n});
  if (it != db.end()) return try_clauses(it->second, g, 0, goals, goals);
  std::vector<Ref> args;
  for (std::size_t i = 0; i < n; ++i) args.push_back(a(i));
  if (auto r = call_det_builtin(st, name, args)) return *r;
  return false;
}

Answers Interpreter::solve(const TermPtr& goal) {
  Impl& I = *impl_;
  I.choices.clear();
  I.steps = 0;
  I.out.clear();
  const Store::Mark base = I.st.mark();
  std::map<std::string, Ref> names;
  Ref g = I.st.from_term(*goal, names);
  std::vector<Ref> vars;
  for (const auto& v : variables_of(*goal)) {
    if (v == "_" || v.starts_with(kAnonPrefix)) continue;
    vars.push_back(names.at(v));
  }
  Answers ans;
  GoalList goals = push(g, 0, nullptr);
  for (;;) {
    if (!goals) {
      ans.items.push_back(answer_text(I.st, vars));
      if (ans.items.size() >= I.opts.max_answers || !I.backtrack(goals)) break;
      continue;
    }
    if (!I.step(goals) && !I.backtrack(goals)) break;
  }
  ans.output = I.out;
  I.choices.clear();
  I.st.undo(base);
  return ans;
}

}  // namespace pljs::engine
