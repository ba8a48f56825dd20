#include "pljs/engine/vm.hpp"

#include <algorithm>
#include <functional>

namespace pljs::engine {

const CodeTable::Entry* CodeTable::find(const Target& t) const {
  Target key{t.module, t.cls, t.pred, false};
  auto it = preds.find(key);
  return it == preds.end() ? nullptr : &it->second;
}

CodeTable build_code_table(const ResolvedProgram& prog, const CodegenOptions& opts) {
  CodeTable table;
  for (const auto& m : prog.modules) {
    for (const auto& def : m.preds) {
      CodeTable::Entry e{&m, &def, compile_predicate(m.name, def, opts)};
      table.preds.emplace(Target{m.name, def.cls, def.pred, false}, std::move(e));
    }
  }
  return table;
}

namespace {

struct Frame;
using FramePtr = std::shared_ptr<Frame>;

struct Cont {
  const CodeTable::Entry* entry = nullptr;  // null: the query's own continuation
  int clause = 0;
  int chunk = 0;
  FramePtr frame;
};

struct Frame {
  FramePtr prev;
  Cont cont;
  std::size_t choice = 0;
  std::vector<Ref> y;
};

struct Goal {
  const CodeTable::Entry* entry = nullptr;
  Target target;
  std::string caller;  // module of the calling clause
  std::vector<Ref> args;
};

struct Choice {
  enum class Kind { Clauses, Between };
  Kind kind = Kind::Clauses;
  Store::Mark mark;
  FramePtr frame;
  Goal goal;
  std::vector<int> alts;
  std::size_t next = 0;
  double lo = 0, hi = 0;
  Ref var = 0;
};

enum class Mode { Exec, Resume, Fail };

}  // namespace

struct Vm::Impl {
  const CodeTable& code;
  SolveOptions opts;
  Store st;
  std::vector<Choice> choices;
  FramePtr frame;
  Goal goal;
  Cont next;
  std::size_t steps = 0;
  std::size_t entries = 0;

  Impl(const CodeTable& c, SolveOptions o) : code(c), opts(o) {}

  Mode execute();
  Mode run_chunk(const CodeTable::Entry* e, int ci, int k, FramePtr f, const std::vector<Ref>* args);
  Mode enter(const CodeTable::Entry* e, int ci, const std::vector<Ref>& args);
  Mode builtin();
  Mode proceed() {
    next = frame->cont;
    frame = frame->prev;
    return Mode::Resume;
  }
  Mode between_from(double lo, double hi, Ref var);
  Mode backtrack();
  Target resolve(const std::string& module, const PredInd& pred) const;
};

Target Vm::Impl::resolve(const std::string& module, const PredInd& pred) const {
  for (const auto& [t, e] : code.preds) {
    if (t.module != module) continue;
    if (auto it = e.module->visible.find(pred); it != e.module->visible.end()) return it->second;
    if (auto tc = e.module->term_class(pred)) return *tc;
    break;
  }
  std::string_view b = builtin_module_of(pred);
  if (!b.empty()) return Target{std::string(b), {}, pred, true};
  throw EngineError("existence error: unknown procedure " + pred.key());
}

Mode Vm::Impl::enter(const CodeTable::Entry* e, int ci, const std::vector<Ref>& args) {
  ++entries;
  return run_chunk(e, ci, 0, frame, &args);
}

Mode Vm::Impl::execute() {
  if (++steps > opts.step_limit) throw StepLimit();
  if (!goal.entry) return builtin();
  const CodeTable::Entry* e = goal.entry;
  if (e->def->foreign) throw EngineError("foreign predicate " + e->def->pred.key() + " cannot run here");
  const ChunkIR& ir = e->ir;
  const std::size_t n = ir.clauses.size();
  if (n == 0) return Mode::Fail;
  std::vector<int> cs;
  if (!ir.selection.indexed) {
    cs.resize(n);
    for (std::size_t i = 0; i < n; ++i) cs[i] = static_cast<int>(i);
  } else {
    auto key = st.index_key(goal.args.at(0));
    if (!key) {
      cs = ir.selection.var_bucket;
    } else {
      cs = ir.selection.default_bucket;
      for (const auto& [k, b] : ir.selection.buckets)
        if (k == *key) cs = b;
    }
  }
  if (cs.empty()) return Mode::Fail;
  if (cs.size() > 1) {
    Choice c;
    c.kind = Choice::Kind::Clauses;
    c.mark = st.mark();
    c.frame = frame;
    c.goal = goal;
    c.alts = cs;
    c.next = 1;
    choices.push_back(std::move(c));
  }
  std::vector<Ref> args = goal.args;
  return enter(e, cs[0], args);
}

Mode Vm::Impl::between_from(double lo, double hi, Ref var) {
  if (lo > hi) return Mode::Fail;
  if (lo < hi) {
    Choice c;
    c.kind = Choice::Kind::Between;
    c.mark = st.mark();
    c.frame = frame;
    c.goal = goal;
    c.lo = lo + 1;
    c.hi = hi;
    c.var = var;
    choices.push_back(std::move(c));
  }
  if (!st.unify(var, st.new_num(lo))) return Mode::Fail;
  return proceed();
}

Mode Vm::Impl::builtin() {
  const std::string& name = goal.target.pred.name;
  const std::size_t n = goal.target.pred.arity;
  const auto& a = goal.args;
  if (name == "call" && n >= 1) {
    Ref g = st.deref(a[0]);
    if (st.is_var(g)) throw EngineError("instantiation error");
    if (!st.is_callable(g)) throw EngineError("type error: callable expected");
    auto [gname, garity] = st.indicator(g);
    std::vector<Ref> args;
    if (st.cell(g).tag == Tag::Struct)
      for (std::size_t i = 0; i < garity; ++i) args.push_back(st.arg(g, i));
    for (std::size_t i = 1; i < n; ++i) args.push_back(a[i]);
    PredInd p{gname, args.size()};
    if (auto op = inline_op(p)) {
      if (*op != InlineOp::True && *op != InlineOp::Fail && *op != InlineOp::Unify)
        throw EngineError("call/N of " + p.key() + " is not supported here");
    }
    Target t = resolve(goal.caller, p);
    frame = std::make_shared<Frame>(Frame{frame->prev, frame->cont, choices.size(), {}});
    goal = Goal{code.find(t), t, goal.caller, std::move(args)};
    return Mode::Exec;
  }
  if (name == "between" && n == 3) {
    double lo = st.eval(a[0]), hi = st.eval(a[1]);
    Ref x = st.deref(a[2]);
    if (!st.is_var(x)) {
      double v = st.eval(x);
      return v >= lo && v <= hi ? proceed() : Mode::Fail;
    }
    return between_from(lo, hi, x);
  }
  if (name == "!" && n == 0) {
    choices.resize(std::min(choices.size(), frame->choice));
    return proceed();
  }
  if (auto r = call_det_builtin(st, name, a)) return *r ? proceed() : Mode::Fail;
  throw EngineError("builtin " + goal.target.pred.key() + " is not supported here");
}

Mode Vm::Impl::run_chunk(const CodeTable::Entry* e, int ci, int k, FramePtr f,
                         const std::vector<Ref>* args) {
  const ClauseCode& cc = e->ir.clauses[static_cast<std::size_t>(ci)];
  const Chunk& chunk = cc.chunks[static_cast<std::size_t>(k)];
  if (f->y.size() < static_cast<std::size_t>(cc.nframe)) f->y.resize(static_cast<std::size_t>(cc.nframe));
  std::vector<Ref> temps(static_cast<std::size_t>(cc.ntemp), 0);

  auto slot = [&](const Slot& s) -> Ref& {
    switch (s.kind) {
      case SlotKind::Temp: return temps.at(static_cast<std::size_t>(s.index));
      case SlotKind::FrameY: return f->y.at(static_cast<std::size_t>(s.index));
      case SlotKind::Arg:
        if (!args) throw EngineError("argument slot read outside the first chunk");
        return const_cast<Ref&>(args->at(static_cast<std::size_t>(s.index)));
    }
    return temps.at(0);
  };
  std::function<Ref(const Expr&)> build = [&](const Expr& x) -> Ref {
    switch (x.kind) {
      case Expr::Kind::Var: return slot(x.slot);
      case Expr::Kind::Atom: return st.new_atom(x.name);
      case Expr::Kind::Num: return st.new_num(x.num);
      case Expr::Kind::Str: return st.new_str(x.name);
      case Expr::Kind::Struct: {
        std::vector<Ref> xs;
        for (const auto& y : x.args) xs.push_back(build(y));
        return st.new_struct(x.name, xs);
      }
    }
    return st.new_var();
  };
  auto cut_to = [&](std::size_t h) { choices.resize(std::min(choices.size(), h)); };

  std::vector<Ref> put(chunk.call ? chunk.call->arity : 0, 0);
  for (const auto& s : chunk.steps) {
    switch (s.kind) {
      case StepKind::GetArg:
        slot(s.slot) = args->at(static_cast<std::size_t>(s.arg));
        break;
      case StepKind::NewVar:
        slot(s.slot) = st.new_var();
        break;
      case StepKind::Unify:
        if (!st.unify(args->at(static_cast<std::size_t>(s.arg)), build(s.expr))) return Mode::Fail;
        break;
      case StepKind::PutArg:
        put.at(static_cast<std::size_t>(s.arg)) = build(s.expr);
        break;
      case StepKind::Cut:
        cut_to(f->choice);
        break;
      case StepKind::GetCut:
        slot(s.slot) = st.new_barrier(f->choice);
        break;
      case StepKind::CutTo: {
        Ref b = st.deref(build(s.expr));
        if (st.cell(b).tag != Tag::Barrier) throw EngineError("type error: barrier expected");
        cut_to(st.cell(b).b);
        break;
      }
      case StepKind::Builtin: {
        auto arg = [&](std::size_t i) { return build(s.args.at(i)); };
        bool ok = true;
        switch (s.op) {
          case InlineOp::Unify: ok = st.unify(arg(0), arg(1)); break;
          case InlineOp::Is: ok = st.unify(arg(0), st.new_num(st.eval(arg(1)))); break;
          case InlineOp::Lt: ok = st.eval(arg(0)) < st.eval(arg(1)); break;
          case InlineOp::Gt: ok = st.eval(arg(0)) > st.eval(arg(1)); break;
          case InlineOp::Le: ok = st.eval(arg(0)) <= st.eval(arg(1)); break;
          case InlineOp::Ge: ok = st.eval(arg(0)) >= st.eval(arg(1)); break;
          case InlineOp::ArEq: ok = st.eval(arg(0)) == st.eval(arg(1)); break;
          case InlineOp::ArNe: ok = st.eval(arg(0)) != st.eval(arg(1)); break;
          case InlineOp::Var: ok = st.is_var(arg(0)); break;
          case InlineOp::Nonvar: ok = !st.is_var(arg(0)); break;
          case InlineOp::True: break;
          case InlineOp::Fail: ok = false; break;
          case InlineOp::Cut: cut_to(f->choice); break;
          case InlineOp::GetCut:
          case InlineOp::CutTo:
            throw EngineError("barrier goal compiled as a builtin step");
        }
        if (!ok) return Mode::Fail;
        break;
      }
    }
  }
  if (chunk.call) {
    if (chunk.call->is_last) {
      frame = std::make_shared<Frame>(Frame{f->prev, f->cont, choices.size(), {}});
    } else {
      frame = std::make_shared<Frame>(Frame{f, Cont{e, ci, k + 1, f}, choices.size(), {}});
    }
    const Target& t = chunk.call->target;
    goal = Goal{t.builtin ? nullptr : code.find(t), t, e->module->name, std::move(put)};
    if (!goal.entry && !t.builtin && !is_builtin_module(t.module))
      throw EngineError("no code for " + t.display());
    return Mode::Exec;
  }
  frame = f->prev;
  next = f->cont;
  return Mode::Resume;
}

Mode Vm::Impl::backtrack() {
  while (!choices.empty()) {
    Choice& c = choices.back();
    st.undo(c.mark);
    frame = c.frame;
    goal = c.goal;
    if (c.kind == Choice::Kind::Between) {
      Choice cp = std::move(c);
      choices.pop_back();
      return between_from(cp.lo, cp.hi, cp.var);
    }
    int alt = c.alts[c.next++];
    if (c.next >= c.alts.size()) choices.pop_back();
    std::vector<Ref> args = goal.args;
    return enter(goal.entry, alt, args);
  }
  return Mode::Fail;
}

Vm::Vm(const CodeTable& code, SolveOptions opts) : impl_(std::make_unique<Impl>(code, opts)) {}
Vm::~Vm() = default;

std::size_t Vm::clause_entries() const { return impl_->entries; }

Answers Vm::solve(const std::string& module, const PredInd& pred) {
  Impl& I = *impl_;
  I.choices.clear();
  I.steps = 0;
  I.entries = 0;
  const Store::Mark base = I.st.mark();
  std::vector<Ref> vars;
  for (std::size_t i = 0; i < pred.arity; ++i) vars.push_back(I.st.new_var());
  Target t{module, {}, pred, false};
  const CodeTable::Entry* e = I.code.find(t);
  if (!e) throw EngineError("no code for " + t.display());
  I.frame = std::make_shared<Frame>(Frame{nullptr, Cont{}, 0, {}});
  I.goal = Goal{e, t, module, vars};
  Answers ans;
  Mode mode = Mode::Exec;
  for (;;) {
    switch (mode) {
      case Mode::Exec:
        mode = I.execute();
        break;
      case Mode::Resume:
        if (!I.next.entry) {
          ans.items.push_back(answer_text(I.st, vars));
          if (ans.items.size() >= I.opts.max_answers) {
            I.choices.clear();
            I.st.undo(base);
            return ans;
          }
          mode = Mode::Fail;
        } else {
          Cont c = I.next;
          mode = I.run_chunk(c.entry, c.clause, c.chunk, c.frame, nullptr);
        }
        break;
      case Mode::Fail:
        if (I.choices.empty()) {
          I.st.undo(base);
          return ans;
        }
        mode = I.backtrack();
        break;
    }
  }
}

}  // namespace pljs::engine
