#include "pljs/codegen.hpp"

#include <functional>
#include <set>

#include "pljs/jsfmt.hpp"

namespace pljs {

std::string to_string(const Slot& s) {
  switch (s.kind) {
    case SlotKind::Temp: return "T" + std::to_string(s.index);
    case SlotKind::FrameY: return "Y" + std::to_string(s.index);
    case SlotKind::Arg: return "A" + std::to_string(s.index);
  }
  return "?";
}

Expr Expr::var(Slot s) {
  Expr e;
  e.kind = Kind::Var;
  e.slot = s;
  return e;
}

Expr Expr::atom(std::string name) {
  Expr e;
  e.kind = Kind::Atom;
  e.name = std::move(name);
  return e;
}

Expr Expr::number(double v) {
  Expr e;
  e.kind = Kind::Num;
  e.num = v;
  return e;
}

Expr Expr::str(std::string text) {
  Expr e;
  e.kind = Kind::Str;
  e.name = std::move(text);
  return e;
}

Expr Expr::structure(std::string name, std::vector<Expr> args) {
  Expr e;
  e.kind = Kind::Struct;
  e.name = std::move(name);
  e.args = std::move(args);
  return e;
}

std::string to_string(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Var: return to_string(e.slot);
    case Expr::Kind::Atom: return quote_atom(e.name);
    case Expr::Kind::Num: return js::number_to_string(e.num);
    case Expr::Kind::Str: return js::string_literal(e.name);
    case Expr::Kind::Struct: {
      std::string s = quote_atom(e.name) + "(";
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i) s += ",";
        s += to_string(e.args[i]);
      }
      return s + ")";
    }
  }
  return "?";
}

std::optional<std::string> index_key(const Term& t) {
  switch (t.kind) {
    case TermKind::Var: return std::nullopt;
    case TermKind::Atom: return t.name + "/0";
    case TermKind::Compound: return t.name + "/" + std::to_string(t.arity());
    case TermKind::Int: return "#" + js::number_to_string(static_cast<double>(t.ival));
    case TermKind::Float: return "#" + js::number_to_string(t.fval);
    case TermKind::Str: return "\"" + t.name;
  }
  return std::nullopt;
}

namespace {

bool is_call(const ResolvedGoal& g) { return !g.inl.has_value(); }

// Chunk index of each body goal: a call ends its chunk.
std::vector<int> goal_chunks(const ResolvedClause& c, int& nchunks) {
  std::vector<int> out;
  int k = 0;
  for (const auto& g : c.body) {
    out.push_back(k);
    if (is_call(g)) ++k;
  }
  bool tail = c.body.empty() || !is_call(c.body.back());
  nchunks = k + (tail ? 1 : 0);
  return out;
}

void note_vars(const Term& t, int chunk, std::vector<std::string>& order,
               std::map<std::string, std::set<int>>& chunks) {
  if (t.is_var()) {
    if (!chunks.contains(t.name)) order.push_back(t.name);
    chunks[t.name].insert(chunk);
    return;
  }
  for (const auto& a : t.args) note_vars(*a, chunk, order, chunks);
}

}  // namespace

SlotAssignment allocate_slots(const ResolvedClause& clause) {
  int nchunks = 0;
  auto gc = goal_chunks(clause, nchunks);
  std::vector<std::string> order;
  std::map<std::string, std::set<int>> chunks;
  note_vars(*clause.head, 0, order, chunks);
  for (std::size_t i = 0; i < clause.body.size(); ++i) {
    note_vars(*clause.body[i].term, gc[i], order, chunks);
  }

  std::map<std::string, int> head_top;   // top-level head argument position
  std::map<std::string, int> head_count;
  for (std::size_t i = 0; i < clause.head->arity(); ++i) {
    const Term& a = *clause.head->args[i];
    if (a.is_var()) head_top.emplace(a.name, static_cast<int>(i));
  }
  std::function<void(const Term&)> count = [&](const Term& t) {
    if (t.is_var()) {
      ++head_count[t.name];
      return;
    }
    for (const auto& a : t.args) count(*a);
  };
  for (const auto& a : clause.head->args) count(*a);

  SlotAssignment out;
  for (const auto& v : order) {
    const auto& cs = chunks[v];
    if (cs.size() >= 2) {
      out.slots[v] = Slot{SlotKind::FrameY, out.nframe++};
    } else if (head_top.contains(v) && head_count[v] == 1 && *cs.begin() == 0) {
      out.slots[v] = Slot{SlotKind::Arg, head_top[v]};
    } else {
      out.slots[v] = Slot{SlotKind::Temp, out.ntemp++};
    }
  }
  return out;
}

namespace {

class ChunkBuilder {
 public:
  explicit ChunkBuilder(const SlotAssignment& slots) : slots_(slots) {}

  Expr expr(const Term& t) {
    switch (t.kind) {
      case TermKind::Var: return Expr::var(slots_.slots.at(t.name));
      case TermKind::Atom: return Expr::atom(t.name);
      case TermKind::Int: return Expr::number(static_cast<double>(t.ival));
      case TermKind::Float: return Expr::number(t.fval);
      case TermKind::Str: return Expr::str(t.name);
      case TermKind::Compound: {
        std::vector<Expr> args;
        for (const auto& a : t.args) args.push_back(expr(*a));
        return Expr::structure(t.name, std::move(args));
      }
    }
    return Expr::atom("[]");
  }

  // NewVar for every variable of `t` not yet initialized.
  void fresh(const Term& t, std::vector<Step>& steps) {
    if (t.is_var()) {
      if (seen_.insert(t.name).second) {
        Step s;
        s.kind = StepKind::NewVar;
        s.slot = slots_.slots.at(t.name);
        steps.push_back(s);
      }
      return;
    }
    for (const auto& a : t.args) fresh(*a, steps);
  }

  bool seen(const std::string& v) const { return seen_.contains(v); }
  void mark(const std::string& v) { seen_.insert(v); }
  Slot slot(const std::string& v) const { return slots_.slots.at(v); }

 private:
  const SlotAssignment& slots_;
  std::set<std::string> seen_;
};

}  // namespace

ClauseCode split_chunks(const ResolvedClause& clause, const SlotAssignment& slots) {
  ClauseCode code;
  code.nframe = slots.nframe;
  code.ntemp = slots.ntemp;
  ChunkBuilder b(slots);
  Chunk cur;

  for (std::size_t i = 0; i < clause.head->arity(); ++i) {
    const Term& a = *clause.head->args[i];
    Step s;
    s.arg = static_cast<int>(i);
    if (a.is_var() && !b.seen(a.name)) {
      b.mark(a.name);
      Slot sl = b.slot(a.name);
      if (sl.kind == SlotKind::Arg) continue;
      s.kind = StepKind::GetArg;
      s.slot = sl;
      cur.steps.push_back(s);
      continue;
    }
    b.fresh(a, cur.steps);
    s.kind = StepKind::Unify;
    s.expr = b.expr(a);
    cur.steps.push_back(s);
  }

  for (std::size_t gi = 0; gi < clause.body.size(); ++gi) {
    const ResolvedGoal& g = clause.body[gi];
    const Term& t = *g.term;
    if (g.inl) {
      Step s;
      switch (*g.inl) {
        case InlineOp::True:
          continue;
        case InlineOp::Cut:
          s.kind = StepKind::Cut;
          code.saves_cut = true;
          break;
        case InlineOp::GetCut: {
          const Term& v = *t.args[0];
          if (!v.is_var() || b.seen(v.name)) {
            throw CompileError("internal error", "'$get_cut'/1 needs a fresh variable", t.pos);
          }
          b.mark(v.name);
          s.kind = StepKind::GetCut;
          s.slot = b.slot(v.name);
          code.saves_cut = true;
          break;
        }
        case InlineOp::CutTo:
          b.fresh(t, cur.steps);
          s.kind = StepKind::CutTo;
          s.expr = b.expr(*t.args[0]);
          break;
        default:
          b.fresh(t, cur.steps);
          s.kind = StepKind::Builtin;
          s.op = *g.inl;
          for (const auto& a : t.args) s.args.push_back(b.expr(*a));
          break;
      }
      cur.steps.push_back(std::move(s));
      continue;
    }
    b.fresh(t, cur.steps);
    for (std::size_t i = 0; i < t.arity(); ++i) {
      Step s;
      s.kind = StepKind::PutArg;
      s.arg = static_cast<int>(i);
      s.expr = b.expr(*t.args[i]);
      cur.steps.push_back(std::move(s));
    }
    cur.call = Call{g.target, t.arity(), gi + 1 == clause.body.size()};
    code.chunks.push_back(std::move(cur));
    cur = Chunk{};
  }
  if (code.chunks.empty() || !code.chunks.back().call->is_last) {
    code.chunks.push_back(std::move(cur));
  }
  bool inner_call = false;
  for (const auto& c : code.chunks) inner_call = inner_call || (c.call && !c.call->is_last);
  code.needs_frame = code.nframe > 0 || inner_call;
  return code;
}

Selection index_clauses(const std::vector<ResolvedClause>& clauses, bool enable) {
  Selection sel;
  for (std::size_t i = 0; i < clauses.size(); ++i) sel.var_bucket.push_back(static_cast<int>(i));
  if (!enable || clauses.empty() || clauses.front().head->arity() == 0) return sel;

  std::vector<std::optional<std::string>> keys;
  bool any = false;
  for (const auto& c : clauses) {
    keys.push_back(index_key(*c.head->args[0]));
    any = any || keys.back().has_value();
  }
  if (!any) return sel;
  sel.indexed = true;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (!keys[i]) {
      sel.default_bucket.push_back(static_cast<int>(i));
      continue;
    }
    bool known = false;
    for (const auto& [k, _] : sel.buckets) known = known || k == *keys[i];
    if (known) continue;
    std::vector<int> bucket;
    for (std::size_t j = 0; j < keys.size(); ++j) {
      if (!keys[j] || *keys[j] == *keys[i]) bucket.push_back(static_cast<int>(j));
    }
    sel.buckets.emplace_back(*keys[i], std::move(bucket));
  }
  return sel;
}

ChunkIR compile_predicate(const std::string& module, const PredicateDef& def,
                          const CodegenOptions& opts) {
  ChunkIR ir;
  ir.module = module;
  ir.cls = def.cls;
  ir.pred = def.pred;
  for (const auto& c : def.clauses) {
    if (indicator(*c.head) != def.pred) {
      throw CompileError("internal error", "clause head " + indicator(*c.head).key() +
                                               " in predicate " + def.pred.key(), c.pos);
    }
    ir.clauses.push_back(compile_clause(c));
  }
  ir.selection = index_clauses(def.clauses, opts.index);
  return ir;
}

namespace {

void expr_slots(const Expr& e, std::vector<Slot>& out) {
  if (e.kind == Expr::Kind::Var) out.push_back(e.slot);
  for (const auto& a : e.args) expr_slots(a, out);
}

}  // namespace

std::string check_chunk_invariant(const ClauseCode& code) {
  if (code.chunks.empty()) return "clause has no chunks";
  std::set<int> frame_defined;
  for (std::size_t k = 0; k < code.chunks.size(); ++k) {
    const Chunk& c = code.chunks[k];
    const bool final = k + 1 == code.chunks.size();
    const std::string where = "chunk " + std::to_string(k) + ": ";
    if (!final && !c.call) return where + "non-final chunk does not end in a call";
    if (!final && c.call->is_last) return where + "last call in a non-final chunk";
    if (final && c.call && !c.call->is_last) return where + "final call not marked last";
    std::set<int> temps;
    auto define = [&](const Slot& s) {
      if (s.kind == SlotKind::Temp) temps.insert(s.index);
      if (s.kind == SlotKind::FrameY) frame_defined.insert(s.index);
    };
    for (const auto& st : c.steps) {
      std::vector<Slot> used;
      expr_slots(st.expr, used);
      for (const auto& a : st.args) expr_slots(a, used);
      for (const auto& s : used) {
        if (s.kind == SlotKind::Temp && !temps.contains(s.index)) {
          return where + "temporary " + to_string(s) + " used before definition";
        }
        if (s.kind == SlotKind::FrameY && !frame_defined.contains(s.index)) {
          return where + "frame slot " + to_string(s) + " used before definition";
        }
        if (s.kind == SlotKind::Arg && k != 0) {
          return where + "argument slot " + to_string(s) + " used after a call";
        }
      }
      if (st.kind == StepKind::GetArg || st.kind == StepKind::NewVar ||
          st.kind == StepKind::GetCut) {
        define(st.slot);
      }
      if ((st.kind == StepKind::GetArg || st.kind == StepKind::Unify) && k != 0) {
        return where + "head step outside the first chunk";
      }
    }
  }
  return {};
}

}  // namespace pljs
