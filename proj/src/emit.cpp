#include "pljs/emit.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pljs/jsfmt.hpp"

namespace pljs {

std::string mangle(std::string_view name, std::size_t arity) {
  return std::string(name) + "/" + std::to_string(arity);
}

namespace {

using js::string_literal;

struct Capture {
  std::string ident;
  std::string key;  // export key, or empty for the class wrapper ctor
};

struct CaptureGroup {
  std::string module;
  std::string cls;
  std::vector<Capture> items;
};

struct RootRef {
  const char* ident;
  const char* symbol;
};

constexpr RootRef kRoots[] = {
    {"V", "t_var"}, {"VB", "var_base"}, {"N", "t_num"}, {"S", "t_string"}, {"FW", "t_foreign"},
};
constexpr const char* kRuntime[] = {"FAIL", "Frame", "ikey", "box", "unbox"};

class ModuleEmitter {
 public:
  ModuleEmitter(const ResolvedProgram& prog, const ResolvedModule& mod) : prog_(prog), mod_(mod) {}

  EmittedModule run(const std::vector<ChunkIR>& irs);

 private:
  std::string fresh(std::string_view name, std::size_t arity) {
    return js::sanitize_identifier(name) + "_" + std::to_string(arity) + "_" +
           std::to_string(counter_++);
  }
  void use_runtime(const std::string& n) { runtime_.insert(n); }
  void use_root(const std::string& n) { roots_.insert(n); }

  std::string import(const std::string& module, const std::string& cls, const PredInd& pred);
  std::string import_class(const std::string& module, const std::string& cls);
  CaptureGroup& group(const std::string& module, const std::string& cls);
  std::string class_ctor(const std::string& cls);
  std::string functor(const PredInd& pred);
  std::string atom(const std::string& name);
  std::string call_target(const Target& t);

  std::string slot(const Slot& s) const;
  std::string expr(const Expr& e);
  std::string step(const Step& s);
  std::string chunk(const ClauseCode& code, std::size_t ci, std::size_t k, const std::string& pad);
  std::string execute(const ChunkIR& ir, const std::string& pad);
  std::string def_block(const PredicateDef& def, const ChunkIR* ir, const std::string& parent,
                        const std::string& param, const std::string& home,
                        const std::string& pad);

  const ResolvedProgram& prog_;
  const ResolvedModule& mod_;
  int counter_ = 0;
  std::set<std::string> runtime_;
  std::set<std::string> roots_;
  std::map<std::pair<std::string, std::string>, std::string> local_;  // (cls, key) -> ctor
  std::map<std::string, std::string> class_local_;                    // cls -> wrapper ctor
  std::vector<std::pair<std::string, std::string>> data_;             // key -> ctor, local data functors
  std::vector<CaptureGroup> groups_;
  std::vector<std::pair<std::string, std::string>> atoms_;  // ident, symbol expression
  std::map<std::string, std::string> atom_ids_;
  std::vector<std::string> foreign_fns_;
};

CaptureGroup& ModuleEmitter::group(const std::string& module, const std::string& cls) {
  for (auto& g : groups_)
    if (g.module == module && g.cls == cls) return g;
  groups_.push_back({module, cls, {}});
  return groups_.back();
}

std::string ModuleEmitter::import(const std::string& module, const std::string& cls,
                                  const PredInd& pred) {
  CaptureGroup& g = group(module, cls);
  const std::string key = pred.key();
  for (const auto& c : g.items)
    if (c.key == key) return c.ident;
  g.items.push_back({fresh(pred.name, pred.arity), key});
  return g.items.back().ident;
}

std::string ModuleEmitter::import_class(const std::string& module, const std::string& cls) {
  CaptureGroup& g = group(module, cls);
  for (const auto& c : g.items)
    if (c.key.empty()) return c.ident;
  g.items.push_back({fresh(cls, 1), ""});
  return g.items.back().ident;
}

std::string ModuleEmitter::class_ctor(const std::string& cls) {
  if (auto it = class_local_.find(cls); it != class_local_.end()) return it->second;
  for (const auto& m : prog_.modules)
    for (const auto& c : m.classes)
      if (c.name == cls) return import_class(m.name, cls);
  return import_class(mod_.name, cls);
}

std::string ModuleEmitter::functor(const PredInd& pred) {
  if (auto t = mod_.term_class(pred)) {
    if (t->module == mod_.name && t->cls.empty()) return local_.at({"", pred.key()});
    return import(t->module, t->cls, pred);
  }
  const std::string key = pred.key();
  for (const auto& [k, id] : data_)
    if (k == key) return id;
  data_.emplace_back(key, fresh(pred.name, pred.arity));
  return data_.back().second;
}

std::string ModuleEmitter::atom(const std::string& name) {
  if (auto it = atom_ids_.find(name); it != atom_ids_.end()) return it->second;
  PredInd pred{name, 0};
  std::string sym;
  if (auto t = mod_.term_class(pred); t && t->module != mod_.name) {
    sym = "$r.query(" + string_literal(t->module) + ").query(" + string_literal(pred.key()) + ")";
  } else {
    functor(pred);
    sym = "m.query(" + string_literal(pred.key()) + ")";
  }
  std::string id = fresh(name, 0);
  atom_ids_[name] = id;
  atoms_.emplace_back(id, sym);
  return id;
}

std::string ModuleEmitter::call_target(const Target& t) {
  if (t.module == mod_.name) return local_.at({t.cls, t.pred.key()});
  return import(t.module, t.cls, t.pred);
}

std::string ModuleEmitter::slot(const Slot& s) const {
  switch (s.kind) {
    case SlotKind::Temp: return "t" + std::to_string(s.index);
    case SlotKind::FrameY: return "f.y[" + std::to_string(s.index) + "]";
    case SlotKind::Arg: return "g.a" + std::to_string(s.index);
  }
  return "?";
}

std::string ModuleEmitter::expr(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Var:
      return slot(e.slot);
    case Expr::Kind::Atom:
      return atom(e.name);
    case Expr::Kind::Num:
      use_root("N");
      return "new N(" + js::number_to_string(e.num) + ")";
    case Expr::Kind::Str:
      use_root("S");
      return "new S(" + string_literal(e.name) + ")";
    case Expr::Kind::Struct: {
      std::string s = "new " + functor(PredInd{e.name, e.args.size()}) + "(";
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i) s += ", ";
        s += expr(e.args[i]);
      }
      return s + ")";
    }
  }
  return "?";
}

std::string ModuleEmitter::step(const Step& s) {
  auto fail = [&] {
    use_runtime("FAIL");
    return std::string(" return FAIL;");
  };
  switch (s.kind) {
    case StepKind::GetArg:
      return slot(s.slot) + " = g.a" + std::to_string(s.arg) + ";";
    case StepKind::NewVar:
      use_root("V");
      return slot(s.slot) + " = new V(w);";
    case StepKind::Unify:
      return "if (!g.a" + std::to_string(s.arg) + ".unify(w, " + expr(s.expr) + "))" + fail();
    case StepKind::PutArg:
      return {};
    case StepKind::Cut:
      return "w.choice = f.choice;";
    case StepKind::GetCut:
      use_root("FW");
      return slot(s.slot) + " = new FW(f.choice);";
    case StepKind::CutTo:
      return "w.choice = " + expr(s.expr) + ".deref().a0;";
    case StepKind::Builtin:
      break;
  }
  auto arith = [&](const char* op) {
    return "if (!(w.eval(" + expr(s.args[0]) + ") " + op + " w.eval(" + expr(s.args[1]) + ")))" +
           fail();
  };
  switch (s.op) {
    case InlineOp::Unify:
      return "if (!w.unify(" + expr(s.args[0]) + ", " + expr(s.args[1]) + "))" + fail();
    case InlineOp::Is:
      use_root("N");
      return "if (!" + expr(s.args[0]) + ".unify(w, new N(w.eval(" + expr(s.args[1]) + "))))" +
             fail();
    case InlineOp::Lt: return arith("<");
    case InlineOp::Gt: return arith(">");
    case InlineOp::Le: return arith("<=");
    case InlineOp::Ge: return arith(">=");
    case InlineOp::ArEq: return arith("===");
    case InlineOp::ArNe: return arith("!==");
    case InlineOp::Var:
      use_root("VB");
      return "if (!(" + expr(s.args[0]) + ".deref() instanceof VB))" + fail();
    case InlineOp::Nonvar:
      use_root("VB");
      return "if (" + expr(s.args[0]) + ".deref() instanceof VB)" + fail();
    case InlineOp::True:
      return {};
    case InlineOp::Fail:
      use_runtime("FAIL");
      return "return FAIL;";
    case InlineOp::Cut:
      return "w.choice = f.choice;";
    case InlineOp::GetCut:
    case InlineOp::CutTo:
      break;
  }
  return {};
}

std::string ModuleEmitter::chunk(const ClauseCode& code, std::size_t ci, std::size_t k,
                                 const std::string& pad) {
  const std::string in = pad + "  ";
  const std::string name = "k" + std::to_string(ci) + "_" + std::to_string(k);
  const Chunk& ch = code.chunks[k];
  std::set<int> temps;
  auto note = [&](const Slot& s) {
    if (s.kind == SlotKind::Temp) temps.insert(s.index);
  };
  for (const auto& s : ch.steps)
    if (s.kind == StepKind::GetArg || s.kind == StepKind::NewVar || s.kind == StepKind::GetCut)
      note(s.slot);

  std::string body;
  std::vector<std::string> put(ch.call ? ch.call->arity : 0);
  for (const auto& s : ch.steps) {
    if (s.kind == StepKind::PutArg) {
      if (s.arg >= 0 && static_cast<std::size_t>(s.arg) < put.size()) put[s.arg] = expr(s.expr);
      continue;
    }
    std::string line = step(s);
    if (!line.empty()) body += in + line + "\n";
  }
  if (ch.call) {
    const std::string ctor = call_target(ch.call->target);
    use_runtime("Frame");
    if (ch.call->is_last) {
      body += in + "w.frame = new Frame(f.prev, f.cont, w.choice);\n";
    } else {
      body += in + "w.frame = new Frame(f, function () { return k" + std::to_string(ci) + "_" +
              std::to_string(k + 1) + "(w, f); }, w.choice);\n";
    }
    std::string args;
    for (std::size_t i = 0; i < put.size(); ++i) {
      if (i) args += ", ";
      args += put[i];
    }
    body += in + "w.goal = new " + ctor + "(" + args + ");\n";
    body += in + "return w.exec;\n";
  } else {
    body += in + "w.frame = f.prev;\n";
    body += in + "return f.cont;\n";
  }

  std::string s = pad + "function " + name + (k == 0 ? "(w, g) {\n" : "(w, f) {\n");
  if (k == 0) s += in + "var f = w.frame;\n";
  if (!temps.empty()) {
    s += in + "var ";
    bool first = true;
    for (int t : temps) {
      if (!first) s += ", ";
      first = false;
      s += "t" + std::to_string(t);
    }
    s += ";\n";
  }
  return s + body + pad + "}\n";
}

std::string list_of(const std::vector<int>& cs) {
  std::string s = "[";
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i) s += ", ";
    s += "k" + std::to_string(cs[i]) + "_0";
  }
  return s + "]";
}

std::string ModuleEmitter::execute(const ChunkIR& ir, const std::string& pad) {
  const std::string in = pad + "  ";
  const std::size_t n = ir.clauses.size();
  std::string s = pad + "c.prototype.execute = function (w) {\n";
  if (n == 0) {
    use_runtime("FAIL");
    s += in + "return FAIL;\n";
  } else if (!ir.selection.indexed) {
    if (n == 1) {
      s += in + "return k0_0(w, this);\n";
    } else {
      s += in + "w.push_choice(all, 1);\n";
      s += in + "return all[0](w, this);\n";
    }
  } else {
    use_runtime("ikey");
    use_runtime("FAIL");
    s += in + "var cs;\n";
    s += in + "switch (ikey(this.a0)) {\n";
    for (std::size_t b = 0; b < ir.selection.buckets.size(); ++b)
      s += in + "  case " + string_literal(ir.selection.buckets[b].first) + ": cs = b" +
           std::to_string(b) + "; break;\n";
    s += in + "  case null: cs = all; break;\n";
    s += in + "  default: cs = bd;\n";
    s += in + "}\n";
    s += in + "if (cs.length === 0) return FAIL;\n";
    s += in + "if (cs.length > 1) w.push_choice(cs, 1);\n";
    s += in + "return cs[0](w, this);\n";
  }
  return s + pad + "};\n";
}

std::string ModuleEmitter::def_block(const PredicateDef& def, const ChunkIR* ir,
                                     const std::string& parent, const std::string& param,
                                     const std::string& home, const std::string& pad) {
  const std::string in = pad + "  ";
  const std::string in2 = in + "  ";
  const std::string key = def.pred.key();
  std::string s = pad + parent + ".def(" + string_literal(key) + ", function (" + param + ") {\n";
  s += in + param + ".ctor = " + local_.at({def.cls, key}) + ";\n";
  s += in + param + ".base = $r.query(\"t_struct\");\n";
  s += in + param + ".mlink = function (c) {\n";
  s += in2 + "c.fname = " + string_literal(def.pred.name) + ";\n";
  s += in2 + "c.arity = " + std::to_string(def.pred.arity) + ";\n";
  s += in2 + "c.home = " + home + ";\n";
  if (def.foreign) {
    std::string fn = fresh(def.pred.name, def.pred.arity);
    foreign_fns_.push_back(emit_foreign_function(*def.foreign, fn));
    use_runtime("FAIL");
    bool unbox = !def.foreign->receiver.empty();
    bool box = false;
    for (const auto& a : def.foreign->args) {
      if (a.mode == ArgMode::In) unbox = true;
      if (a.mode == ArgMode::Out && a.type != ForeignType::Class) box = true;
    }
    if (unbox) use_runtime("unbox");
    if (box) use_runtime("box");
    StubNames names{"FAIL", "box", "unbox", fn,
                    [this](const std::string& cls) { return class_ctor(cls); }};
    s += in2 + "c.prototype.execute = function (w) {\n";
    s += emit_foreign_stub(*def.foreign, names, in2 + "  ");
    s += in2 + "};\n";
  } else if (ir) {
    for (std::size_t ci = 0; ci < ir->clauses.size(); ++ci)
      for (std::size_t k = 0; k < ir->clauses[ci].chunks.size(); ++k)
        s += chunk(ir->clauses[ci], ci, k, in2);
    std::vector<int> all(ir->clauses.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    if (ir->selection.indexed || all.size() > 1) s += in2 + "var all = " + list_of(all) + ";\n";
    if (ir->selection.indexed) {
      for (std::size_t b = 0; b < ir->selection.buckets.size(); ++b)
        s += in2 + "var b" + std::to_string(b) + " = " + list_of(ir->selection.buckets[b].second) +
             ";\n";
      s += in2 + "var bd = " + list_of(ir->selection.default_bucket) + ";\n";
    }
    s += execute(*ir, in2);
  } else {
    use_runtime("FAIL");
    s += in2 + "c.prototype.execute = function (w) {\n";
    s += in2 + "  return FAIL;\n";
    s += in2 + "};\n";
  }
  s += in + "};\n";
  s += pad + "});\n";
  return s;
}

EmittedModule ModuleEmitter::run(const std::vector<ChunkIR>& irs) {
  for (const auto& c : mod_.classes) class_local_[c.name] = fresh(c.name, 1);
  std::vector<std::string> pred_ctors;
  for (const auto& def : mod_.preds) {
    std::string id = fresh(def.pred.name, def.pred.arity);
    local_[{def.cls, def.pred.key()}] = id;
    pred_ctors.push_back(id);
  }

  // Symbol definitions: top-level predicates, then classes with their methods.
  std::string defs;
  std::map<std::string, std::string> class_defs;
  for (std::size_t i = 0; i < mod_.preds.size(); ++i) {
    const PredicateDef& def = mod_.preds[i];
    const ChunkIR* ir = i < irs.size() ? &irs[i] : nullptr;
    if (def.cls.empty()) {
      defs += def_block(def, ir, "m", "s", "m", "  ");
    } else {
      std::string& cd = class_defs[def.cls];
      cd += def_block(def, ir, "s", "q", "s", "    ");
      cd += "    s.exports[" + string_literal(def.pred.key()) + "] = " +
            local_.at({def.cls, def.pred.key()}) + ";\n";
    }
  }
  for (const auto& c : mod_.classes) {
    defs += "  m.def(" + string_literal(c.name) + ", function (s) {\n";
    defs += "    s.ctor = " + class_local_.at(c.name) + ";\n";
    defs += "    s.base = $r.query(\"t_foreign\");\n";
    defs += "    s.mlink = function (c) {\n";
    defs += "      c.cls = " + string_literal(c.name) + ";\n";
    defs += "    };\n";
    defs += class_defs[c.name];
    defs += "  });\n";
  }
  for (const auto& [key, id] : data_) {
    auto slash = key.rfind('/');
    defs += "  m.def(" + string_literal(key) + ", function (s) {\n";
    defs += "    s.ctor = " + id + ";\n";
    defs += "    s.base = $r.query(\"t_struct\");\n";
    defs += "    s.mlink = function (c) {\n";
    defs += "      c.fname = " + string_literal(key.substr(0, slash)) + ";\n";
    defs += "      c.arity = " + key.substr(slash + 1) + ";\n";
    defs += "      c.home = m;\n";
    defs += "    };\n";
    defs += "  });\n";
  }

  std::string exports;
  for (std::size_t i = 0; i < mod_.preds.size(); ++i) {
    const PredicateDef& def = mod_.preds[i];
    if (def.cls.empty() && def.exported)
      exports += "  m.exports[" + string_literal(def.pred.key()) + "] = " + pred_ctors[i] + ";\n";
  }

  // Link thunk.
  std::vector<std::string> order;
  for (const auto& d : mod_.deps) order.push_back(d);
  for (const auto& g : groups_)
    if (std::find(order.begin(), order.end(), g.module) == order.end()) order.push_back(g.module);

  std::string link;
  std::vector<std::string> placeholders;
  bool uses_p = false;
  std::vector<std::string> rt_used;
  for (const char* n : kRuntime)
    if (runtime_.count(n)) rt_used.push_back(n);
  if (!rt_used.empty()) {
    uses_p = true;
    link += "    p = $r.query(\"rt\").prepare();\n";
    for (const auto& n : rt_used) {
      link += "    " + n + " = p.exports[" + string_literal(n) + "];\n";
      placeholders.push_back(n);
    }
  }
  for (const auto& r : kRoots) {
    if (!roots_.count(r.ident)) continue;
    link += std::string("    ") + r.ident + " = $r.query(" + string_literal(r.symbol) +
            ").prepare().ctor;\n";
    placeholders.push_back(r.ident);
  }
  for (const auto& mname : order) {
    std::vector<const CaptureGroup*> gs;
    for (const auto& g : groups_)
      if (g.module == mname && g.cls.empty()) gs.push_back(&g);
    for (const auto& g : groups_)
      if (g.module == mname && !g.cls.empty()) gs.push_back(&g);
    if (gs.empty() || !gs.front()->cls.empty()) {
      link += "    $r.query(" + string_literal(mname) + ").prepare();\n";
    }
    for (const CaptureGroup* g : gs) {
      uses_p = true;
      link += "    p = $r.query(" + string_literal(g->module) + ")";
      if (!g->cls.empty()) link += ".query(" + string_literal(g->cls) + ")";
      link += ".prepare();\n";
      for (const auto& c : g->items) {
        if (c.key.empty()) {
          link += "    " + c.ident + " = p.ctor;\n";
        } else {
          link += "    " + c.ident + " = p.exports[" + string_literal(c.key) + "];\n";
        }
        placeholders.push_back(c.ident);
      }
    }
  }
  for (const auto& [id, sym] : atoms_) {
    link += "    " + id + " = new (" + sym + ".prepare().ctor)();\n";
    placeholders.push_back(id);
  }
  if (uses_p) link = "    var p;\n" + link;

  // Assemble.
  EmittedModule out;
  out.module_name = mod_.name;
  out.deps = order;
  std::string& s = out.source;
  s = "$r.def(" + string_literal(mod_.name) + ", function (m) {\n";
  for (std::size_t i = 0; i < placeholders.size(); i += 8) {
    s += "  var ";
    for (std::size_t j = i; j < std::min(placeholders.size(), i + 8); ++j) {
      if (j > i) s += ", ";
      s += placeholders[j];
    }
    s += ";\n";
  }
  auto ctor_fn = [&](const std::string& id, std::size_t arity) {
    s += "  function " + id + "(";
    for (std::size_t a = 0; a < arity; ++a) s += (a ? ", a" : "a") + std::to_string(a);
    s += ") {";
    for (std::size_t a = 0; a < arity; ++a)
      s += " this.a" + std::to_string(a) + " = a" + std::to_string(a) + ";";
    s += arity ? " }\n" : "}\n";
  };
  for (const auto& c : mod_.classes) ctor_fn(class_local_.at(c.name), 1);
  for (std::size_t i = 0; i < mod_.preds.size(); ++i) ctor_fn(pred_ctors[i], mod_.preds[i].pred.arity);
  for (const auto& [key, id] : data_) ctor_fn(id, std::stoul(key.substr(key.rfind('/') + 1)));
  for (const auto& fn : foreign_fns_) {
    s += "  ";
    std::size_t open = s.size() + fn.find('{') + 2;
    std::size_t close = s.size() + fn.size() - 2;
    s += fn + "\n";
    out.foreign_spans.emplace_back(open, close);
  }
  s += defs;
  s += exports;
  if (link.empty()) {
    s += "  m.link = function () {};\n";
  } else {
    s += "  m.link = function () {\n" + link + "  };\n";
  }
  s += "});\n";
  return out;
}

}  // namespace

EmittedModule emit_module(const ResolvedProgram& prog, const ResolvedModule& mod,
                          const std::vector<ChunkIR>& irs) {
  return ModuleEmitter(prog, mod).run(irs);
}

}  // namespace pljs
