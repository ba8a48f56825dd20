#include "pljs/ffi.hpp"

#include <map>

#include "pljs/jsfmt.hpp"
#include "pljs/ops.hpp"

namespace pljs {

namespace {

constexpr std::string_view kClassFunctor = "$foreign_class";

WriteOptions op_style() {
  static const OpTable ops = OpTable::defaults();
  WriteOptions o;
  o.ops = &ops;
  return o;
}

std::string show(const Term& t) { return to_string(t, op_style()); }

[[noreturn]] void fail(const std::string& kind, const std::string& msg, SourcePos pos,
                       const std::string& file) {
  throw CompileError(kind, msg, pos, file);
}

ForeignType type_of(const Term& t, std::string& class_name, const std::string& file) {
  if (!t.is_atom()) fail("type error", "type name expected, found " + show(t), t.pos, file);
  const std::string& n = t.name;
  if (n == "number" || n == "num" || n == "int" || n == "integer" || n == "float") {
    return ForeignType::Number;
  }
  if (n == "string") return ForeignType::String;
  if (n == "atom") return ForeignType::Atom;
  if (n == "term" || n == "any") return ForeignType::Term;
  class_name = n;
  return ForeignType::Class;
}

void flatten(const TermPtr& t, std::string_view op, std::vector<TermPtr>& out) {
  if (t->is_compound(op, 2)) {
    flatten(t->args[0], op, out);
    flatten(t->args[1], op, out);
  } else {
    out.push_back(t);
  }
}

struct Split {
  TermPtr head;
  TermPtr types;
  TermPtr props;
};

Split split_spec(const TermPtr& spec) {
  Split s;
  TermPtr rest = spec;
  if (rest->is_compound("+", 2) && !rest->args[0]->is_compound("::", 2)) {
    s.props = rest->args[1];
    rest = rest->args[0];
  }
  if (rest->is_compound("::", 2)) {
    s.head = rest->args[0];
    TermPtr r = rest->args[1];
    if (r->is_compound("+", 2) && !s.props) {
      s.types = r->args[0];
      s.props = r->args[1];
    } else {
      s.types = r;
    }
  } else {
    s.head = rest;
  }
  return s;
}

std::vector<ForeignArg> parse_args(const Term& head, Diagnostics& diags, const std::string& file) {
  std::vector<ForeignArg> args;
  for (std::size_t i = 0; i < head.arity(); ++i) {
    const Term* a = head.args[i].get();
    ForeignArg fa;
    if (a->is_compound("+", 1) || a->is_compound("-", 1)) {
      fa.mode = a->name == "+" ? ArgMode::In : ArgMode::Out;
      a = a->args[0].get();
    } else {
      diags.warn("argument " + std::to_string(i + 1) + " of " + indicator(head).key() +
                     " has no mode; assuming +",
                 head.pos, file);
    }
    if (a->is_var()) {
      fa.param = a->name;
    } else {
      fa.type = type_of(*a, fa.class_name, file);
    }
    if (fa.param.empty() || fa.param.starts_with("_")) fa.param = "a" + std::to_string(i);
    args.push_back(std::move(fa));
  }
  return args;
}

void apply_types(std::vector<ForeignArg>& args, const TermPtr& types, const Term& head,
                 const std::string& file) {
  if (!types) return;
  std::vector<TermPtr> list;
  flatten(types, "*", list);
  if (list.size() != args.size()) {
    fail("domain error",
         "'::' lists " + std::to_string(list.size()) + " types for " + indicator(head).key(),
         types->pos, file);
  }
  for (std::size_t i = 0; i < list.size(); ++i) {
    args[i].class_name.clear();
    args[i].type = type_of(*list[i], args[i].class_name, file);
  }
}

struct ParsedProps {
  bool foreign = false;
  std::string body;
};

ParsedProps parse_props(const TermPtr& props, const std::string& file) {
  ParsedProps out;
  if (!props) return out;
  std::vector<TermPtr> list;
  flatten(props, ",", list);
  for (const auto& p : list) {
    if (p->is_compound(":", 2) && p->args[0]->is_atom("js") &&
        p->args[1]->is_compound("foreign", 1)) {
      const Term& body = *p->args[1]->args[0];
      if (body.kind != TermKind::Str && !body.is_atom()) {
        fail("type error", "foreign body must be text, found " + show(body), body.pos, file);
      }
      if (out.foreign) fail("permission error", "two foreign bodies in one assertion", p->pos, file);
      out.foreign = true;
      out.body = body.name;
    } else if (p->is_atom("is_det") || p->is_atom("det")) {
      continue;
    } else {
      fail("domain error",
           "unsupported property " + show(*p) + " (foreign code must be deterministic)", p->pos,
           file);
    }
  }
  return out;
}

ForeignDirective parse_single(const TermPtr& spec, const std::string& receiver,
                              Diagnostics& diags, const std::string& file) {
  Split s = split_spec(spec);
  if (!s.head->is_callable()) {
    fail("type error", "predicate head expected in pred assertion, found " + show(*s.head),
         spec->pos, file);
  }
  auto args = parse_args(*s.head, diags, file);
  apply_types(args, s.types, *s.head, file);
  ParsedProps props = parse_props(s.props, file);

  std::size_t outputs = 0;
  for (const auto& a : args) outputs += a.mode == ArgMode::Out;
  if (!props.foreign) {
    if (!receiver.empty()) {
      fail("domain error", "method " + indicator(*s.head).key() + " of " + receiver +
                               " lacks a js:foreign body", spec->pos, file);
    }
    return TypeAssertion{indicator(*s.head), std::move(args), spec->pos};
  }
  if (outputs > 1) {
    fail("domain error", "foreign predicate " + indicator(*s.head).key() +
                             " has more than one output argument", spec->pos, file);
  }
  ForeignDecl d;
  d.pred = PredInd{s.head->name, args.size() + (receiver.empty() ? 0 : 1)};
  d.args = std::move(args);
  d.body = std::move(props.body);
  d.receiver = receiver;
  d.pos = spec->pos;
  return d;
}

}  // namespace

const ForeignArg* ForeignDecl::output() const {
  for (const auto& a : args) {
    if (a.mode == ArgMode::Out) return &a;
  }
  return nullptr;
}

const ForeignArg* ForeignDecl::arg_for(std::size_t i) const {
  if (!receiver.empty()) {
    if (i == 0) return nullptr;
    --i;
  }
  return i < args.size() ? &args[i] : nullptr;
}

const ForeignDecl* ForeignClassDecl::method(const PredInd& pred) const {
  for (const auto& m : methods) {
    if (m.pred == pred) return &m;
  }
  return nullptr;
}

TermPtr make_foreign_class_term(const std::string& name, std::vector<TermPtr> decls,
                                SourcePos pos) {
  return make_compound(std::string(kClassFunctor),
                       {make_atom(name, pos), make_list(decls)}, pos);
}

ForeignDirective parse_foreign_decl(const Term& directive, Diagnostics& diags,
                                    const std::string& file) {
  if (directive.is_compound(kClassFunctor, 2)) {
    ForeignClassDecl cls;
    cls.name = directive.args[0]->name;
    cls.pos = directive.pos;
    const Term* cur = directive.args[1].get();
    while (cur->is_compound(".", 2)) {
      auto parsed = parse_single(cur->args[0], cls.name, diags, file);
      auto& m = std::get<ForeignDecl>(parsed);
      if (cls.method(m.pred)) {
        fail("permission error", "method " + m.pred.key() + " declared twice in " + cls.name,
             m.pos, file);
      }
      cls.methods.push_back(std::move(m));
      cur = cur->args[1].get();
    }
    return cls;
  }
  auto self = std::make_shared<Term>(directive);
  return parse_single(self, "", diags, file);
}

// ---------------------------------------------------------------------------

namespace {

class MethodRewriter {
 public:
  MethodRewriter(const ForeignScope& scope, const std::string& file)
      : scope_(scope), file_(file) {}

  void seed(const TermPtr& head) {
    if (!scope_.head_types || !head->is_compound()) return;
    const auto& args = scope_.head_types->args;
    for (std::size_t i = 0; i < head->arity() && i < args.size(); ++i) {
      if (head->args[i]->is_var() && args[i].type == ForeignType::Class) {
        env_[head->args[i]->name] = args[i].class_name;
      }
    }
  }

  TermPtr rewrite(const TermPtr& g) {
    if (g->is_var()) return g;
    if (g->is_compound(",", 2) || g->is_compound(";", 2) || g->is_compound("->", 2)) {
      TermPtr a = rewrite(g->args[0]);
      TermPtr b = rewrite(g->args[1]);
      if (a == g->args[0] && b == g->args[1]) return g;
      return make_compound(g->name, {a, b}, g->pos);
    }
    if (g->is_compound("\\+", 1) || g->is_compound("call", 1)) {
      TermPtr a = rewrite(g->args[0]);
      if (a == g->args[0]) return g;
      return make_compound(g->name, {a}, g->pos);
    }
    if (g->is_compound(":", 2)) return qualified(g);
    if (g->is_callable() && scope_.lookup) flow(scope_.lookup("", indicator(*g)), *g);
    return g;
  }

 private:
  TermPtr qualified(const TermPtr& g) {
    const TermPtr& recv = g->args[0];
    const TermPtr& goal = g->args[1];
    if (recv->is_var()) {
      auto it = env_.find(recv->name);
      if (it == env_.end()) {
        fail("type error",
             "receiver class of " + recv->name + " is not known in goal " + show(*g), g->pos,
             file_);
      }
      if (!goal->is_callable()) {
        fail("type error", "method call expected in goal " + show(*g), g->pos, file_);
      }
      const ForeignDecl* m = method_of(it->second, *goal, *g);
      std::vector<TermPtr> args{recv};
      args.insert(args.end(), goal->args.begin(), goal->args.end());
      TermPtr call = make_compound(goal->name, std::move(args), goal->pos);
      flow(m, *call);
      return make_compound(":", {make_atom(it->second, recv->pos), call}, g->pos);
    }
    if (recv->is_atom() && goal->is_callable()) {
      auto cls = scope_.classes.find(recv->name);
      if (cls != scope_.classes.end()) {
        flow(method_of(recv->name, *goal, *g, false), *goal);
      } else if (scope_.lookup) {
        flow(scope_.lookup(recv->name, indicator(*goal)), *goal);
      }
    }
    return g;
  }

  const ForeignDecl* method_of(const std::string& cls_name, const Term& goal, const Term& whole,
                               bool add_receiver = true) {
    auto cls = scope_.classes.find(cls_name);
    if (cls == scope_.classes.end()) {
      fail("existence error", "unknown foreign class " + cls_name + " in goal " + show(whole),
           whole.pos, file_);
    }
    PredInd p{goal.name, goal.arity() + (add_receiver ? 1 : 0)};
    const ForeignDecl* m = cls->second->method(p);
    if (!m) {
      fail("existence error",
           "foreign class " + cls_name + " has no method " + PredInd{goal.name, p.arity - 1}.key() +
               " (goal " + show(whole) + ")",
           whole.pos, file_);
    }
    return m;
  }

  void flow(const ForeignDecl* d, const Term& call) {
    if (!d) return;
    for (std::size_t i = 0; i < call.arity(); ++i) {
      const ForeignArg* a = d->arg_for(i);
      if (a && a->mode == ArgMode::Out && a->type == ForeignType::Class && call.args[i]->is_var()) {
        env_[call.args[i]->name] = a->class_name;
      }
    }
  }

  const ForeignScope& scope_;
  const std::string& file_;
  std::map<std::string, std::string> env_;
};

}  // namespace

TermPtr resolve_method_calls(const TermPtr& head, const TermPtr& body, const ForeignScope& scope,
                             const std::string& file) {
  MethodRewriter r(scope, file);
  r.seed(head);
  return r.rewrite(body);
}

// ---------------------------------------------------------------------------

namespace {

std::string kind_name(const ForeignArg& a) {
  switch (a.type) {
    case ForeignType::Number: return "number";
    case ForeignType::String: return "string";
    case ForeignType::Atom: return "atom";
    case ForeignType::Term: return "term";
    case ForeignType::Class: return "object";
  }
  return "term";
}

}  // namespace

std::string emit_foreign_function(const ForeignDecl& decl, const std::string& name) {
  std::string params;
  for (const auto& a : decl.args) {
    if (a.mode != ArgMode::In) continue;
    if (!params.empty()) params += ", ";
    params += js::sanitize_identifier(a.param);
  }
  return "function " + name + "(" + params + ") { " + decl.body + " }";
}

std::string emit_foreign_stub(const ForeignDecl& decl, const StubNames& names,
                              const std::string& indent) {
  const std::size_t base = decl.receiver.empty() ? 0 : 1;
  std::string recv = base ? names.unbox + "(this.a0, \"object\")" : "null";
  std::string call = names.func + ".call(" + recv;
  std::string out_field;
  const ForeignArg* out_arg = nullptr;
  for (std::size_t i = 0; i < decl.args.size(); ++i) {
    const ForeignArg& a = decl.args[i];
    std::string field = "this.a" + std::to_string(i + base);
    if (a.mode == ArgMode::Out) {
      out_field = field;
      out_arg = &a;
      continue;
    }
    call += ", " + names.unbox + "(" + field + ", \"" + kind_name(a) + "\")";
  }
  call += ")";
  std::string s;
  s += indent + "var f = w.frame;\n";
  if (out_arg) {
    s += indent + "var r = " + call + ";\n";
    std::string boxed = out_arg->type == ForeignType::Class
                            ? "new " + names.class_ctor(out_arg->class_name) + "(r)"
                            : names.box + "(r, \"" + kind_name(*out_arg) + "\")";
    s += indent + "if (!" + out_field + ".unify(w, " + boxed + ")) return " + names.fail + ";\n";
  } else {
    s += indent + call + ";\n";
  }
  s += indent + "w.frame = f.prev;\n";
  s += indent + "return f.cont;\n";
  return s;
}

}  // namespace pljs
