#include "pljs/engine/store.hpp"

#include <cmath>

#include "pljs/jsfmt.hpp"
#include "pljs/parser.hpp"

namespace pljs::engine {

Ref Store::push(Cell c) {
  cells_.push_back(c);
  return static_cast<Ref>(cells_.size() - 1);
}

std::uint32_t Store::intern(std::string_view s) {
  auto it = name_ids_.find(std::string(s));
  if (it != name_ids_.end()) return it->second;
  names_.emplace_back(s);
  auto id = static_cast<std::uint32_t>(names_.size() - 1);
  name_ids_.emplace(std::string(s), id);
  return id;
}

std::uint32_t Store::functor_id(std::string_view name, std::uint32_t arity) {
  const std::uint32_t n = intern(name);
  auto [it, fresh] = functor_ids_.emplace(std::make_pair(n, arity), functors_.size());
  if (fresh) functors_.push_back({n, arity});
  return it->second;
}

Ref Store::new_var() {
  Ref r = static_cast<Ref>(cells_.size());
  return push({Tag::Var, r, 0, 0.0});
}
Ref Store::new_atom(std::string_view name) { return push({Tag::Atom, intern(name), 0, 0.0}); }
Ref Store::new_atom_id(std::uint32_t id) { return push({Tag::Atom, id, 0, 0.0}); }
Ref Store::new_num(double v) { return push({Tag::Num, 0, 0, v}); }
Ref Store::new_str(std::string_view text) { return push({Tag::Str, intern(text), 0, 0.0}); }

Ref Store::new_struct(std::string_view name, std::span<const Ref> args) {
  if (args.empty()) return new_atom(name);
  return new_struct_id(functor_id(name, static_cast<std::uint32_t>(args.size())), args);
}

Ref Store::new_struct_id(std::uint32_t functor, std::span<const Ref> args) {
  if (args.empty()) return new_atom_id(functors_[functor].name);
  auto base = static_cast<std::uint32_t>(args_.size());
  args_.insert(args_.end(), args.begin(), args.end());
  return push({Tag::Struct, functor, base, 0.0});
}

Ref Store::new_barrier(std::size_t height) {
  return push({Tag::Barrier, 0, static_cast<std::uint32_t>(height), 0.0});
}

Ref Store::deref(Ref r) const {
  while (cells_[r].tag == Tag::Var && cells_[r].a != r) r = cells_[r].a;
  return r;
}

const std::string& Store::name(Ref r) const {
  const Cell& c = cells_[r];
  return c.tag == Tag::Struct ? names_[functors_[c.a].name] : names_[c.a];
}

bool Store::is_callable(Ref r) const {
  Tag t = cells_[deref(r)].tag;
  return t == Tag::Atom || t == Tag::Struct;
}

bool Store::is_atom(Ref r, std::string_view n) const {
  r = deref(r);
  return cells_[r].tag == Tag::Atom && names_[cells_[r].a] == n;
}

std::pair<std::string, std::size_t> Store::indicator(Ref r) const {
  r = deref(r);
  if (cells_[r].tag == Tag::Struct) return {name(r), arity(r)};
  return {name(r), 0};
}

void Store::bind(Ref v, Ref t) {
  cells_[v].a = t;
  trail_.push_back(v);
}

bool Store::unify(Ref a, Ref b) {
  std::vector<std::pair<Ref, Ref>> todo{{a, b}};
  while (!todo.empty()) {
    auto [x, y] = todo.back();
    todo.pop_back();
    x = deref(x);
    y = deref(y);
    if (x == y) continue;
    const Cell& cx = cells_[x];
    const Cell& cy = cells_[y];
    if (cx.tag == Tag::Var && cy.tag == Tag::Var) {
      if (x < y) bind(y, x);
      else bind(x, y);
      continue;
    }
    if (cx.tag == Tag::Var) {
      bind(x, y);
      continue;
    }
    if (cy.tag == Tag::Var) {
      bind(y, x);
      continue;
    }
    if (cx.tag != cy.tag) return false;
    switch (cx.tag) {
      case Tag::Atom:
      case Tag::Str:
        if (cx.a != cy.a) return false;
        break;
      case Tag::Num:
        if (cx.num != cy.num) return false;
        break;
      case Tag::Barrier:
        if (cx.b != cy.b) return false;
        break;
      case Tag::Struct: {
        if (cx.a != cy.a) return false;
        const std::uint32_t n = functors_[cx.a].arity;
        for (std::uint32_t i = n; i-- > 0;) todo.emplace_back(args_[cx.b + i], args_[cy.b + i]);
        break;
      }
      case Tag::Var:
        break;
    }
  }
  return true;
}

void Store::undo(const Mark& m) {
  while (trail_.size() > m.trail) {
    Ref v = trail_.back();
    trail_.pop_back();
    cells_[v].a = v;
  }
  cells_.resize(m.cells);
  args_.resize(m.args);
}

namespace {

int rank(Tag t) {
  switch (t) {
    case Tag::Var: return 0;
    case Tag::Num: return 1;
    case Tag::Atom: return 2;
    case Tag::Str: return 3;
    case Tag::Barrier: return 4;
    case Tag::Struct: return 5;
  }
  return 6;
}

template <typename T>
int cmp3(const T& a, const T& b) {
  return a < b ? -1 : (b < a ? 1 : 0);
}

}  // namespace

int Store::compare(Ref a, Ref b) const {
  a = deref(a);
  b = deref(b);
  if (a == b) return 0;
  const Cell& ca = cells_[a];
  const Cell& cb = cells_[b];
  if (ca.tag != cb.tag) return cmp3(rank(ca.tag), rank(cb.tag));
  switch (ca.tag) {
    case Tag::Var: return cmp3(a, b);
    case Tag::Num: return cmp3(ca.num, cb.num);
    case Tag::Atom:
    case Tag::Str: return cmp3(names_[ca.a], names_[cb.a]);
    case Tag::Barrier: return cmp3(ca.b, cb.b);
    case Tag::Struct: {
      const Functor& fa = functors_[ca.a];
      const Functor& fb = functors_[cb.a];
      if (fa.arity != fb.arity) return cmp3(fa.arity, fb.arity);
      if (fa.name != fb.name) return cmp3(names_[fa.name], names_[fb.name]);
      for (std::uint32_t i = 0; i < fa.arity; ++i) {
        int c = compare(args_[ca.b + i], args_[cb.b + i]);
        if (c) return c;
      }
      return 0;
    }
  }
  return 0;
}

double Store::eval(Ref r) const {
  r = deref(r);
  const Cell& c = cells_[r];
  if (c.tag == Tag::Num) return c.num;
  if (c.tag == Tag::Var) throw EngineError("instantiation error");
  if (c.tag != Tag::Struct) throw EngineError("type error: evaluable expected");
  const std::string& f = name(r);
  const std::uint32_t n = arity(r);
  const double x = eval(arg(r, 0));
  if (n == 1) {
    if (f == "-") return -x;
    if (f == "+") return x;
    if (f == "abs") return std::fabs(x);
    throw EngineError("type error: evaluable " + f + "/1");
  }
  const double y = eval(arg(r, 1));
  if (f == "+") return x + y;
  if (f == "-") return x - y;
  if (f == "*") return x * y;
  if (f == "/" || f == "//" || f == "mod") {
    if (y == 0) throw EngineError("evaluation error: zero divisor");
    if (f == "/") return x / y;
    if (f == "//") return std::trunc(x / y);
    return std::fmod(std::fmod(x, y) + y, y);
  }
  if (f == "min") return std::min(x, y);
  if (f == "max") return std::max(x, y);
  throw EngineError("type error: evaluable " + f + "/2");
}

Ref Store::copy(Ref t) {
  std::unordered_map<Ref, Ref> vars;
  return copy(t, vars);
}

Ref Store::copy(Ref t, std::unordered_map<Ref, Ref>& vars) {
  t = deref(t);
  const Cell c = cells_[t];
  switch (c.tag) {
    case Tag::Var: {
      auto it = vars.find(t);
      if (it != vars.end()) return it->second;
      Ref v = new_var();
      vars.emplace(t, v);
      return v;
    }
    case Tag::Struct: {
      const std::uint32_t n = functors_[c.a].arity;
      std::vector<Ref> xs(n);
      for (std::uint32_t i = 0; i < n; ++i) xs[i] = copy(args_[c.b + i], vars);
      return new_struct_id(c.a, xs);
    }
    default:
      return t;
  }
}

Ref Store::from_term(const Term& t, std::map<std::string, Ref>& vars) {
  switch (t.kind) {
    case TermKind::Var: {
      if (t.name == "_" || t.name.starts_with(kAnonPrefix)) return new_var();
      auto it = vars.find(t.name);
      if (it != vars.end()) return it->second;
      Ref v = new_var();
      vars.emplace(t.name, v);
      return v;
    }
    case TermKind::Atom: return new_atom(t.name);
    case TermKind::Int: return new_num(static_cast<double>(t.ival));
    case TermKind::Float: return new_num(t.fval);
    case TermKind::Str: return new_str(t.name);
    case TermKind::Compound: {
      std::vector<Ref> xs;
      xs.reserve(t.args.size());
      for (const auto& a : t.args) xs.push_back(from_term(*a, vars));
      return new_struct(t.name, xs);
    }
  }
  return new_var();
}

std::string Store::show(Ref r) const {
  std::map<Ref, int> names;
  return show(r, names);
}

std::string Store::show(Ref r, std::map<Ref, int>& vars) const {
  r = deref(r);
  const Cell& c = cells_[r];
  switch (c.tag) {
    case Tag::Var: {
      auto [it, fresh] = vars.emplace(r, static_cast<int>(vars.size()));
      return "_" + std::to_string(it->second);
    }
    case Tag::Atom: return quote_atom(names_[c.a]);
    case Tag::Num: return js::number_to_string(c.num);
    case Tag::Str: return js::string_literal(names_[c.a]);
    case Tag::Barrier: return "$barrier(" + std::to_string(c.b) + ")";
    case Tag::Struct: {
      if (name(r) == "." && arity(r) == 2) {
        std::string s = "[" + show(arg(r, 0), vars);
        Ref t = deref(arg(r, 1));
        while (cells_[t].tag == Tag::Struct && name(t) == "." && arity(t) == 2) {
          s += "," + show(arg(t, 0), vars);
          t = deref(arg(t, 1));
        }
        if (!(cells_[t].tag == Tag::Atom && names_[cells_[t].a] == "[]")) s += "|" + show(t, vars);
        return s + "]";
      }
      std::string s = quote_atom(name(r)) + "(";
      for (std::uint32_t i = 0; i < arity(r); ++i) {
        if (i) s += ",";
        s += show(arg(r, i), vars);
      }
      return s + ")";
    }
  }
  return "?";
}

std::optional<std::string> Store::index_key(Ref r) const {
  r = deref(r);
  const Cell& c = cells_[r];
  switch (c.tag) {
    case Tag::Var: return std::nullopt;
    case Tag::Atom: return names_[c.a] + "/0";
    case Tag::Struct: return name(r) + "/" + std::to_string(arity(r));
    case Tag::Num: return "#" + js::number_to_string(c.num);
    case Tag::Str: return "\"" + names_[c.a];
    case Tag::Barrier: return "$foreign";
  }
  return std::nullopt;
}

std::optional<bool> call_det_builtin(Store& st, const std::string& name,
                                     std::span<const Ref> a) {
  const std::size_t n = a.size();
  auto tag = [&](Ref r) { return st.cell(st.deref(r)).tag; };
  if (n == 2) {
    if (name == "==") return st.compare(a[0], a[1]) == 0;
    if (name == "\\==") return st.compare(a[0], a[1]) != 0;
    if (name == "@<") return st.compare(a[0], a[1]) < 0;
    if (name == "@>") return st.compare(a[0], a[1]) > 0;
    if (name == "@=<") return st.compare(a[0], a[1]) <= 0;
    if (name == "@>=") return st.compare(a[0], a[1]) >= 0;
    if (name == "=") return st.unify(a[0], a[1]);
    if (name == "\\=") {
      auto m = st.mark();
      bool ok = st.unify(a[0], a[1]);
      st.undo(m);
      return !ok;
    }
    if (name == "is") return st.unify(a[0], st.new_num(st.eval(a[1])));
    if (name == "<") return st.eval(a[0]) < st.eval(a[1]);
    if (name == ">") return st.eval(a[0]) > st.eval(a[1]);
    if (name == "=<") return st.eval(a[0]) <= st.eval(a[1]);
    if (name == ">=") return st.eval(a[0]) >= st.eval(a[1]);
    if (name == "=:=") return st.eval(a[0]) == st.eval(a[1]);
    if (name == "=\\=") return st.eval(a[0]) != st.eval(a[1]);
    if (name == "copy_term") return st.unify(a[1], st.copy(a[0]));
    if (name == "=..") {
      Ref t = st.deref(a[0]);
      if (tag(t) == Tag::Var) throw EngineError("instantiation error");
      std::vector<Ref> items;
      if (tag(t) == Tag::Struct) {
        items.push_back(st.new_atom(st.name(t)));
        for (std::uint32_t i = 0; i < st.arity(t); ++i) items.push_back(st.arg(t, i));
      } else {
        items.push_back(t);
      }
      Ref list = st.new_atom("[]");
      for (std::size_t i = items.size(); i-- > 0;) {
        Ref cell[2] = {items[i], list};
        list = st.new_struct(".", cell);
      }
      return st.unify(a[1], list);
    }
  }
  if (n == 1) {
    Tag t = tag(a[0]);
    if (name == "var") return t == Tag::Var;
    if (name == "nonvar") return t != Tag::Var;
    if (name == "atom") return t == Tag::Atom;
    if (name == "number") return t == Tag::Num;
    if (name == "integer") {
      return t == Tag::Num && std::floor(st.cell(st.deref(a[0])).num) == st.cell(st.deref(a[0])).num;
    }
    if (name == "atomic") return t == Tag::Atom || t == Tag::Num || t == Tag::Str;
    if (name == "compound") return t == Tag::Struct;
    if (name == "callable") return t == Tag::Struct || t == Tag::Atom;
  }
  if (n == 3) {
    if (name == "compare") {
      int c = st.compare(a[1], a[2]);
      return st.unify(a[0], st.new_atom(c < 0 ? "<" : c > 0 ? ">" : "="));
    }
    if (name == "functor") {
      Ref t = st.deref(a[0]);
      if (tag(t) == Tag::Struct) {
        return st.unify(a[1], st.new_atom(st.name(t))) &&
               st.unify(a[2], st.new_num(st.arity(t)));
      }
      if (tag(t) != Tag::Var) return st.unify(a[1], t) && st.unify(a[2], st.new_num(0));
      Ref nm = st.deref(a[1]);
      double k = st.eval(a[2]);
      if (k == 0) return st.unify(t, nm);
      std::vector<Ref> xs;
      for (int i = 0; i < static_cast<int>(k); ++i) xs.push_back(st.new_var());
      return st.unify(t, st.new_struct(st.name(nm), xs));
    }
    if (name == "arg") {
      double k = st.eval(a[0]);
      Ref t = st.deref(a[1]);
      if (tag(t) != Tag::Struct) throw EngineError("type error: compound expected");
      if (k < 1 || k > st.arity(t)) return false;
      return st.unify(a[2], st.arg(t, static_cast<std::size_t>(k) - 1));
    }
  }
  if (n == 0) {
    if (name == "true") return true;
    if (name == "fail" || name == "false") return false;
  }
  return std::nullopt;
}

}  // namespace pljs::engine
