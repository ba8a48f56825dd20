#include "pljs/resolve.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "pljs/ops.hpp"

namespace pljs {

std::string Target::display() const {
  std::string s = module + ":";
  if (!cls.empty()) s += cls + ":";
  return s + quote_atom(pred.name) + "/" + std::to_string(pred.arity);
}

const PredicateDef* ResolvedModule::find(const PredInd& pred, const std::string& cls) const {
  for (const auto& p : preds) {
    if (p.pred == pred && p.cls == cls) return &p;
  }
  return nullptr;
}

std::optional<Target> ResolvedModule::term_class(const PredInd& pred) const {
  if (auto it = visible.find(pred); it != visible.end()) return it->second;
  std::string_view b = builtin_module_of(pred);
  if (!b.empty()) return Target{std::string(b), {}, pred, true};
  return std::nullopt;
}

const ResolvedModule* ResolvedProgram::module(const std::string& name) const {
  for (const auto& m : modules) {
    if (m.name == name) return &m;
  }
  return nullptr;
}

namespace {

std::string show(const Term& t) {
  static const OpTable ops = OpTable::defaults();
  WriteOptions o;
  o.ops = &ops;
  return to_string(t, o);
}

class Resolver {
 public:
  Resolver(const std::vector<ModuleUnit>& units, Diagnostics& diags) : units_(units), diags_(diags) {
    for (std::size_t i = 0; i < units.size(); ++i) {
      const ModuleAst& m = units[i].ast;
      if (is_reserved_module(m.name)) {
        throw CompileError("permission error", "module name " + m.name + " is reserved by the runtime",
                           {}, m.file);
      }
      if (!by_name_.emplace(m.name, i).second) {
        throw CompileError("permission error", "module " + m.name + " defined twice", {}, m.file);
      }
    }
    for (const auto& u : units) {
      for (const auto& c : u.ast.foreign_classes) {
        if (by_name_.contains(c.name) || is_reserved_module(c.name)) {
          throw CompileError("permission error",
                             "foreign class " + c.name + " clashes with a module name", c.pos,
                             u.ast.file);
        }
        if (!classes_.emplace(c.name, std::make_pair(u.ast.name, &c)).second) {
          throw CompileError("permission error", "foreign class " + c.name + " declared twice",
                             c.pos, u.ast.file);
        }
      }
    }
  }

  ResolvedProgram run() {
    ResolvedProgram prog;
    for (const auto& u : units_) prog.modules.push_back(module(u));
    prog.load_order = order(prog);
    return prog;
  }

 private:
  const ModuleAst& ast(const std::string& name) const { return units_[by_name_.at(name)].ast; }

  // Predicates a module makes available to importers.
  std::set<PredInd> exported_by(const std::string& name) const {
    std::set<PredInd> out;
    if (is_builtin_module(name)) {
      for (const auto& m : builtin_modules()) {
        if (m.name == name) out.insert(m.exports.begin(), m.exports.end());
      }
      return out;
    }
    const ModuleAst& m = ast(name);
    if (m.export_all) {
      for (const auto& d : m.defined()) out.insert(d);
    } else {
      out.insert(m.exports.begin(), m.exports.end());
    }
    for (const auto& c : units_[by_name_.at(name)].clauses) {
      if (indicator(*c.head) == PredInd{"attr_unify_hook", 2}) out.insert({"attr_unify_hook", 2});
    }
    return out;
  }

  bool known_module(const std::string& name) const {
    return by_name_.contains(name) || is_builtin_module(name);
  }

  ResolvedModule module(const ModuleUnit& u) {
    const ModuleAst& m = u.ast;
    ResolvedModule r;
    r.name = m.name;
    r.file = m.file;
    r.classes = m.foreign_classes;

    // Local predicates in order of first definition.
    std::set<PredInd> local;
    std::map<PredInd, std::size_t> index;
    auto def = [&](const PredInd& p, bool aux) -> PredicateDef& {
      auto it = index.find(p);
      if (it != index.end()) return r.preds[it->second];
      index[p] = r.preds.size();
      local.insert(p);
      PredicateDef d;
      d.pred = p;
      d.aux = aux;
      d.exported = !aux && (m.is_exported(p) || p == PredInd{"attr_unify_hook", 2});
      r.preds.push_back(std::move(d));
      return r.preds.back();
    };
    for (const auto& c : u.clauses) def(indicator(*c.head), c.aux);
    for (const auto& f : m.foreign_decls) def(f.pred, false).foreign = f;

    // Visible table: local, then imports.
    for (const auto& p : local) r.visible[p] = Target{m.name, {}, p, false};
    std::map<PredInd, std::vector<std::string>> imported;
    for (const auto& imp : m.imports) {
      if (!known_module(imp.module)) {
        throw CompileError("existence error", "imported module " + imp.module + " not found",
                           imp.pos, m.file);
      }
      if (imp.module == m.name) continue;
      auto exp = exported_by(imp.module);
      std::vector<PredInd> preds;
      if (imp.all) {
        preds.assign(exp.begin(), exp.end());
      } else {
        for (const auto& p : imp.preds) {
          if (!exp.contains(p)) {
            throw CompileError("permission error",
                               p.key() + " is not exported by module " + imp.module, imp.pos,
                               m.file);
          }
          preds.push_back(p);
        }
      }
      for (const auto& p : preds) {
        auto& v = imported[p];
        if (std::find(v.begin(), v.end(), imp.module) == v.end()) v.push_back(imp.module);
      }
      add_dep(r, imp.module);
    }
    for (const auto& [p, mods] : imported) {
      if (local.contains(p) || mods.size() != 1) continue;
      r.visible[p] = Target{mods[0], {}, p, is_builtin_module(mods[0])};
    }

    std::set<PredInd> warned;
    for (const auto& c : u.clauses) {
      ResolvedClause rc{c.head, {}, c.aux, c.pos};
      for (const auto& g : c.body) {
        rc.body.push_back(goal(r, m, g, imported, local, warned));
      }
      r.preds[index.at(indicator(*c.head))].clauses.push_back(std::move(rc));
    }

    for (const auto& cls : m.foreign_classes) {
      for (const auto& meth : cls.methods) {
        PredicateDef d;
        d.pred = meth.pred;
        d.cls = cls.name;
        d.foreign = meth;
        d.exported = true;
        r.preds.push_back(std::move(d));
      }
    }
    return r;
  }

  void add_dep(ResolvedModule& r, const std::string& name) {
    if (name == r.name) return;
    if (std::find(r.deps.begin(), r.deps.end(), name) == r.deps.end()) r.deps.push_back(name);
  }

  ResolvedGoal goal(ResolvedModule& r, const ModuleAst& m, const TermPtr& g,
                    const std::map<PredInd, std::vector<std::string>>& imported,
                    std::set<PredInd>& local, std::set<PredInd>& warned) {
    if (g->is_compound(":", 2)) return qualified(r, m, g, local, warned);
    if (!g->is_callable()) {
      throw CompileError("type error", "callable goal expected, found " + show(*g), g->pos, m.file);
    }
    PredInd p = indicator(*g);
    if (auto op = inline_op(p)) return {g, op, {}};
    if (local.contains(p)) return {g, std::nullopt, Target{m.name, {}, p, false}};
    if (auto it = imported.find(p); it != imported.end()) {
      if (it->second.size() > 1) {
        throw CompileError("permission error",
                           "ambiguous predicate " + p.key() + ": imported from both " +
                               it->second[0] + " and " + it->second[1],
                           g->pos, m.file);
      }
      const std::string& from = it->second[0];
      return {g, std::nullopt, Target{from, {}, p, is_builtin_module(from)}};
    }
    std::string_view b = builtin_module_of(p);
    if (!b.empty()) {
      add_dep(r, std::string(b));
      return {g, std::nullopt, Target{std::string(b), {}, p, true}};
    }
    return {g, std::nullopt, stub(r, m, p, g->pos, local, warned)};
  }

  Target stub(ResolvedModule& r, const ModuleAst& m, const PredInd& p, SourcePos pos,
              std::set<PredInd>& local, std::set<PredInd>& warned) {
    if (warned.insert(p).second) {
      diags_.warn("unknown predicate " + p.key() + " in module " + m.name + "; calls will fail",
                  pos, m.file);
      PredicateDef d;
      d.pred = p;
      d.stub = true;
      r.preds.push_back(std::move(d));
      local.insert(p);
      r.visible[p] = Target{m.name, {}, p, false};
    }
    return Target{m.name, {}, p, false};
  }

  ResolvedGoal qualified(ResolvedModule& r, const ModuleAst& m, const TermPtr& g,
                         std::set<PredInd>& local, std::set<PredInd>& warned) {
    const TermPtr& q = g->args[0];
    const TermPtr& inner = g->args[1];
    if (!q->is_atom()) {
      throw CompileError("type error", "module name expected in goal " + show(*g), g->pos, m.file);
    }
    if (!inner->is_callable()) {
      throw CompileError("type error", "callable goal expected in " + show(*g), g->pos, m.file);
    }
    PredInd p = indicator(*inner);
    const std::string& mod = q->name;
    if (inner->is_compound(",", 2) || inner->is_compound(";", 2) || inner->is_compound("->", 2) ||
        inner->is_compound("\\+", 1) || inner->is_compound(":", 2)) {
      throw CompileError("domain error", "module-qualified control construct in " + show(*g),
                         g->pos, m.file);
    }
    if (mod == m.name) {
      if (auto op = inline_op(p)) return {inner, op, {}};
      if (local.contains(p)) return {inner, std::nullopt, Target{m.name, {}, p, false}};
      return {inner, std::nullopt, stub(r, m, p, g->pos, local, warned)};
    }
    if (auto c = classes_.find(mod); c != classes_.end()) {
      if (!c->second.second->method(p)) {
        throw CompileError("existence error",
                           "foreign class " + mod + " has no method " + p.key(), g->pos, m.file);
      }
      add_dep(r, c->second.first);
      return {inner, std::nullopt, Target{c->second.first, mod, p, false}};
    }
    if (!known_module(mod)) {
      throw CompileError("existence error", "unknown module " + mod + " in goal " + show(*g),
                         g->pos, m.file);
    }
    if (!exported_by(mod).contains(p)) {
      throw CompileError("permission error", p.key() + " is not exported by module " + mod,
                         g->pos, m.file);
    }
    add_dep(r, mod);
    return {inner, std::nullopt, Target{mod, {}, p, is_builtin_module(mod)}};
  }

  std::vector<std::string> order(const ResolvedProgram& prog) const {
    std::vector<std::string> out;
    std::set<std::string> seen;
    std::function<void(const ResolvedModule&)> visit = [&](const ResolvedModule& m) {
      if (!seen.insert(m.name).second) return;
      for (const auto& d : m.deps) {
        if (const ResolvedModule* dm = prog.module(d)) visit(*dm);
      }
      out.push_back(m.name);
    };
    for (const auto& m : prog.modules) visit(m);
    return out;
  }

  const std::vector<ModuleUnit>& units_;
  Diagnostics& diags_;
  std::map<std::string, std::size_t> by_name_;
  std::map<std::string, std::pair<std::string, const ForeignClassDecl*>> classes_;
};

}  // namespace

ResolvedProgram resolve_modules(const std::vector<ModuleUnit>& units, Diagnostics& diags) {
  Resolver r(units, diags);
  return r.run();
}

ForeignScope foreign_scope(const std::vector<ModuleAst>& modules, const ModuleAst& mod) {
  ForeignScope scope;
  std::map<std::string, const ModuleAst*> by_name;
  for (const auto& m : modules) {
    by_name[m.name] = &m;
    for (const auto& c : m.foreign_classes) scope.classes[c.name] = &c;
  }
  const ModuleAst* self = &mod;
  scope.lookup = [by_name, self](const std::string& module, const PredInd& pred) -> const ForeignDecl* {
    if (!module.empty() && module != self->name) {
      auto it = by_name.find(module);
      if (it == by_name.end() || !it->second->is_exported(pred)) return nullptr;
      return it->second->foreign(pred);
    }
    if (const ForeignDecl* d = self->foreign(pred)) return d;
    if (!module.empty()) return nullptr;
    for (const auto& imp : self->imports) {
      auto it = by_name.find(imp.module);
      if (it == by_name.end()) continue;
      bool listed = imp.all || std::find(imp.preds.begin(), imp.preds.end(), pred) != imp.preds.end();
      if (listed && it->second->is_exported(pred)) {
        if (const ForeignDecl* d = it->second->foreign(pred)) return d;
      }
    }
    return nullptr;
  };
  return scope;
}

}  // namespace pljs
