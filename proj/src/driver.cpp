#include "pljs/driver.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "pljs/jsfmt.hpp"
#include "pljs/lexer.hpp"
#include "pljs/normalize.hpp"
#include "pljs/parser.hpp"

namespace pljs {

namespace fs = std::filesystem;

SourceFile read_source_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CompileError("existence error", "cannot read source file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return {path, ss.str()};
}

std::vector<ModuleUnit> prepare_units(const std::vector<ModuleAst>& asts) {
  std::vector<ModuleUnit> units;
  for (const auto& ast : asts) {
    ModuleUnit u{ast, {}};
    ForeignScope scope = foreign_scope(asts, ast);
    for (auto& c : u.ast.clauses) {
      const PredInd pred = indicator(*c.head);
      scope.head_types = nullptr;
      for (const auto& t : ast.type_assertions)
        if (t.pred == pred) scope.head_types = &t;
      c.body = resolve_method_calls(c.head, c.body, scope, ast.file);
    }
    Normalizer norm;
    u.clauses = norm.module(u.ast);
    units.push_back(std::move(u));
  }
  return units;
}

namespace {

std::vector<ModuleAst> read_all(const std::vector<SourceFile>& sources, Diagnostics& diags,
                                const CompileOptions& opts) {
  std::vector<ModuleAst> asts;
  std::set<std::string> names;
  for (const auto& s : sources) {
    asts.push_back(read_module(s.text, diags, s.path, opts.read));
    names.insert(asts.back().name);
  }
  for (std::size_t i = 0; i < asts.size(); ++i) {
    for (const auto imports = asts[i].imports; const auto& imp : imports) {
      if (names.count(imp.module) || is_builtin_module(imp.module)) continue;
      for (const auto& dir : opts.lib_dirs) {
        fs::path p = fs::path(dir) / (imp.module + ".pl");
        if (!fs::exists(p)) continue;
        SourceFile f = read_source_file(p.string());
        asts.push_back(read_module(f.text, diags, f.path, opts.read));
        names.insert(asts.back().name);
        names.insert(imp.module);
        break;
      }
    }
  }
  return asts;
}

}  // namespace

CompiledProgram compile_program(const std::vector<SourceFile>& sources, Diagnostics& diags,
                                const CompileOptions& opts) {
  std::vector<ModuleAst> asts = read_all(sources, diags, opts);
  CompiledProgram out;
  out.program = resolve_modules(prepare_units(asts), diags);
  CodegenOptions cg;
  cg.index = opts.index;
  for (const auto& name : out.program.load_order) {
    const ResolvedModule* mod = out.program.module(name);
    if (!mod) continue;
    CompiledModule cm;
    cm.name = mod->name;
    cm.file = mod->file;
    for (const auto& def : mod->preds) cm.irs.push_back(compile_predicate(mod->name, def, cg));
    cm.js = emit_module(out.program, *mod, cm.irs);
    out.modules.push_back(std::move(cm));
  }
  return out;
}

std::string module_file_name(const std::string& module) {
  return js::sanitize_identifier(module) + ".js";
}

std::string loader_manifest(const CompiledProgram& prog) {
  nlohmann::ordered_json j;
  j["load_order"] = nlohmann::json::array();
  j["modules"] = nlohmann::json::array();
  for (const auto& m : prog.modules) {
    j["load_order"].push_back(m.name);
    j["modules"].push_back({{"name", m.name}, {"file", module_file_name(m.name)}});
  }
  return j.dump(2) + "\n";
}

std::pair<std::string, std::string> split_entry(const std::string& entry) {
  const OpTable ops = OpTable::defaults();
  TermPtr t = parse_term(entry, ops);
  if (t->is_compound(":", 2) && t->arg(0)->is_atom()) {
    auto colon = entry.find(':');
    return {t->arg(0)->name, entry.substr(colon + 1)};
  }
  return {"user", entry};
}

EntryQuery make_entry_query(const std::string& module, const std::string& goal_text) {
  const OpTable ops = OpTable::defaults();
  TermPtr goal = parse_term(goal_text, ops);
  EntryQuery q;
  q.module = "$query";
  for (const auto& v : variables_of(*goal))
    if (!v.starts_with("_")) q.names.push_back(v);
  q.pred = PredInd{"$answer", q.names.size()}.key();
  std::string head = "'$answer'";
  if (!q.names.empty()) {
    head += "(";
    for (std::size_t i = 0; i < q.names.size(); ++i) head += (i ? ", " : "") + q.names[i];
    head += ")";
  }
  std::string text = ":- module('$query', ['$answer'/" + std::to_string(q.names.size()) + "]).\n";
  text += ":- use_module(" + quote_atom(module) + ").\n";
  text += head + " :- (" + goal_text + ").\n";
  q.source = {"<query>", text};
  return q;
}

}  // namespace pljs
