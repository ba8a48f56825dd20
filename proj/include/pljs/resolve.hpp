#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pljs/builtins.hpp"
#include "pljs/diag.hpp"
#include "pljs/ffi.hpp"
#include "pljs/normalize.hpp"
#include "pljs/reader.hpp"

namespace pljs {

/// Defining site of a predicate.
struct Target {
  std::string module;
  /// Foreign class holding the predicate as a method; empty otherwise.
  std::string cls;
  PredInd pred;
  bool builtin = false;

  /// `module:name/arity`, or `module:class:name/arity` for methods.
  std::string display() const;
  auto operator<=>(const Target&) const = default;
};

struct ResolvedGoal {
  /// The goal with any module qualification removed.
  TermPtr term;
  std::optional<InlineOp> inl;
  Target target;  // meaningful when !inl
};

struct ResolvedClause {
  TermPtr head;
  std::vector<ResolvedGoal> body;
  bool aux = false;
  SourcePos pos;
};

struct PredicateDef {
  PredInd pred;
  std::vector<ResolvedClause> clauses;
  std::optional<ForeignDecl> foreign;
  std::string cls;      // owning foreign class for methods
  bool stub = false;    // unknown predicate; fails when called
  bool exported = false;
  bool aux = false;
};

struct ResolvedModule {
  std::string name;
  std::string file;
  /// Predicates in order of definition; methods follow under their class.
  std::vector<PredicateDef> preds;
  std::vector<ForeignClassDecl> classes;
  /// Modules this one links against, in declaration then first-use order.
  std::vector<std::string> deps;
  /// Predicates visible unqualified: local ones and unambiguous imports.
  std::map<PredInd, Target> visible;

  const PredicateDef* find(const PredInd& pred, const std::string& cls = {}) const;
  /// Predicate a term `name(...)` denotes when built in this module: a
  /// visible predicate or a builtin predicate; nullopt for plain data.
  std::optional<Target> term_class(const PredInd& pred) const;
};

/// A module after reading, method rewriting and normalization.
struct ModuleUnit {
  ModuleAst ast;
  std::vector<PlainClause> clauses;
};

struct ResolvedProgram {
  std::vector<ResolvedModule> modules;  // input order
  /// Module names in dependency order (imported modules first).
  std::vector<std::string> load_order;

  const ResolvedModule* module(const std::string& name) const;
};

/// Annotates every body goal with its defining module: local predicates
/// first, then the unique importer, then builtins. Unknown predicates warn
/// and get a failing local stub; goals importable from two modules are an
/// error naming both.
ResolvedProgram resolve_modules(const std::vector<ModuleUnit>& units, Diagnostics& diags);

/// Foreign declaration scope of module `mod` across the whole program (used
/// for receiver-class inference before normalization).
ForeignScope foreign_scope(const std::vector<ModuleAst>& modules, const ModuleAst& mod);

}  // namespace pljs
