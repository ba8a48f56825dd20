#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pljs/diag.hpp"
#include "pljs/ffi.hpp"
#include "pljs/ops.hpp"
#include "pljs/term.hpp"

namespace pljs {

struct Import {
  std::string module;
  bool all = true;
  std::vector<PredInd> preds;
  SourcePos pos;
};

struct Clause {
  TermPtr head;
  TermPtr body;  // `true` for facts
  SourcePos pos;
};

struct OpDirective {
  int priority = 0;
  OpType type = OpType::XFX;
  std::string name;
};

struct ModuleAst {
  std::string name = "user";
  std::string file;
  std::vector<PredInd> exports;
  bool export_all = false;
  std::vector<Import> imports;
  std::vector<Clause> clauses;
  std::vector<ForeignDecl> foreign_decls;
  std::vector<ForeignClassDecl> foreign_classes;
  std::vector<TypeAssertion> type_assertions;
  std::vector<OpDirective> ops;

  bool is_exported(const PredInd& pred) const;
  /// Predicates defined by clauses or module-level foreign declarations, in
  /// order of first definition.
  std::vector<PredInd> defined() const;
  const ForeignDecl* foreign(const PredInd& pred) const;
  const ForeignClassDecl* foreign_class(std::string_view name) const;
};

struct ReadOptions {
  /// Exported predicates must be defined in the module.
  bool check_exports = true;
};

/// Reads one module from source text. Directives: module/2, use_module/1,2,
/// op/3, pred assertions, and the `js:foreign_class Name {
/// ... }.` block. Unknown directives are ignored with a warning.
ModuleAst read_module(std::string_view source, Diagnostics& diags, const std::string& file = {},
                      const ReadOptions& opts = {});

/// Module name named by a use_module argument: `lists`, `'dir/lists.pl'`,
/// `library(lists)` all give `lists`.
std::string module_name_of(const Term& spec);

}  // namespace pljs
