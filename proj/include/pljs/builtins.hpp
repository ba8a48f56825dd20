#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pljs/term.hpp"

namespace pljs {

/// Goals compiled to inline steps instead of predicate calls.
enum class InlineOp {
  Unify,       // =/2
  Is,          // is/2
  Lt, Gt, Le, Ge, ArEq, ArNe,
  Var, Nonvar,
  True, Fail,
  Cut,         // !/0
  GetCut,      // '$get_cut'/1
  CutTo,       // '$cut'/1
};

std::optional<InlineOp> inline_op(const PredInd& pred);
std::string_view inline_name(InlineOp op);

/// Runtime-provided modules and the predicates they export.
struct BuiltinModule {
  std::string_view name;
  std::vector<PredInd> exports;
};

const std::vector<BuiltinModule>& builtin_modules();
bool is_builtin_module(std::string_view name);
/// Module exporting `pred` among the builtin modules, or empty.
std::string_view builtin_module_of(const PredInd& pred);

/// Modules whose name is reserved by the runtime (the builtin modules and
/// the root symbols such as `rt`, `t_var`, ...).
bool is_reserved_module(std::string_view name);

}  // namespace pljs
