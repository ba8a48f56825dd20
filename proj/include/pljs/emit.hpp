#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pljs/codegen.hpp"
#include "pljs/resolve.hpp"

namespace pljs {

struct EmittedModule {
  std::string module_name;
  std::string source;
  std::vector<std::string> deps;
  /// Byte ranges of verbatim foreign code inside `source`.
  std::vector<std::pair<std::size_t, std::size_t>> foreign_spans;
};

/// Table key of a predicate or functor: `name/arity`, verbatim.
std::string mangle(std::string_view name, std::size_t arity);

/// Serializes one module: a `$r.def` closure holding placeholder variables,
/// constructors, nested symbol definitions, export entries and a `link`
/// thunk. `irs` is parallel to `mod.preds`.
EmittedModule emit_module(const ResolvedProgram& prog, const ResolvedModule& mod,
                          const std::vector<ChunkIR>& irs);

}  // namespace pljs
