#pragma once

#include <string>
#include <vector>

#include "pljs/codegen.hpp"
#include "pljs/emit.hpp"
#include "pljs/reader.hpp"
#include "pljs/resolve.hpp"

namespace pljs {

struct SourceFile {
  std::string path;
  std::string text;
};

struct CompileOptions {
  bool index = true;
  /// Directories searched for `<module>.pl` when an import names a module
  /// not among the inputs.
  std::vector<std::string> lib_dirs;
  ReadOptions read;
};

struct CompiledModule {
  std::string name;
  std::string file;
  std::vector<ChunkIR> irs;  // parallel to the resolved module's preds
  EmittedModule js;
};

struct CompiledProgram {
  ResolvedProgram program;
  std::vector<CompiledModule> modules;  // load order
};

/// Method-call rewriting and normalization of read modules.
std::vector<ModuleUnit> prepare_units(const std::vector<ModuleAst>& asts);

/// Reads, resolves, compiles and emits every module; library modules named
/// by imports are pulled in from `lib_dirs`. Throws CompileError.
CompiledProgram compile_program(const std::vector<SourceFile>& sources, Diagnostics& diags,
                                const CompileOptions& opts = {});

SourceFile read_source_file(const std::string& path);

/// Output file name of a module.
std::string module_file_name(const std::string& module);

/// `{"load_order": [...], "modules": [{"name": ..., "file": ...}, ...]}`.
std::string loader_manifest(const CompiledProgram& prog);

/// Entry query: the goal `goal_text` run from a synthetic module importing
/// `module`. The goal's variables become the answer columns.
struct EntryQuery {
  SourceFile source;
  std::string module;  // synthetic module name
  std::string pred;    // answer predicate key
  std::vector<std::string> names;
};

EntryQuery make_entry_query(const std::string& module, const std::string& goal_text);

/// Splits `M:G` into module and goal text; a missing module gives `user`.
std::pair<std::string, std::string> split_entry(const std::string& entry);

}  // namespace pljs
