#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "pljs/codegen.hpp"
#include "pljs/engine/interp.hpp"
#include "pljs/resolve.hpp"

namespace pljs::engine {

/// Compiled predicates of a whole program keyed by defining site.
struct CodeTable {
  struct Entry {
    const ResolvedModule* module = nullptr;
    const PredicateDef* def = nullptr;
    ChunkIR ir;
  };
  std::map<Target, Entry> preds;

  const Entry* find(const Target& t) const;
};

CodeTable build_code_table(const ResolvedProgram& prog, const CodegenOptions& opts = {});

/// Executes ChunkIR the way the emitted code does: caller-allocated frames,
/// one continuation per chunk, choice points holding the clause list of the
/// goal, first-argument selection as compiled.
class Vm {
 public:
  Vm(const CodeTable& code, SolveOptions opts = {});
  ~Vm();

  /// Solves `module:pred(args...)` where every argument is a fresh variable;
  /// answers are the canonical texts of the argument list.
  Answers solve(const std::string& module, const PredInd& pred);

  /// Number of clause entries taken by the last solve (choice point retries
  /// included).
  std::size_t clause_entries() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace pljs::engine
