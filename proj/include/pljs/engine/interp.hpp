#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "pljs/engine/store.hpp"
#include "pljs/normalize.hpp"
#include "pljs/term.hpp"

namespace pljs::engine {

struct SolveOptions {
  std::size_t step_limit = 1'000'000;
  std::size_t max_answers = 10'000;
};

/// Outcome of a query: answer texts in order of discovery.
struct Answers {
  std::vector<std::string> items;
  std::string output;  // text written by write/1 and nl/0
};

/// Source-level interpreter over a single clause database. Understands
/// `,`/2, `;`/2, `->`/2, `\+`/1, `!`, call/N, the cut barrier goals and the
/// deterministic builtins. Unknown predicates fail. Every clause is tried
/// in order; there is no indexing.
class Interpreter {
 public:
  explicit Interpreter(SolveOptions opts = {});
  ~Interpreter();

  void add_clause(const TermPtr& head, const TermPtr& body);
  void add_clause(const PlainClause& clause);

  /// Solves `goal`; each answer is the canonical text of `vars` (the
  /// goal's variables in order), e.g. `[f(_0),b]`.
  Answers solve(const TermPtr& goal);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Answer text of a variable list as produced by the engines.
std::string answer_text(Store& st, const std::vector<Ref>& vars);

}  // namespace pljs::engine
