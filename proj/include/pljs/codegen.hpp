#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pljs/builtins.hpp"
#include "pljs/resolve.hpp"

namespace pljs {

enum class SlotKind { Temp, FrameY, Arg };

struct Slot {
  SlotKind kind = SlotKind::Temp;
  int index = 0;

  auto operator<=>(const Slot&) const = default;
};

std::string to_string(const Slot& s);

/// Operand of a step: a variable slot or a term to build.
struct Expr {
  enum class Kind { Var, Atom, Num, Str, Struct };

  Kind kind = Kind::Atom;
  Slot slot;          // Var
  std::string name;   // Atom / Struct functor / Str text
  double num = 0.0;   // Num
  std::vector<Expr> args;

  static Expr var(Slot s);
  static Expr atom(std::string name);
  static Expr number(double v);
  static Expr str(std::string text);
  static Expr structure(std::string name, std::vector<Expr> args);
};

std::string to_string(const Expr& e);

enum class StepKind {
  GetArg,    // slot := argument `arg`
  NewVar,    // slot := fresh variable
  Unify,     // unify argument `arg` with expr (head matching)
  PutArg,    // argument `arg` of the next call := expr
  Builtin,   // inline builtin over args
  Cut,       // cut to the clause's entry choice point
  GetCut,    // slot := barrier for the clause's entry choice point
  CutTo,     // cut to the barrier held by expr
};

struct Step {
  StepKind kind = StepKind::NewVar;
  int arg = -1;
  Slot slot;
  Expr expr;
  InlineOp op = InlineOp::True;
  std::vector<Expr> args;
};

struct Call {
  Target target;
  std::size_t arity = 0;
  bool is_last = false;
};

struct Chunk {
  std::vector<Step> steps;
  std::optional<Call> call;
};

struct ClauseCode {
  int nframe = 0;
  int ntemp = 0;
  std::vector<Chunk> chunks;
  bool needs_frame = false;
  bool saves_cut = false;
};

/// Clause selection. Keys: `name/arity` for atoms and compounds, `#<number>`
/// with the number in ECMAScript notation, `"<text>` for strings.
struct Selection {
  bool indexed = false;
  std::vector<std::pair<std::string, std::vector<int>>> buckets;
  std::vector<int> var_bucket;      // all clauses
  std::vector<int> default_bucket;  // clauses with a variable first argument
};

struct ChunkIR {
  std::string module;
  std::string cls;
  PredInd pred;
  std::vector<ClauseCode> clauses;
  Selection selection;
};

/// Index key of a first-argument term; nullopt for variables.
std::optional<std::string> index_key(const Term& t);

struct SlotAssignment {
  std::map<std::string, Slot> slots;
  int nframe = 0;
  int ntemp = 0;
};

/// FrameY for variables occurring in two or more chunks; Arg for a variable
/// that occurs once in the head as a whole argument and only in chunk 0;
/// Temp otherwise.
SlotAssignment allocate_slots(const ResolvedClause& clause);

ClauseCode split_chunks(const ResolvedClause& clause, const SlotAssignment& slots);

inline ClauseCode compile_clause(const ResolvedClause& clause) {
  return split_chunks(clause, allocate_slots(clause));
}

Selection index_clauses(const std::vector<ResolvedClause>& clauses, bool enable);

struct CodegenOptions {
  bool index = true;
};

ChunkIR compile_predicate(const std::string& module, const PredicateDef& def,
                          const CodegenOptions& opts = {});

/// Chunk invariant: every non-final chunk ends in exactly one call, calls
/// only end chunks, only the final chunk's call may be last, and temporaries
/// are defined before use within their chunk. Returns a violation message,
/// or empty when the invariant holds.
std::string check_chunk_invariant(const ClauseCode& code);

}  // namespace pljs
