#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "pljs/term.hpp"

namespace pljs::engine {

using Ref = std::uint32_t;

enum class Tag : std::uint8_t { Var, Atom, Num, Str, Struct, Barrier };

/// Heap cell. Var: `a` is the binding (itself when unbound). Atom/Str:
/// `a` is an interned name. Struct: `a` is the functor id, `b` the offset of
/// its arguments in the argument area. Barrier: `b` is a choice stack height.
struct Cell {
  Tag tag = Tag::Var;
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  double num = 0.0;
};

/// Thrown by evaluation and builtins on instantiation or type errors.
struct EngineError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when a solve exceeds its step budget.
struct StepLimit : std::runtime_error {
  StepLimit() : std::runtime_error("step limit exceeded") {}
};

struct Functor {
  std::uint32_t name = 0;
  std::uint32_t arity = 0;
};

class Store {
 public:
  struct Mark {
    std::size_t cells = 0, args = 0, trail = 0;
  };

  Ref new_var();
  Ref new_atom(std::string_view name);
  Ref new_atom_id(std::uint32_t id);
  Ref new_num(double v);
  Ref new_str(std::string_view text);
  Ref new_struct(std::string_view name, std::span<const Ref> args);
  Ref new_struct_id(std::uint32_t functor, std::span<const Ref> args);
  Ref new_barrier(std::size_t height);

  Ref deref(Ref r) const;
  const Cell& cell(Ref r) const { return cells_[r]; }
  Ref arg(Ref s, std::size_t i) const { return args_[cells_[s].b + i]; }
  std::uint32_t arity(Ref s) const { return functors_[cells_[s].a].arity; }
  const std::string& name(Ref r) const;  // atom, string or functor name
  std::uint32_t functor_id(std::string_view name, std::uint32_t arity);
  const Functor& functor(std::uint32_t id) const { return functors_[id]; }
  std::uint32_t intern(std::string_view s);
  const std::string& text(std::uint32_t id) const { return names_[id]; }

  bool is_var(Ref r) const { return cells_[deref(r)].tag == Tag::Var; }
  bool is_callable(Ref r) const;
  bool is_atom(Ref r, std::string_view name) const;
  /// Functor name and arity of a callable term.
  std::pair<std::string, std::size_t> indicator(Ref r) const;

  /// Younger variable is bound to older.
  bool unify(Ref a, Ref b);
  void bind(Ref v, Ref t);

  Mark mark() const { return {cells_.size(), args_.size(), trail_.size()}; }
  void undo(const Mark& m);

  /// Standard order of terms: Var < Num < Atom < Str < Struct.
  int compare(Ref a, Ref b) const;
  double eval(Ref r) const;

  /// Copies with fresh variables.
  Ref copy(Ref t);
  Ref copy(Ref t, std::unordered_map<Ref, Ref>& vars);

  Ref from_term(const Term& t, std::map<std::string, Ref>& vars);
  /// Canonical text, lists in bracket notation, with variables numbered `_0`, `_1`, ... in order of
  /// first occurrence across calls sharing `names`.
  std::string show(Ref r, std::map<Ref, int>& names) const;
  std::string show(Ref r) const;

  /// Index key as computed by the emitted selection code; nullopt for an
  /// unbound variable.
  std::optional<std::string> index_key(Ref r) const;

  std::size_t size() const { return cells_.size(); }

 private:
  Ref push(Cell c);

  std::vector<Cell> cells_;
  std::vector<Ref> args_;
  std::vector<Ref> trail_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> name_ids_;
  std::vector<Functor> functors_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> functor_ids_;
};

/// Deterministic builtins shared by the engines: comparisons, type tests,
/// `\=`, `is`, arithmetic comparison, functor/3, arg/3, copy_term/2,
/// `=..`. Returns nullopt when `name/arity` is not one of them.
std::optional<bool> call_det_builtin(Store& st, const std::string& name,
                                     std::span<const Ref> args);

}  // namespace pljs::engine
