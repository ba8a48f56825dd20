#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "pljs/diag.hpp"

namespace pljs {

class OpTable;

enum class TermKind : std::uint8_t { Var, Atom, Int, Float, Str, Compound };

struct Term;
using TermPtr = std::shared_ptr<const Term>;

/// Parsed Prolog term. Immutable once built; subtrees are shared freely.
struct Term {
  TermKind kind = TermKind::Atom;
  std::string name;  // variable name, atom/functor name or string text
  std::int64_t ival = 0;
  double fval = 0.0;
  std::vector<TermPtr> args;
  SourcePos pos;

  bool is_var() const { return kind == TermKind::Var; }
  bool is_atom() const { return kind == TermKind::Atom; }
  bool is_atom(std::string_view n) const { return kind == TermKind::Atom && name == n; }
  bool is_compound() const { return kind == TermKind::Compound; }
  bool is_compound(std::string_view n, std::size_t arity) const {
    return kind == TermKind::Compound && name == n && args.size() == arity;
  }
  bool is_number() const { return kind == TermKind::Int || kind == TermKind::Float; }
  bool is_atomic() const { return kind != TermKind::Var && kind != TermKind::Compound; }
  bool is_callable() const { return kind == TermKind::Atom || kind == TermKind::Compound; }
  std::size_t arity() const { return args.size(); }
  const TermPtr& arg(std::size_t i) const { return args[i]; }
};

TermPtr make_var(std::string name, SourcePos pos = {});
TermPtr make_atom(std::string name, SourcePos pos = {});
TermPtr make_int(std::int64_t value, SourcePos pos = {});
TermPtr make_float(double value, SourcePos pos = {});
TermPtr make_str(std::string text, SourcePos pos = {});
/// Zero arguments yields an atom, keeping arity-0 terms canonical.
TermPtr make_compound(std::string name, std::vector<TermPtr> args, SourcePos pos = {});
TermPtr make_list(const std::vector<TermPtr>& items, TermPtr tail = nullptr);

/// Predicate indicator `name/arity`.
struct PredInd {
  std::string name;
  std::size_t arity = 0;

  std::string key() const { return name + "/" + std::to_string(arity); }
  auto operator<=>(const PredInd&) const = default;
};

/// Indicator of a callable term; requires `t.is_callable()`.
PredInd indicator(const Term& t);

bool structurally_equal(const Term& a, const Term& b);
/// Equal up to a consistent one-to-one renaming of variables.
bool is_variant(const Term& a, const Term& b);

/// Distinct variable names in left-to-right first-occurrence order.
std::vector<std::string> variables_of(const Term& t);
void collect_variables(const Term& t, std::vector<std::string>& out);
/// Number of occurrences of variable `name` in `t`.
std::size_t count_var(const Term& t, std::string_view name);

bool atom_needs_quotes(std::string_view name);
std::string quote_atom(std::string_view name);
std::string format_float(double value);

struct WriteOptions {
  bool quoted = true;
  /// Operator table for operator notation; null prints canonical functional
  /// notation throughout.
  const OpTable* ops = nullptr;
  bool list_syntax = true;
};

std::string to_string(const Term& t, const WriteOptions& opts = {});
/// Functional notation with quoted atoms; reads back to an identical tree.
std::string to_canonical(const Term& t);

}  // namespace pljs
