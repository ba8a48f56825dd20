#pragma once

#include <map>
#include <string>
#include <vector>

#include "pljs/reader.hpp"
#include "pljs/term.hpp"

namespace pljs {

/// Horn clause with a flat body: no `;`, `->` or `\+`, no variable goals.
struct PlainClause {
  TermPtr head;
  std::vector<TermPtr> body;
  bool aux = false;
  SourcePos pos;
};

/// Cut barrier goals. `'$get_cut'(B)` binds B to the clause's entry choice
/// point; `'$cut'(B)` cuts back to it. They carry a cut inside a branch of
/// `;`/`->` out to the clause it belongs to.
inline constexpr std::string_view kGetCut = "$get_cut";
inline constexpr std::string_view kCutTo = "$cut";

/// Name of the K-th auxiliary predicate of `pred`: `'<name>/<arity>$dK'`.
std::string aux_name(const PredInd& pred, int k);

/// Normalizes clauses, numbering auxiliary predicates per original predicate.
class Normalizer {
 public:
  /// The returned list starts with the clause for `head`, followed by the
  /// clauses of any auxiliary predicates it needs.
  std::vector<PlainClause> clause(const TermPtr& head, const TermPtr& body);

  /// All clauses of a module in source order.
  std::vector<PlainClause> module(const ModuleAst& mod);

 private:
  std::map<PredInd, int> counters_;
  int barriers_ = 0;
};

/// One-shot form with fresh auxiliary numbering.
std::vector<PlainClause> normalize_clause(const TermPtr& head, const TermPtr& body);

/// `head :- g1, ..., gn.` (or `head.`) with operator notation.
std::string to_string(const PlainClause& c);

}  // namespace pljs
