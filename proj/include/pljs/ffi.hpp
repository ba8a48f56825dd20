#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pljs/diag.hpp"
#include "pljs/term.hpp"

namespace pljs {

enum class ArgMode { In, Out };

enum class ForeignType { Term, Number, String, Atom, Class };

struct ForeignArg {
  ArgMode mode = ArgMode::In;
  ForeignType type = ForeignType::Term;
  std::string class_name;  // set when type == Class
  std::string param;       // parameter name visible to the foreign body
};

/// `:- pred name(Modes...) [:: Types] + js:foreign("body").`
///
/// For a method of a foreign class, `receiver` names the class and the
/// predicate takes the wrapped object as an extra first argument, so
/// `pred.arity == args.size() + 1`. Otherwise `pred.arity == args.size()`.
struct ForeignDecl {
  PredInd pred;
  std::vector<ForeignArg> args;
  std::string body;
  std::string receiver;
  SourcePos pos;

  const ForeignArg* output() const;
  /// Declared argument corresponding to predicate argument `i`; null for the
  /// receiver slot.
  const ForeignArg* arg_for(std::size_t i) const;
};

/// `:- js:foreign_class Name { :- pred ... . ... }.`
struct ForeignClassDecl {
  std::string name;
  std::vector<ForeignDecl> methods;
  SourcePos pos;

  const ForeignDecl* method(const PredInd& pred) const;
};

/// A `pred` assertion without a foreign body: only its argument types are
/// used (to seed receiver classes of head variables).
struct TypeAssertion {
  PredInd pred;
  std::vector<ForeignArg> args;
  SourcePos pos;
};

using ForeignDirective = std::variant<ForeignDecl, ForeignClassDecl, TypeAssertion>;

/// Parses the argument of a `pred` directive, or the `foreign_class(Name,
/// Decls)` term the reader builds for a class block.
///   - argument without a mode: defaults to `+` with a warning
///   - non-text foreign body, `+` properties other than is_det/det, more
///     than one output argument: CompileError
ForeignDirective parse_foreign_decl(const Term& directive, Diagnostics& diags,
                                    const std::string& file = {});

/// Term the reader builds for a class block: `foreign_class(Name, [pred(...), ...])`.
TermPtr make_foreign_class_term(const std::string& name, std::vector<TermPtr> decls,
                                SourcePos pos);

// ---------------------------------------------------------------------------
// Receiver-class inference.

/// Global view of foreign declarations used while rewriting method calls.
struct ForeignScope {
  /// Classes by name, across all modules of the program.
  std::map<std::string, const ForeignClassDecl*> classes;
  /// Foreign declaration of an unqualified (module empty) or qualified goal
  /// as seen from the module being compiled; null when the goal is not foreign.
  std::function<const ForeignDecl*(const std::string& module, const PredInd& pred)> lookup;
  /// Type assertion for the clause's own predicate, if any.
  const TypeAssertion* head_types = nullptr;
};

/// Rewrites every `Obj:Method(Args...)` goal whose receiver is a variable into
/// `Class:Method(Obj, Args...)`. Receiver classes flow left to right from
/// `-Class` outputs of earlier foreign calls and from head argument types.
/// An unknown receiver class or method is a CompileError citing the goal.
TermPtr resolve_method_calls(const TermPtr& head, const TermPtr& body, const ForeignScope& scope,
                             const std::string& file = {});

// ---------------------------------------------------------------------------
// Stub emission.

/// Names of the emitted-module locals a stub body refers to.
struct StubNames {
  std::string fail;    // FAIL sentinel
  std::string box;     // rt box(value, kind)
  std::string unbox;   // rt unbox(term, kind)
  std::string func;    // the foreign function holding the verbatim body
  /// Identifier of the wrapper constructor for a class name.
  std::function<std::string(const std::string&)> class_ctor;
};

/// JavaScript function declaration wrapping the verbatim foreign body; the
/// parameters are the declared input names in order.
std::string emit_foreign_function(const ForeignDecl& decl, const std::string& name);

/// Body of the stub predicate's `execute(w)` method: unbox inputs, call the
/// foreign function (receiver = wrapped object for methods), box and unify
/// the output, then proceed. Never pushes a choicepoint.
std::string emit_foreign_stub(const ForeignDecl& decl, const StubNames& names,
                              const std::string& indent);

}  // namespace pljs
