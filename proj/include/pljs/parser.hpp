#pragma once

#include <span>
#include <string>
#include <string_view>

#include "pljs/lexer.hpp"
#include "pljs/ops.hpp"
#include "pljs/term.hpp"

namespace pljs {

/// Operator-precedence reader over a token sequence. Each clause is read up
/// to its End token; anonymous `_` variables get distinct internal names.
class Parser {
 public:
  Parser(std::span<const Token> tokens, const OpTable& ops, std::string file = {});

  bool done() const { return pos_ >= tokens_.size(); }

  /// Next term of priority <= 1200 terminated by an End token.
  TermPtr next_clause();

  // Token-level access for reader modes that step outside term syntax.
  const Token* peek(std::size_t k = 0) const;
  const Token& consume();
  void expect_punct(std::string_view p);
  void expect_end();
  /// Reads one term with priority <= `max_prec` without consuming what follows.
  TermPtr read_term(int max_prec);

  [[noreturn]] void fail(const std::string& msg, const Token* at) const;

 private:
  struct Parsed {
    TermPtr term;
    int prec = 0;
  };

  Parsed parse(int max_prec);
  Parsed parse_primary(int max_prec);
  Parsed parse_infix(Parsed left, int max_prec);
  TermPtr parse_arglist(const Token& functor);
  TermPtr parse_list(const Token& open);
  bool starts_term(const Token& t) const;

  std::span<const Token> tokens_;
  const OpTable& ops_;
  std::string file_;
  std::size_t pos_ = 0;
  int anon_ = 0;
};

/// Parses exactly one clause term; the End token may be omitted.
TermPtr parse_term(std::span<const Token> tokens, const OpTable& ops);
TermPtr parse_term(std::string_view text, const OpTable& ops);

/// Anonymous variables print as `_`; internal names start with this prefix.
inline constexpr std::string_view kAnonPrefix = "_#";
inline bool is_anonymous(std::string_view name) { return name.starts_with(kAnonPrefix); }

}  // namespace pljs
