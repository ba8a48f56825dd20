#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pljs/diag.hpp"

namespace pljs {

enum class TokenKind : std::uint8_t { Atom, Var, Int, Float, Str, Punct, End };

std::string_view to_string(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;   // exact source lexeme
  std::string value;  // decoded name/text for atoms, variables, strings, puncts
  std::int64_t ival = 0;
  double fval = 0.0;
  SourcePos pos;
  std::size_t offset = 0;
  /// Whitespace or a comment separates this token from the previous one.
  bool layout_before = false;

  bool is_punct(std::string_view p) const { return kind == TokenKind::Punct && value == p; }
  bool is_atom(std::string_view a) const { return kind == TokenKind::Atom && value == a; }
};

/// Splits Prolog source into tokens. `%` and `/* */` comments are skipped; a
/// `.` followed by layout, `%` or end of input yields an End token.
/// Throws CompileError("lexical error") on unterminated quotes or comments.
std::vector<Token> tokenize(std::string_view source, const std::string& file = {});

}  // namespace pljs
