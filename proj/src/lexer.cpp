#include "pljs/lexer.hpp"

#include <charconv>
#include <cstdlib>

namespace pljs {

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::Atom: return "atom";
    case TokenKind::Var: return "variable";
    case TokenKind::Int: return "integer";
    case TokenKind::Float: return "float";
    case TokenKind::Str: return "string";
    case TokenKind::Punct: return "punct";
    case TokenKind::End: return "end";
  }
  return "?";
}

namespace {

constexpr std::string_view kSymbolChars = "+-*/\\^<>=~:.?@#&$";

bool is_symbol(char c) { return kSymbolChars.find(c) != std::string_view::npos; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_upper(char c) { return (c >= 'A' && c <= 'Z') || c == '_'; }
bool is_alnum(char c) {
  return is_lower(c) || is_upper(c) || is_digit(c) || static_cast<unsigned char>(c) >= 0x80;
}
bool is_layout(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xc0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3f));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xe0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3f));
    out += static_cast<char>(0x80 | (cp & 0x3f));
  } else {
    out += static_cast<char>(0xf0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3f));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3f));
    out += static_cast<char>(0x80 | (cp & 0x3f));
  }
}

class Lexer {
 public:
  Lexer(std::string_view src, const std::string& file) : src_(src), file_(file) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      bool layout = skip_layout();
      if (at_end()) break;
      Token tok = next_token();
      tok.layout_before = layout;
      out.push_back(std::move(tok));
    }
    return out;
  }

 private:
  bool at_end() const { return i_ >= src_.size(); }
  char peek(std::size_t k = 0) const { return i_ + k < src_.size() ? src_[i_ + k] : '\0'; }

  void advance() {
    if (src_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  SourcePos pos() const { return {line_, col_}; }

  [[noreturn]] void fail(const std::string& msg, SourcePos at) const {
    throw CompileError("lexical error", msg, at, file_);
  }

  bool skip_layout() {
    bool any = false;
    while (!at_end()) {
      char c = peek();
      if (is_layout(c)) {
        advance();
        any = true;
      } else if (c == '%') {
        while (!at_end() && peek() != '\n') advance();
        any = true;
      } else if (c == '/' && peek(1) == '*') {
        SourcePos start = pos();
        advance();
        advance();
        while (!(peek() == '*' && peek(1) == '/')) {
          if (at_end()) fail("unterminated block comment", start);
          advance();
        }
        advance();
        advance();
        any = true;
      } else {
        break;
      }
    }
    return any;
  }

  Token make(TokenKind kind, std::size_t start, SourcePos at) const {
    Token t;
    t.kind = kind;
    t.offset = start;
    t.pos = at;
    t.text = std::string(src_.substr(start, i_ - start));
    return t;
  }

  Token next_token() {
    const std::size_t start = i_;
    const SourcePos at = pos();
    const char c = peek();

    if (is_digit(c)) return number(start, at);
    if (is_upper(c)) {
      while (!at_end() && is_alnum(peek())) advance();
      Token t = make(TokenKind::Var, start, at);
      t.value = t.text;
      return t;
    }
    if (is_lower(c) || static_cast<unsigned char>(c) >= 0x80) {
      while (!at_end() && is_alnum(peek())) advance();
      Token t = make(TokenKind::Atom, start, at);
      t.value = t.text;
      return t;
    }
    if (c == '\'') {
      std::string v = quoted('\'', at);
      Token t = make(TokenKind::Atom, start, at);
      t.value = std::move(v);
      return t;
    }
    if (c == '"') {
      std::string v = quoted('"', at);
      Token t = make(TokenKind::Str, start, at);
      t.value = std::move(v);
      return t;
    }
    if (c == '`') fail("back-quoted text is not supported", at);

    if (c == '[' || c == '{') {
      const char close = c == '[' ? ']' : '}';
      std::size_t j = i_ + 1;
      while (j < src_.size() && is_layout(src_[j])) ++j;
      if (j < src_.size() && src_[j] == close) {
        while (i_ <= j) advance();
        Token t = make(TokenKind::Atom, start, at);
        t.value = c == '[' ? "[]" : "{}";
        return t;
      }
    }
    if (c == '(' || c == ')' || c == '[' || c == ']' || c == '{' || c == '}' || c == ',' ||
        c == '|') {
      advance();
      Token t = make(TokenKind::Punct, start, at);
      t.value = std::string(1, c);
      return t;
    }
    if (c == '!' || c == ';') {
      advance();
      Token t = make(TokenKind::Atom, start, at);
      t.value = std::string(1, c);
      return t;
    }
    if (is_symbol(c)) {
      if (c == '.') {
        char n = peek(1);
        if (n == '\0' || is_layout(n) || n == '%') {
          advance();
          Token t = make(TokenKind::End, start, at);
          t.value = ".";
          return t;
        }
      }
      while (!at_end() && is_symbol(peek())) advance();
      Token t = make(TokenKind::Atom, start, at);
      t.value = t.text;
      return t;
    }
    fail(std::string("unexpected character '") + c + "'", at);
  }

  Token number(std::size_t start, SourcePos at) {
    if (peek() == '0' && peek(1) == '\'') {
      advance();
      advance();
      std::uint32_t code = 0;
      if (at_end()) fail("incomplete character code", at);
      if (peek() == '\\') {
        std::string tmp;
        escape(tmp, at);
        code = decode_first(tmp);
      } else if (peek() == '\'' && peek(1) == '\'') {
        advance();
        advance();
        code = '\'';
      } else {
        std::string tmp;
        take_utf8(tmp);
        code = decode_first(tmp);
      }
      Token t = make(TokenKind::Int, start, at);
      t.ival = code;
      return t;
    }
    if (peek() == '0' && (peek(1) == 'x' || peek(1) == 'o' || peek(1) == 'b')) {
      const char kind = peek(1);
      const int base = kind == 'x' ? 16 : kind == 'o' ? 8 : 2;
      auto valid = [&](char d) {
        if (base == 16) return is_digit(d) || (d >= 'a' && d <= 'f') || (d >= 'A' && d <= 'F');
        return d >= '0' && d < static_cast<char>('0' + base);
      };
      if (valid(peek(2))) {
        advance();
        advance();
        std::size_t dstart = i_;
        while (!at_end() && valid(peek())) advance();
        Token t = make(TokenKind::Int, start, at);
        auto digits = src_.substr(dstart, i_ - dstart);
        auto r = std::from_chars(digits.data(), digits.data() + digits.size(), t.ival, base);
        if (r.ec != std::errc()) fail("integer literal out of range", at);
        return t;
      }
    }
    while (!at_end() && is_digit(peek())) advance();
    bool is_float = false;
    if (peek() == '.' && is_digit(peek(1))) {
      is_float = true;
      advance();
      while (!at_end() && is_digit(peek())) advance();
    }
    if ((peek() == 'e' || peek() == 'E') &&
        (is_digit(peek(1)) || ((peek(1) == '+' || peek(1) == '-') && is_digit(peek(2))))) {
      is_float = true;
      advance();
      if (peek() == '+' || peek() == '-') advance();
      while (!at_end() && is_digit(peek())) advance();
    }
    Token t = make(is_float ? TokenKind::Float : TokenKind::Int, start, at);
    if (is_float) {
      t.fval = std::strtod(t.text.c_str(), nullptr);
    } else {
      auto r = std::from_chars(t.text.data(), t.text.data() + t.text.size(), t.ival);
      if (r.ec != std::errc()) fail("integer literal out of range", at);
    }
    return t;
  }

  static std::uint32_t decode_first(const std::string& s) {
    if (s.empty()) return 0;
    auto b = static_cast<unsigned char>(s[0]);
    if (b < 0x80) return b;
    int extra = b >= 0xf0 ? 3 : b >= 0xe0 ? 2 : 1;
    std::uint32_t cp = b & (0x3f >> extra);
    for (int k = 1; k <= extra && k < static_cast<int>(s.size()); ++k) {
      cp = (cp << 6) | (static_cast<unsigned char>(s[k]) & 0x3f);
    }
    return cp;
  }

  void take_utf8(std::string& out) {
    auto b = static_cast<unsigned char>(peek());
    int len = b >= 0xf0 ? 4 : b >= 0xe0 ? 3 : b >= 0xc0 ? 2 : 1;
    for (int k = 0; k < len && !at_end(); ++k) {
      out += peek();
      advance();
    }
  }

  // Consumes an escape sequence starting at the backslash.
  void escape(std::string& out, SourcePos at) {
    advance();  // backslash
    if (at_end()) fail("unterminated escape sequence", at);
    char e = peek();
    switch (e) {
      case 'n': out += '\n'; advance(); return;
      case 't': out += '\t'; advance(); return;
      case 'r': out += '\r'; advance(); return;
      case 'a': out += '\a'; advance(); return;
      case 'b': out += '\b'; advance(); return;
      case 'f': out += '\f'; advance(); return;
      case 'v': out += '\v'; advance(); return;
      case '0':
      case '1':
      case '2':
      case '3':
      case '4':
      case '5':
      case '6':
      case '7': {
        std::uint32_t v = 0;
        while (peek() >= '0' && peek() <= '7') {
          v = v * 8 + static_cast<std::uint32_t>(peek() - '0');
          advance();
        }
        if (peek() == '\\') advance();
        append_utf8(out, v);
        return;
      }
      case 'x': {
        advance();
        std::uint32_t v = 0;
        auto hex = [](char d) {
          if (is_digit(d)) return d - '0';
          if (d >= 'a' && d <= 'f') return d - 'a' + 10;
          if (d >= 'A' && d <= 'F') return d - 'A' + 10;
          return -1;
        };
        while (hex(peek()) >= 0) {
          v = v * 16 + static_cast<std::uint32_t>(hex(peek()));
          advance();
        }
        if (peek() == '\\') advance();
        append_utf8(out, v);
        return;
      }
      case '\n':
        advance();
        return;
      case '\\':
      case '\'':
      case '"':
      case '`':
        out += e;
        advance();
        return;
      default:
        fail(std::string("unknown escape sequence \\") + e, at);
    }
  }

  std::string quoted(char q, SourcePos at) {
    advance();
    std::string out;
    while (true) {
      if (at_end()) fail(q == '"' ? "unterminated string" : "unterminated quoted atom", at);
      char c = peek();
      if (c == q) {
        if (peek(1) == q) {
          out += q;
          advance();
          advance();
          continue;
        }
        advance();
        return out;
      }
      if (c == '\\') {
        escape(out, at);
        continue;
      }
      out += c;
      advance();
    }
  }

  std::string_view src_;
  const std::string& file_;
  std::size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

std::vector<Token> tokenize(std::string_view source, const std::string& file) {
  return Lexer(source, file).run();
}

}  // namespace pljs
