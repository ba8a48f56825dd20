#include "pljs/parser.hpp"

namespace pljs {

Parser::Parser(std::span<const Token> tokens, const OpTable& ops, std::string file)
    : tokens_(tokens), ops_(ops), file_(std::move(file)) {}

const Token* Parser::peek(std::size_t k) const {
  return pos_ + k < tokens_.size() ? &tokens_[pos_ + k] : nullptr;
}

const Token& Parser::consume() {
  if (done()) fail("unexpected end of input", nullptr);
  return tokens_[pos_++];
}

void Parser::fail(const std::string& msg, const Token* at) const {
  SourcePos p;
  if (at) {
    p = at->pos;
  } else if (!tokens_.empty()) {
    p = tokens_.back().pos;
  }
  throw CompileError("syntax error", msg, p, file_);
}

void Parser::expect_punct(std::string_view p) {
  const Token* t = peek();
  if (!t || !t->is_punct(p)) {
    fail("expected '" + std::string(p) + "'" + (t ? " before '" + t->text + "'" : ""), t);
  }
  ++pos_;
}

void Parser::expect_end() {
  const Token* t = peek();
  if (!t) fail("missing '.' at end of clause", nullptr);
  if (t->kind != TokenKind::End) {
    fail("operator priority clash or missing operator before '" + t->text + "'", t);
  }
  ++pos_;
}

TermPtr Parser::read_term(int max_prec) { return parse(max_prec).term; }

TermPtr Parser::next_clause() {
  if (done()) return nullptr;
  anon_ = 0;
  TermPtr t = parse(1200).term;
  expect_end();
  return t;
}

bool Parser::starts_term(const Token& t) const {
  switch (t.kind) {
    case TokenKind::Var:
    case TokenKind::Int:
    case TokenKind::Float:
    case TokenKind::Str:
      return true;
    case TokenKind::Punct:
      return t.value == "(" || t.value == "[" || t.value == "{";
    case TokenKind::Atom: {
      // A bare infix operator cannot begin an operand.
      const Token* after = &t + 1;
      bool call = after < tokens_.data() + tokens_.size() && after->is_punct("(") &&
                  !after->layout_before;
      if (!call && ops_.infix(t.value) && !ops_.prefix(t.value)) return false;
      return true;
    }
    case TokenKind::End:
      return false;
  }
  return false;
}

Parser::Parsed Parser::parse(int max_prec) {
  Parsed left = parse_primary(max_prec);
  return parse_infix(std::move(left), max_prec);
}

Parser::Parsed Parser::parse_primary(int max_prec) {
  const Token* tp = peek();
  if (!tp) fail("unexpected end of input", nullptr);
  const Token& t = consume();
  switch (t.kind) {
    case TokenKind::Int:
      return {make_int(t.ival, t.pos), 0};
    case TokenKind::Float:
      return {make_float(t.fval, t.pos), 0};
    case TokenKind::Str:
      return {make_str(t.value, t.pos), 0};
    case TokenKind::Var:
      if (t.value == "_") {
        return {make_var(std::string(kAnonPrefix) + std::to_string(anon_++), t.pos), 0};
      }
      return {make_var(t.value, t.pos), 0};
    case TokenKind::End:
      fail("unexpected end of clause", &t);
    case TokenKind::Punct:
      if (t.value == "(") {
        Parsed inner = parse(1200);
        expect_punct(")");
        return {inner.term, 0};
      }
      if (t.value == "[") return {parse_list(t), 0};
      if (t.value == "{") {
        Parsed inner = parse(1200);
        expect_punct("}");
        return {make_compound("{}", {inner.term}, t.pos), 0};
      }
      fail("unexpected '" + t.text + "'", &t);
    case TokenKind::Atom:
      break;
  }

  const std::string& name = t.value;
  const Token* next = peek();

  if (name == "-" && next && !next->layout_before &&
      (next->kind == TokenKind::Int || next->kind == TokenKind::Float)) {
    const Token& num = consume();
    if (num.kind == TokenKind::Int) return {make_int(-num.ival, t.pos), 0};
    return {make_float(-num.fval, t.pos), 0};
  }
  if (next && next->is_punct("(") && !next->layout_before) {
    return {parse_arglist(t), 0};
  }
  if (auto op = ops_.prefix(name); op && next && starts_term(*next)) {
    int pri = op->priority;
    int arg_max = op->right_max();
    if (pri > max_prec) {
      pri = max_prec;
      arg_max = std::min(arg_max, max_prec);
    }
    Parsed arg = parse(arg_max);
    return {make_compound(name, {arg.term}, t.pos), pri};
  }
  return {make_atom(name, t.pos), 0};
}

Parser::Parsed Parser::parse_infix(Parsed left, int max_prec) {
  while (const Token* t = peek()) {
    std::string name;
    if (t->kind == TokenKind::Atom) {
      name = t->value;
    } else if (t->is_punct(",")) {
      name = ",";
    } else if (t->is_punct("|")) {
      name = "|";
    } else {
      break;
    }
    if (auto op = ops_.infix(name)) {
      if (op->priority <= max_prec && left.prec <= op->left_max()) {
        const Token& optok = consume();
        Parsed right = parse(op->right_max());
        std::string functor = name == "|" ? ";" : name;
        left = {make_compound(functor, {left.term, right.term}, optok.pos), op->priority};
        continue;
      }
    }
    if (auto op = ops_.postfix(name)) {
      if (op->priority <= max_prec && left.prec <= op->left_max()) {
        const Token& optok = consume();
        left = {make_compound(name, {left.term}, optok.pos), op->priority};
        continue;
      }
    }
    break;
  }
  return left;
}

TermPtr Parser::parse_arglist(const Token& functor) {
  expect_punct("(");
  std::vector<TermPtr> args;
  args.push_back(parse(999).term);
  while (const Token* t = peek()) {
    if (!t->is_punct(",")) break;
    consume();
    args.push_back(parse(999).term);
  }
  expect_punct(")");
  return make_compound(functor.value, std::move(args), functor.pos);
}

TermPtr Parser::parse_list(const Token&) {
  std::vector<TermPtr> items;
  items.push_back(parse(999).term);
  TermPtr tail;
  while (const Token* t = peek()) {
    if (t->is_punct(",")) {
      consume();
      items.push_back(parse(999).term);
      continue;
    }
    if (t->is_punct("|")) {
      consume();
      tail = parse(999).term;
    }
    break;
  }
  expect_punct("]");
  return make_list(items, tail);
}

TermPtr parse_term(std::span<const Token> tokens, const OpTable& ops) {
  Parser p(tokens, ops);
  TermPtr t = p.read_term(1200);
  if (const Token* rest = p.peek()) {
    if (rest->kind != TokenKind::End) {
      p.fail("operator priority clash or missing operator before '" + rest->text + "'", rest);
    }
    p.consume();
    if (!p.done()) p.fail("unexpected tokens after end of clause", p.peek());
  }
  return t;
}

TermPtr parse_term(std::string_view text, const OpTable& ops) {
  auto tokens = tokenize(text);
  return parse_term(tokens, ops);
}

}  // namespace pljs
