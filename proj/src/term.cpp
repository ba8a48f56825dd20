#include "pljs/term.hpp"

#include <charconv>
#include <cmath>
#include <map>

#include "pljs/ops.hpp"

namespace pljs {

TermPtr make_var(std::string name, SourcePos pos) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Var;
  t->name = std::move(name);
  t->pos = pos;
  return t;
}

TermPtr make_atom(std::string name, SourcePos pos) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Atom;
  t->name = std::move(name);
  t->pos = pos;
  return t;
}

TermPtr make_int(std::int64_t value, SourcePos pos) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Int;
  t->ival = value;
  t->pos = pos;
  return t;
}

TermPtr make_float(double value, SourcePos pos) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Float;
  t->fval = value;
  t->pos = pos;
  return t;
}

TermPtr make_str(std::string text, SourcePos pos) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Str;
  t->name = std::move(text);
  t->pos = pos;
  return t;
}

TermPtr make_compound(std::string name, std::vector<TermPtr> args, SourcePos pos) {
  if (args.empty()) return make_atom(std::move(name), pos);
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Compound;
  t->name = std::move(name);
  t->args = std::move(args);
  t->pos = pos;
  return t;
}

TermPtr make_list(const std::vector<TermPtr>& items, TermPtr tail) {
  TermPtr out = tail ? std::move(tail) : make_atom("[]");
  for (auto it = items.rbegin(); it != items.rend(); ++it) {
    out = make_compound(".", {*it, out}, (*it)->pos);
  }
  return out;
}

PredInd indicator(const Term& t) { return {t.name, t.args.size()}; }

bool structurally_equal(const Term& a, const Term& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case TermKind::Int:
      return a.ival == b.ival;
    case TermKind::Float:
      return a.fval == b.fval || (std::isnan(a.fval) && std::isnan(b.fval));
    case TermKind::Var:
    case TermKind::Atom:
    case TermKind::Str:
      return a.name == b.name;
    case TermKind::Compound:
      if (a.name != b.name || a.args.size() != b.args.size()) return false;
      for (std::size_t i = 0; i < a.args.size(); ++i) {
        if (!structurally_equal(*a.args[i], *b.args[i])) return false;
      }
      return true;
  }
  return false;
}

namespace {

bool variant_rec(const Term& a, const Term& b, std::map<std::string, std::string>& ab,
                 std::map<std::string, std::string>& ba) {
  if (a.kind != b.kind) return false;
  if (a.kind == TermKind::Var) {
    auto [i, fresh_a] = ab.emplace(a.name, b.name);
    auto [j, fresh_b] = ba.emplace(b.name, a.name);
    return i->second == b.name && j->second == a.name && fresh_a == fresh_b;
  }
  if (a.kind != TermKind::Compound) return structurally_equal(a, b);
  if (a.name != b.name || a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!variant_rec(*a.args[i], *b.args[i], ab, ba)) return false;
  }
  return true;
}

}  // namespace

bool is_variant(const Term& a, const Term& b) {
  std::map<std::string, std::string> ab, ba;
  return variant_rec(a, b, ab, ba);
}

void collect_variables(const Term& t, std::vector<std::string>& out) {
  if (t.kind == TermKind::Var) {
    for (const auto& n : out) {
      if (n == t.name) return;
    }
    out.push_back(t.name);
    return;
  }
  for (const auto& a : t.args) collect_variables(*a, out);
}

std::vector<std::string> variables_of(const Term& t) {
  std::vector<std::string> out;
  collect_variables(t, out);
  return out;
}

std::size_t count_var(const Term& t, std::string_view name) {
  if (t.kind == TermKind::Var) return t.name == name ? 1 : 0;
  std::size_t n = 0;
  for (const auto& a : t.args) n += count_var(*a, name);
  return n;
}

namespace {

constexpr std::string_view kSymbolChars = "+-*/\\^<>=~:.?@#&$";

bool is_symbol_char(char c) { return kSymbolChars.find(c) != std::string_view::npos; }
bool is_alnum(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

}  // namespace

bool atom_needs_quotes(std::string_view name) {
  if (name.empty()) return true;
  if (name == "[]" || name == "{}" || name == "!" || name == ";") return false;
  if (name[0] >= 'a' && name[0] <= 'z') {
    for (char c : name) {
      if (!is_alnum(c)) return true;
    }
    return false;
  }
  bool all_symbol = true;
  for (char c : name) all_symbol = all_symbol && is_symbol_char(c);
  if (all_symbol) return name == "." || name.starts_with("/*");
  return true;
}

std::string quote_atom(std::string_view name) {
  if (!atom_needs_quotes(name)) return std::string(name);
  std::string out = "'";
  for (unsigned char c : name) {
    switch (c) {
      case '\'': out += "\\'"; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20 || c == 0x7f) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\x%x\\", c);
          out += buf;
        } else {
          out += static_cast<char>(c);
        }
    }
  }
  out += "'";
  return out;
}

std::string format_float(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, value);
  std::string s(buf, res.ptr);
  auto e = s.find('e');
  std::string mant = e == std::string::npos ? s : s.substr(0, e);
  std::string exp = e == std::string::npos ? "" : s.substr(e);
  if (mant.find('.') == std::string::npos) mant += ".0";
  return mant + exp;
}

namespace {

std::string escape_string(std::string_view text) {
  std::string out = "\"";
  for (unsigned char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\x%x\\", c);
          out += buf;
        } else {
          out += static_cast<char>(c);
        }
    }
  }
  out += "\"";
  return out;
}

class Writer {
 public:
  explicit Writer(const WriteOptions& opts) : opts_(opts) {}

  std::string write(const Term& t, int max_prec) {
    switch (t.kind) {
      case TermKind::Var:
        return t.name.starts_with("_#") ? "_" : t.name;
      case TermKind::Int:
        return std::to_string(t.ival);
      case TermKind::Float:
        return format_float(t.fval);
      case TermKind::Str:
        return opts_.quoted ? escape_string(t.name) : t.name;
      case TermKind::Atom:
        return atom(t.name, max_prec);
      case TermKind::Compound:
        return compound(t, max_prec);
    }
    return {};
  }

 private:
  std::string atom(const std::string& name, int max_prec) {
    std::string text = opts_.quoted ? quote_atom(name) : name;
    if (opts_.ops && max_prec < 1200 && opts_.ops->is_op(name)) {
      int pri = 0;
      if (auto d = opts_.ops->prefix(name)) pri = std::max(pri, d->priority);
      if (auto d = opts_.ops->infix(name)) pri = std::max(pri, d->priority);
      if (pri > max_prec) return "(" + text + ")";
    }
    return text;
  }

  std::string args(const Term& t) {
    std::string out = "(";
    for (std::size_t i = 0; i < t.args.size(); ++i) {
      if (i) out += ",";
      out += write(*t.args[i], 999);
    }
    return out + ")";
  }

  std::string list(const Term& t) {
    std::string out = "[";
    const Term* cur = &t;
    bool first = true;
    while (cur->is_compound(".", 2)) {
      if (!first) out += ",";
      first = false;
      out += write(*cur->args[0], 999);
      cur = cur->args[1].get();
    }
    if (!cur->is_atom("[]")) out += "|" + write(*cur, 999);
    return out + "]";
  }

  static bool alpha_op(const std::string& name) {
    return !name.empty() && is_alnum(name[0]);
  }

  // Joins pieces, inserting a space where the two would lex as one token.
  static std::string join(const std::string& a, const std::string& b) {
    if (a.empty() || b.empty()) return a + b;
    char x = a.back(), y = b.front();
    bool glue = (is_symbol_char(x) && is_symbol_char(y)) || (is_alnum(x) && is_alnum(y));
    return glue ? a + " " + b : a + b;
  }

  std::string compound(const Term& t, int max_prec) {
    const std::string name = opts_.quoted ? quote_atom(t.name) : t.name;
    if (opts_.list_syntax && t.is_compound(".", 2)) return list(t);
    if (!opts_.ops) return name + args(t);
    if (t.is_compound("{}", 1)) return "{" + write(*t.args[0], 1200) + "}";

    if (t.args.size() == 2) {
      if (auto op = opts_.ops->infix(t.name)) {
        std::string lhs = write(*t.args[0], op->left_max());
        std::string rhs = write(*t.args[1], op->right_max());
        std::string out;
        if (t.name == ",") {
          out = lhs + "," + rhs;
        } else if (alpha_op(t.name) || t.name == "->" || t.name == ":-" || t.name == "-->") {
          out = lhs + " " + name + " " + rhs;
        } else {
          out = join(join(lhs, name), rhs);
        }
        return op->priority > max_prec ? "(" + out + ")" : out;
      }
    }
    if (t.args.size() == 1) {
      if (auto op = opts_.ops->prefix(t.name); op && t.name != "-" && t.name != "+") {
        std::string rhs = write(*t.args[0], op->right_max());
        std::string out = alpha_op(t.name) ? name + " " + rhs : join(name, rhs);
        return op->priority > max_prec ? "(" + out + ")" : out;
      }
      if (auto op = opts_.ops->prefix(t.name)) {
        // Signs: keep `- 1` distinct from the literal -1.
        const Term& a = *t.args[0];
        std::string rhs = write(a, op->right_max());
        std::string out = a.is_number() ? name + " " + rhs : join(name, rhs);
        return op->priority > max_prec ? "(" + out + ")" : out;
      }
      if (auto op = opts_.ops->postfix(t.name)) {
        std::string lhs = write(*t.args[0], op->left_max());
        std::string out = join(lhs, name);
        return op->priority > max_prec ? "(" + out + ")" : out;
      }
    }
    return name + args(t);
  }

  const WriteOptions& opts_;
};

}  // namespace

std::string to_string(const Term& t, const WriteOptions& opts) {
  Writer w(opts);
  return w.write(t, 1200);
}

std::string to_canonical(const Term& t) {
  WriteOptions opts;
  opts.quoted = true;
  opts.ops = nullptr;
  opts.list_syntax = true;
  return to_string(t, opts);
}

}  // namespace pljs
