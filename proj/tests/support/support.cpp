#include "support.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace pljs::testing {

std::string data_dir() { return PLJS_TEST_DATA; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CompiledProgram compile_texts(const std::vector<std::string>& texts, const CompileOptions& opts) {
  std::vector<SourceFile> files;
  for (std::size_t i = 0; i < texts.size(); ++i)
    files.push_back({"m" + std::to_string(i) + ".pl", texts[i]});
  Diagnostics diags;
  return compile_program(files, diags, opts);
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

namespace {

struct JsToken {
  enum Kind { Ident, Punct, Other } kind;
  std::string text;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$'; }
bool ident_char(char c) { return ident_start(c) || std::isdigit(static_cast<unsigned char>(c)); }

std::vector<JsToken> js_tokens(std::string_view s,
                               const std::vector<std::pair<std::size_t, std::size_t>>& skip) {
  std::vector<JsToken> out;
  std::size_t i = 0;
  while (i < s.size()) {
    bool skipped = false;
    for (const auto& [b, e] : skip)
      if (i >= b && i < e) {
        i = e;
        skipped = true;
      }
    if (skipped) continue;
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (s.substr(i, 2) == "//") {
      while (i < s.size() && s[i] != '\n') ++i;
    } else if (s.substr(i, 2) == "/*") {
      auto e = s.find("*/", i + 2);
      i = e == std::string_view::npos ? s.size() : e + 2;
    } else if (c == '"' || c == '\'' || c == '`') {
      ++i;
      while (i < s.size() && s[i] != c) i += s[i] == '\\' ? 2 : 1;
      ++i;
      out.push_back({JsToken::Other, "\"\""});
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && (ident_char(s[i]) || s[i] == '.')) ++i;
      out.push_back({JsToken::Other, "0"});
    } else if (ident_start(c)) {
      std::size_t b = i;
      while (i < s.size() && ident_char(s[i])) ++i;
      out.push_back({JsToken::Ident, std::string(s.substr(b, i - b))});
    } else {
      out.push_back({JsToken::Punct, std::string(1, c)});
      ++i;
    }
  }
  return out;
}

const std::set<std::string>& js_keywords() {
  static const std::set<std::string> k = {
      "break", "case", "catch", "class", "const", "continue", "debugger", "default", "delete",
      "do", "else", "export", "extends", "finally", "for", "function", "if", "import", "in",
      "instanceof", "let", "new", "return", "super", "switch", "this", "throw", "try", "typeof",
      "var", "void", "while", "with", "yield", "null", "true", "false", "undefined", "arguments"};
  return k;
}

}  // namespace

const std::set<std::string>& js_builtins() {
  static const std::set<std::string> b = {
      "Object", "Array", "Function", "String", "Number", "Boolean", "Symbol", "Math", "JSON",
      "Error", "TypeError", "RangeError", "Map", "Set", "WeakMap", "Promise", "Date", "RegExp",
      "NaN", "Infinity", "isNaN", "isFinite", "parseInt", "parseFloat", "BigInt", "Reflect",
      "globalThis"};
  return b;
}

std::set<std::string> free_globals(std::string_view js,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& skip) {
  auto toks = js_tokens(js, skip);
  std::set<std::string> declared, used;
  auto is_punct = [&](std::size_t i, const char* p) {
    return i < toks.size() && toks[i].kind == JsToken::Punct && toks[i].text == p;
  };
  for (std::size_t i = 0; i < toks.size(); ++i) {
    const auto& t = toks[i];
    if (t.kind != JsToken::Ident) continue;
    if (t.text == "var" || t.text == "let" || t.text == "const") {
      int depth = 0;
      bool expect = true;
      for (std::size_t j = i + 1; j < toks.size(); ++j) {
        const auto& u = toks[j];
        if (u.kind == JsToken::Punct) {
          if (u.text == "(" || u.text == "[" || u.text == "{") ++depth;
          if (u.text == ")" || u.text == "]" || u.text == "}") --depth;
          if (depth < 0 || (depth == 0 && u.text == ";")) break;
          if (depth == 0 && u.text == ",") expect = true;
          continue;
        }
        if (expect && u.kind == JsToken::Ident) declared.insert(u.text);
        expect = false;
      }
      continue;
    }
    if (t.text == "function") {
      std::size_t j = i + 1;
      if (j < toks.size() && toks[j].kind == JsToken::Ident) declared.insert(toks[j++].text);
      if (is_punct(j, "("))
        for (++j; j < toks.size() && !is_punct(j, ")"); ++j)
          if (toks[j].kind == JsToken::Ident) declared.insert(toks[j].text);
      continue;
    }
    if (js_keywords().count(t.text)) continue;
    if (i > 0 && is_punct(i - 1, ".")) continue;
    if (is_punct(i + 1, ":") && i > 0 && (is_punct(i - 1, "{") || is_punct(i - 1, ","))) continue;
    used.insert(t.text);
  }
  std::set<std::string> free;
  for (const auto& u : used)
    if (!declared.count(u)) free.insert(u);
  return free;
}

}  // namespace pljs::testing
