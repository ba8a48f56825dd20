#include "pljs/builtins.hpp"

#include <map>

#include "pljs/normalize.hpp"

namespace pljs {

std::optional<InlineOp> inline_op(const PredInd& p) {
  static const std::map<PredInd, InlineOp> table = {
      {{"=", 2}, InlineOp::Unify},
      {{"is", 2}, InlineOp::Is},
      {{"<", 2}, InlineOp::Lt},
      {{">", 2}, InlineOp::Gt},
      {{"=<", 2}, InlineOp::Le},
      {{">=", 2}, InlineOp::Ge},
      {{"=:=", 2}, InlineOp::ArEq},
      {{"=\\=", 2}, InlineOp::ArNe},
      {{"var", 1}, InlineOp::Var},
      {{"nonvar", 1}, InlineOp::Nonvar},
      {{"true", 0}, InlineOp::True},
      {{"fail", 0}, InlineOp::Fail},
      {{"false", 0}, InlineOp::Fail},
      {{"!", 0}, InlineOp::Cut},
      {{std::string(kGetCut), 1}, InlineOp::GetCut},
      {{std::string(kCutTo), 1}, InlineOp::CutTo},
  };
  auto it = table.find(p);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

std::string_view inline_name(InlineOp op) {
  switch (op) {
    case InlineOp::Unify: return "=";
    case InlineOp::Is: return "is";
    case InlineOp::Lt: return "<";
    case InlineOp::Gt: return ">";
    case InlineOp::Le: return "=<";
    case InlineOp::Ge: return ">=";
    case InlineOp::ArEq: return "=:=";
    case InlineOp::ArNe: return "=\\=";
    case InlineOp::Var: return "var";
    case InlineOp::Nonvar: return "nonvar";
    case InlineOp::True: return "true";
    case InlineOp::Fail: return "fail";
    case InlineOp::Cut: return "!";
    case InlineOp::GetCut: return kGetCut;
    case InlineOp::CutTo: return kCutTo;
  }
  return "?";
}

const std::vector<BuiltinModule>& builtin_modules() {
  static const std::vector<BuiltinModule> mods = [] {
    std::vector<BuiltinModule> out;
    BuiltinModule tb{"term_basic", {}};
    for (const char* n : {"==", "\\==", "\\=", "@<", "@>", "@=<", "@>=", "=", "=.."}) {
      tb.exports.push_back({n, 2});
    }
    for (const char* n : {"atom", "number", "integer", "float", "atomic", "compound", "callable",
                          "is_list", "var", "nonvar"}) {
      tb.exports.push_back({n, 1});
    }
    tb.exports.push_back({"compare", 3});
    tb.exports.push_back({"functor", 3});
    tb.exports.push_back({"arg", 3});
    tb.exports.push_back({"copy_term", 2});
    for (std::size_t n = 1; n <= 8; ++n) tb.exports.push_back({"call", n});
    for (const char* n : {"true", "fail", "false", "halt", "!"}) tb.exports.push_back({n, 0});
    out.push_back(std::move(tb));

    BuiltinModule ar{"arithmetic", {}};
    for (const char* n : {"is", "<", ">", "=<", ">=", "=:=", "=\\="}) ar.exports.push_back({n, 2});
    ar.exports.push_back({"between", 3});
    out.push_back(std::move(ar));

    out.push_back({"io", {{"write", 1}, {"nl", 0}}});
    out.push_back({"attributes", {{"put_attr", 3}, {"get_attr", 3}, {"del_attr", 2}}});
    return out;
  }();
  return mods;
}

bool is_builtin_module(std::string_view name) {
  for (const auto& m : builtin_modules()) {
    if (m.name == name) return true;
  }
  return false;
}

std::string_view builtin_module_of(const PredInd& pred) {
  for (const auto& m : builtin_modules()) {
    for (const auto& e : m.exports) {
      if (e == pred) return m.name;
    }
  }
  return {};
}

bool is_reserved_module(std::string_view name) {
  static const char* roots[] = {"rt",      "term_base", "var_base",  "nonvar_base", "t_var",
                                "t_num",   "t_string",  "t_struct",  "t_foreign",   "t_attrvar"};
  for (const char* r : roots) {
    if (name == r) return true;
  }
  return is_builtin_module(name);
}

}  // namespace pljs
