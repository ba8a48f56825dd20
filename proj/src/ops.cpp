#include "pljs/ops.hpp"

namespace pljs {

OpClass op_class(OpType type) {
  switch (type) {
    case OpType::FY:
    case OpType::FX:
      return OpClass::Prefix;
    case OpType::XF:
    case OpType::YF:
      return OpClass::Postfix;
    default:
      return OpClass::Infix;
  }
}

std::optional<OpType> parse_op_type(std::string_view text) {
  if (text == "xfx") return OpType::XFX;
  if (text == "xfy") return OpType::XFY;
  if (text == "yfx") return OpType::YFX;
  if (text == "fy") return OpType::FY;
  if (text == "fx") return OpType::FX;
  if (text == "xf") return OpType::XF;
  if (text == "yf") return OpType::YF;
  return std::nullopt;
}

std::string_view to_string(OpType type) {
  switch (type) {
    case OpType::XFX: return "xfx";
    case OpType::XFY: return "xfy";
    case OpType::YFX: return "yfx";
    case OpType::FY: return "fy";
    case OpType::FX: return "fx";
    case OpType::XF: return "xf";
    case OpType::YF: return "yf";
  }
  return "?";
}

int OpDef::left_max() const {
  switch (type) {
    case OpType::YFX:
    case OpType::YF:
      return priority;
    default:
      return priority - 1;
  }
}

int OpDef::right_max() const {
  switch (type) {
    case OpType::XFY:
    case OpType::FY:
      return priority;
    default:
      return priority - 1;
  }
}

OpTable OpTable::defaults() {
  OpTable t;
  t.add(1200, OpType::XFX, ":-");
  t.add(1200, OpType::XFX, "-->");
  t.add(1200, OpType::FX, ":-");
  t.add(1200, OpType::FX, "?-");
  for (const char* op : {"pred", "dynamic", "discontiguous", "multifile", "meta_predicate"}) {
    t.add(1150, OpType::FX, op);
  }
  t.add(1100, OpType::XFY, ";");
  t.add(1100, OpType::XFY, "|");
  t.add(1050, OpType::XFY, "->");
  t.add(1000, OpType::XFY, ",");
  t.add(978, OpType::XFX, "::");
  t.add(900, OpType::FY, "\\+");
  for (const char* op : {"=", "\\=", "==", "\\==", "@<", "@>", "@=<", "@>=", "=..", "is",
                         "=:=", "=\\=", "<", ">", "=<", ">="}) {
    t.add(700, OpType::XFX, op);
  }
  t.add(200, OpType::XFY, ":");
  for (const char* op : {"+", "-", "/\\", "\\/", "xor"}) t.add(500, OpType::YFX, op);
  for (const char* op : {"*", "/", "//", "rem", "mod", "<<", ">>"}) t.add(400, OpType::YFX, op);
  t.add(200, OpType::XFX, "**");
  t.add(200, OpType::XFY, "^");
  t.add(200, OpType::FY, "-");
  t.add(200, OpType::FY, "+");
  t.add(200, OpType::FY, "\\");
  return t;
}

void OpTable::add(int priority, OpType type, const std::string& name) {
  auto& e = table_[name];
  std::optional<OpDef> def;
  if (priority > 0) def = OpDef{priority, type};
  switch (op_class(type)) {
    case OpClass::Prefix: e.prefix = def; break;
    case OpClass::Infix: e.infix = def; break;
    case OpClass::Postfix: e.postfix = def; break;
  }
}

std::optional<OpDef> OpTable::prefix(std::string_view name) const {
  auto it = table_.find(name);
  return it == table_.end() ? std::nullopt : it->second.prefix;
}

std::optional<OpDef> OpTable::infix(std::string_view name) const {
  auto it = table_.find(name);
  return it == table_.end() ? std::nullopt : it->second.infix;
}

std::optional<OpDef> OpTable::postfix(std::string_view name) const {
  auto it = table_.find(name);
  return it == table_.end() ? std::nullopt : it->second.postfix;
}

bool OpTable::is_op(std::string_view name) const {
  auto it = table_.find(name);
  return it != table_.end() &&
         (it->second.prefix || it->second.infix || it->second.postfix);
}

}  // namespace pljs
