#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace pljs {

enum class OpType { XFX, XFY, YFX, FY, FX, XF, YF };

enum class OpClass { Prefix, Infix, Postfix };

OpClass op_class(OpType type);
std::optional<OpType> parse_op_type(std::string_view text);
std::string_view to_string(OpType type);

struct OpDef {
  int priority = 0;
  OpType type = OpType::XFX;

  // Maximum priorities admitted for the left/right operands.
  int left_max() const;
  int right_max() const;
};

/// Operator table keyed by atom name, one slot per operator class.
class OpTable {
 public:
  /// ISO core operators plus the assertion operators used by foreign
  /// declarations (`pred`, `::`).
  static OpTable defaults();

  /// Priority 0 removes the definition, as with op/3.
  void add(int priority, OpType type, const std::string& name);

  std::optional<OpDef> prefix(std::string_view name) const;
  std::optional<OpDef> infix(std::string_view name) const;
  std::optional<OpDef> postfix(std::string_view name) const;
  bool is_op(std::string_view name) const;

 private:
  struct Entry {
    std::optional<OpDef> prefix, infix, postfix;
  };
  std::map<std::string, Entry, std::less<>> table_;
};

}  // namespace pljs
