#pragma once

#include <string>
#include <string_view>

namespace pljs::js {

/// ECMAScript Number::toString(x) for a double (shortest round-trip digits).
std::string number_to_string(double x);

/// Double-quoted ECMAScript string literal (ES5-safe escapes).
std::string string_literal(std::string_view text);

/// Replaces every character outside [A-Za-z0-9_] with `_` and guards a
/// leading digit; the empty string maps to `_`.
std::string sanitize_identifier(std::string_view text);

}  // namespace pljs::js
