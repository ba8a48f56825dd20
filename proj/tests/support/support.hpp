#pragma once

#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pljs/driver.hpp"

namespace pljs::testing {

/// Directory holding the fixture programs and goldens.
std::string data_dir();

std::string slurp(const std::string& path);

/// Compiles in-memory module texts; module files are named `m<i>.pl`.
CompiledProgram compile_texts(const std::vector<std::string>& texts,
                              const CompileOptions& opts = {});

/// Identifiers a JS module reads from the global scope: every identifier
/// reference that is not a property name, not declared by `var`,
/// `function` or a parameter list anywhere in the source, and not a
/// keyword. Byte ranges in `skip` are ignored.
std::set<std::string> free_globals(std::string_view js,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& skip = {});

/// ECMAScript globals a module may read without importing them.
const std::set<std::string>& js_builtins();

std::vector<std::string> sorted(std::vector<std::string> v);

}  // namespace pljs::testing
