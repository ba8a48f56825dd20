#pragma once

#include <string>

#include "pljs/codegen.hpp"

namespace pljs {

std::string to_string(const Step& step);

/// Stable textual form of a compiled predicate, one line per step.
std::string dump(const ChunkIR& ir);

}  // namespace pljs
