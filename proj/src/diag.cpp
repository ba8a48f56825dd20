#include "pljs/diag.hpp"

namespace pljs {

std::string to_string(const SourcePos& pos) {
  return std::to_string(pos.line) + ":" + std::to_string(pos.col);
}

namespace {

std::string prefix(const std::string& file, const SourcePos& pos) {
  std::string out;
  if (!file.empty()) out += file + ":";
  if (pos.valid()) out += to_string(pos) + ":";
  if (!out.empty()) out += " ";
  return out;
}

}  // namespace

CompileError::CompileError(std::string kind, std::string message, SourcePos pos,
                           std::string file)
    : std::runtime_error(prefix(file, pos) + kind + ": " + message),
      kind_(std::move(kind)),
      message_(std::move(message)),
      pos_(pos),
      file_(std::move(file)) {}

std::string format(const Diagnostic& d) {
  return prefix(d.file, d.pos) + "warning: " + d.message;
}

void Diagnostics::warn(std::string message, SourcePos pos, std::string file) {
  warnings_.push_back({std::move(file), pos, std::move(message)});
}

}  // namespace pljs
