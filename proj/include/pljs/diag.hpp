#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace pljs {

struct SourcePos {
  int line = 0;
  int col = 0;

  bool valid() const { return line > 0; }
};

std::string to_string(const SourcePos& pos);

/// Fatal compile-time error. `what()` carries the fully formatted message
/// (`file:line:col: kind: text`); the parts are kept for tests and tools.
class CompileError : public std::runtime_error {
 public:
  CompileError(std::string kind, std::string message, SourcePos pos = {},
               std::string file = {});

  const std::string& kind() const { return kind_; }
  const std::string& message() const { return message_; }
  const SourcePos& pos() const { return pos_; }
  const std::string& file() const { return file_; }

 private:
  std::string kind_;
  std::string message_;
  SourcePos pos_;
  std::string file_;
};

struct Diagnostic {
  std::string file;
  SourcePos pos;
  std::string message;
};

std::string format(const Diagnostic& d);

// Warning sink threaded through the pipeline.
class Diagnostics {
 public:
  void warn(std::string message, SourcePos pos = {}, std::string file = {});

  const std::vector<Diagnostic>& warnings() const { return warnings_; }
  bool empty() const { return warnings_.empty(); }
  void clear() { warnings_.clear(); }

 private:
  std::vector<Diagnostic> warnings_;
};

}  // namespace pljs
