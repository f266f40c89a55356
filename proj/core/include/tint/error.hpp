#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tint {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input data or configuration. `file`/`line` are set when the problem
// can be traced to a location in an input file (line is 1-based, 0 = unknown).
class InputError : public Error {
 public:
  explicit InputError(const std::string& message, std::string file = {},
                      std::size_t line = 0)
      : Error(format(message, file, line)),
        message_(message),
        file_(std::move(file)),
        line_(line) {}

  const std::string& message() const noexcept { return message_; }
  const std::string& file() const noexcept { return file_; }
  std::size_t line() const noexcept { return line_; }

 private:
  static std::string format(const std::string& message, const std::string& file,
                            std::size_t line) {
    if (file.empty()) return message;
    if (line == 0) return file + ": " + message;
    return file + ":" + std::to_string(line) + ": " + message;
  }

  std::string message_;
  std::string file_;
  std::size_t line_;
};

}  // namespace tint
