#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gpq {

// Domain failure carrying a stable, machine-readable code such as
// "division-by-zero" or "not-admissible".
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// Malformed input text. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error("parse-error", what), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool ok, const std::string& code, const std::string& what) {
  if (!ok) throw Error(code, what);
}

}  // namespace gpq
