#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hgg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define HGG_DEFINE_ERROR(Name)           \
  class Name : public Error {            \
   public:                               \
    using Error::Error;                  \
  };

HGG_DEFINE_ERROR(InvalidArgument)
HGG_DEFINE_ERROR(NotGaloisClosed)
HGG_DEFINE_ERROR(NotCyclotomicProduct)
HGG_DEFINE_ERROR(SharedEntry)
HGG_DEFINE_ERROR(InvalidPair)
HGG_DEFINE_ERROR(ZeroDifference)
HGG_DEFINE_ERROR(NotMonic)
HGG_DEFINE_ERROR(Singular)
HGG_DEFINE_ERROR(UnboundName)
HGG_DEFINE_ERROR(OrbitDegenerate)
HGG_DEFINE_ERROR(InvarianceFailed)
HGG_DEFINE_ERROR(SolutionSpaceNotLine)
HGG_DEFINE_ERROR(Degenerate)
HGG_DEFINE_ERROR(UnknownLabel)

#undef HGG_DEFINE_ERROR

/// Malformed textual input. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0) return "parse error: " + what;
    return "parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace hgg
