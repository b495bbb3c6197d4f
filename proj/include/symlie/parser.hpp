#pragma once

#include "symlie/polynomial.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace symlie {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Expression grammar:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := rational | 'i' | identifier | '(' expr ')'
//   rational := int ('/' uint)?
// `line` is reported in errors; columns are 1-based within `text`.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring, std::size_t line = 1);

// Same grammar without identifiers.
Scalar parse_scalar(std::string_view text, std::size_t line = 1);

}  // namespace symlie
