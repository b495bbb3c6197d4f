#pragma once

#include "symlie/graded.hpp"
#include "symlie/matrix.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace symlie {

// Throws ParseError (line 0) when the file cannot be read.
std::string read_text_file(const std::filesystem::path& path);

// Ideal file:
//   ring: x1, x2, ...
//   prime: true|false          (optional)
//   generators:
//   <one expression per line>
// '#' starts a comment. Syntax problems raise ParseError; a valid file
// describing an invalid ideal raises PreconditionError.
IdealSpec parse_ideal_text(std::string_view text);
IdealSpec read_ideal_file(const std::filesystem::path& path);
std::string format_ideal(const IdealSpec& ideal);

// Matrix file: one row per line, comma-separated scalar expressions.
Matrix parse_matrix_text(std::string_view text);
Matrix read_matrix_file(const std::filesystem::path& path);

// Several matrices in the matrix format, separated by blank lines.
std::vector<Matrix> parse_matrix_list_text(std::string_view text);
std::vector<Matrix> read_matrix_list_file(const std::filesystem::path& path);

}  // namespace symlie
