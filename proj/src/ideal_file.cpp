#include "symlie/io.hpp"
#include "symlie/parser.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace symlie {

namespace {

std::string trim(std::string s) {
  s.erase(0, s.find_first_not_of(" \t\r"));
  s.erase(s.find_last_not_of(" \t\r") + 1);
  return s;
}

std::string without_comment(const std::string& line) {
  auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

// Column (1-based) of `part` inside `line`, for error reporting.
std::size_t offset_in(const std::string& line, const std::string& part) {
  auto p = line.find(part);
  return p == std::string::npos ? 0 : p;
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path.string() + "'", 0, 0);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

IdealSpec parse_ideal_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  RingPtr ring;
  bool prime = true;
  bool in_generators = false;
  std::vector<Polynomial> gens;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = without_comment(raw);
    std::string body = trim(line);
    if (body.empty()) continue;
    if (!in_generators) {
      auto colon = body.find(':');
      if (colon == std::string::npos) throw ParseError("expected 'ring:', 'prime:' or 'generators:'", line_no, 1);
      std::string key = trim(body.substr(0, colon));
      std::string value = trim(body.substr(colon + 1));
      if (key == "ring") {
        if (ring) throw ParseError("duplicate 'ring:' header", line_no, 1);
        std::vector<std::string> names;
        std::istringstream vs(value);
        for (std::string name; std::getline(vs, name, ',');) {
          name = trim(name);
          if (!is_identifier(name))
            throw ParseError("invalid variable name '" + name + "'", line_no, offset_in(line, name) + 1);
          names.push_back(name);
        }
        if (names.empty()) throw ParseError("ring declares no variables", line_no, 1);
        try {
          ring = make_ring(names);
        } catch (const std::invalid_argument& e) {
          throw ParseError(e.what(), line_no, 1);
        }
      } else if (key == "prime") {
        if (value == "true") {
          prime = true;
        } else if (value == "false") {
          prime = false;
        } else {
          throw ParseError("expected 'prime: true' or 'prime: false'", line_no, offset_in(line, value) + 1);
        }
      } else if (key == "generators") {
        if (!ring) throw ParseError("'generators:' before 'ring:'", line_no, 1);
        if (!value.empty()) throw ParseError("generators go on the following lines", line_no, 1);
        in_generators = true;
      } else {
        throw ParseError("unknown header '" + key + "'", line_no, 1);
      }
      continue;
    }
    gens.push_back(parse_polynomial(line, ring, line_no));
  }
  if (!ring) throw ParseError("missing 'ring:' header", line_no, 0);
  if (!in_generators) throw ParseError("missing 'generators:' section", line_no, 0);
  return make_ideal(ring, std::move(gens), prime);
}

IdealSpec read_ideal_file(const std::filesystem::path& path) { return parse_ideal_text(read_text_file(path)); }

std::string format_ideal(const IdealSpec& ideal) {
  std::string out = "ring: ";
  for (std::size_t i = 0; i < ideal.ring->arity(); ++i) out += (i ? ", " : "") + ideal.ring->name(i);
  out += "\n";
  if (!ideal.asserted_prime) out += "prime: false\n";
  out += "generators:\n";
  for (const auto& g : ideal.generators) out += g.to_string() + "\n";
  return out;
}

Matrix parse_matrix_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  std::vector<Vector> rows;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = without_comment(raw);
    if (trim(line).empty()) continue;
    Vector row;
    std::size_t start = 0;
    while (true) {
      std::size_t comma = line.find(',', start);
      std::string cell = line.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      try {
        row.push_back(parse_scalar(cell, line_no));
      } catch (const ParseError& e) {
        throw ParseError(std::string(e.what()).substr(std::string(e.what()).find(": ") + 2), line_no,
                         start + e.column());
      }
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError("row has " + std::to_string(row.size()) + " entries, expected " +
                           std::to_string(rows.front().size()),
                       line_no, 1);
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("matrix file has no rows", line_no, 0);
  if (rows.size() != rows.front().size())
    throw ParseError("matrix must be square (" + std::to_string(rows.size()) + " rows, " +
                         std::to_string(rows.front().size()) + " columns)",
                     line_no, 0);
  return Matrix::from_rows(rows);
}

Matrix read_matrix_file(const std::filesystem::path& path) { return parse_matrix_text(read_text_file(path)); }

std::vector<Matrix> parse_matrix_list_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::string block;
  bool has_rows = false;
  std::vector<Matrix> out;
  // Blocks keep their leading newlines so errors report file line numbers.
  auto flush = [&] {
    if (has_rows) out.push_back(parse_matrix_text(block));
    block.assign(std::count(block.begin(), block.end(), '\n'), '\n');
    has_rows = false;
  };
  while (std::getline(in, raw)) {
    if (trim(raw).empty()) {
      flush();
      block += '\n';
      continue;
    }
    if (!trim(without_comment(raw)).empty()) has_rows = true;
    block += raw;
    block += '\n';
  }
  flush();
  if (out.empty()) throw ParseError("matrix list has no matrices", 0, 0);
  return out;
}

std::vector<Matrix> read_matrix_list_file(const std::filesystem::path& path) {
  return parse_matrix_list_text(read_text_file(path));
}

}  // namespace symlie
