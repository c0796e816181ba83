#pragma once

// Text format for permutation groups:
//   # comment
//   degree N
//   gen (1 2 3)(4 5)
// Cycles are 1-indexed, fixed points omitted; no `gen` lines means the
// trivial group. Errors carry the line number and offending token.

#include "gkv/permutation.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gkv {

struct GroupFile {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::string label;  // first comment line, if any
};

class GroupFileError : public std::runtime_error {
 public:
  GroupFileError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what) {}
};

inline Permutation parse_cycles(const std::string& text, std::size_t degree, int lineno) {
  std::vector<Point> img(degree);
  for (std::size_t i = 0; i < degree; ++i) img[i] = Point(i);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  bool any = false;
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw GroupFileError(lineno, "expected '(' but found '" + text.substr(pos, 1) + "'");
    ++pos;
    std::vector<std::size_t> cyc;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw GroupFileError(lineno, "bad token '" + text.substr(pos, 1) + "' in cycle");
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      unsigned long v = std::stoul(text.substr(start, pos - start));
      if (v < 1 || v > degree)
        throw GroupFileError(lineno, "point " + std::to_string(v) + " out of range 1.." +
                                         std::to_string(degree));
      cyc.push_back(v - 1);
      skip_ws();
    }
    if (pos >= text.size()) throw GroupFileError(lineno, "unterminated cycle");
    ++pos;  // ')'
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      std::size_t from = cyc[k], to = cyc[(k + 1) % cyc.size()];
      if (img[from] != from)
        throw GroupFileError(lineno, "point " + std::to_string(from + 1) + " repeated");
      img[from] = Point(to);
    }
    // a fixed point listed alone, e.g. (3), maps to itself: img unchanged
    skip_ws();
    any = true;
  }
  (void)any;
  return Permutation(std::move(img));
}

inline GroupFile parse_group_stream(std::istream& in) {
  GroupFile gf;
  std::string line;
  int lineno = 0;
  bool have_degree = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      if (gf.label.empty()) gf.label = line.substr(first + 1);
      continue;
    }
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    if (word == "degree") {
      if (have_degree) throw GroupFileError(lineno, "duplicate degree line");
      long d = -1;
      if (!(ls >> d) || d < 1) throw GroupFileError(lineno, "bad degree value");
      gf.degree = static_cast<std::size_t>(d);
      have_degree = true;
    } else if (word == "gen") {
      if (!have_degree) throw GroupFileError(lineno, "gen before degree");
      std::string rest;
      std::getline(ls, rest);
      gf.generators.push_back(parse_cycles(rest, gf.degree, lineno));
    } else {
      throw GroupFileError(lineno, "unknown directive '" + word + "'");
    }
  }
  if (!have_degree) throw GroupFileError(lineno, "missing degree line");
  return gf;
}

inline GroupFile parse_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open group file: " + path);
  return parse_group_stream(in);
}

}  // namespace gkv
