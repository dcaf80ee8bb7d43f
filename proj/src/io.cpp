#include "levi/io.hpp"

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <tuple>
#include <vector>

#include "levi/error.hpp"

namespace levi {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
  std::string rest;  // text after the first token, trimmed
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    ++number;
    const std::string line = trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    if (line.empty() || line[0] == '#') continue;
    Line l{number, {}, {}};
    std::istringstream in(line);
    for (std::string tok; in >> tok;) l.tokens.push_back(tok);
    const auto sp = line.find_first_of(" \t");
    if (sp != std::string::npos) l.rest = trim(std::string_view(line).substr(sp));
    out.push_back(std::move(l));
  }
  return out;
}

[[noreturn]] void fail(const Line& l, const std::string& what) {
  throw ParseError("line " + std::to_string(l.number) + ": " + what);
}

int parse_int(const Line& l, const std::string& tok) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(tok, &used);
  } catch (const std::exception&) {
    fail(l, "not an integer: '" + tok + "'");
  }
  if (used != tok.size() || v < -1000000000L || v > 1000000000L) fail(l, "not an integer: '" + tok + "'");
  return static_cast<int>(v);
}

int parse_index(const Line& l, const std::string& tok, int n) {
  const int v = parse_int(l, tok);
  if (v < 1 || v > n) fail(l, "index " + tok + " out of range 1.." + std::to_string(n));
  return v - 1;
}

Rational parse_coefficient(const Line& l, const std::string& tok) {
  try {
    return parse_rational(tok);
  } catch (const ParseError& e) {
    fail(l, e.what());
  }
}

void expect_header(const std::vector<Line>& lines, const std::string& kind) {
  if (lines.empty()) throw ParseError("empty input, expected '" + kind + " 1'");
  const Line& h = lines[0];
  if (h.tokens.size() != 2 || h.tokens[0] != kind) fail(h, "expected header '" + kind + " 1'");
  if (h.tokens[1] != "1") fail(h, "unsupported " + kind + " version " + h.tokens[1]);
}

// "dim n" or, when allowed, "dim r c".
std::pair<int, int> expect_dim(const std::vector<Line>& lines, bool allow_rect) {
  if (lines.size() < 2) throw ParseError("missing 'dim' line");
  const Line& l = lines[1];
  if (l.tokens.empty() || l.tokens[0] != "dim") fail(l, "expected 'dim'");
  if (l.tokens.size() == 2) {
    const int n = parse_int(l, l.tokens[1]);
    if (n < 0) fail(l, "negative dimension");
    return {n, n};
  }
  if (allow_rect && l.tokens.size() == 3) {
    const int r = parse_int(l, l.tokens[1]);
    const int c = parse_int(l, l.tokens[2]);
    if (r < 0 || c < 0) fail(l, "negative dimension");
    return {r, c};
  }
  fail(l, "malformed 'dim' line");
}

std::string rational_token(const Rational& q) { return to_string(q); }

// Triplet body shared by sl2act and linmap: TAG i j p/q.
std::vector<Matrix> parse_triplets(const std::vector<Line>& lines, const std::string& tags, int rows, int cols) {
  std::vector<Matrix> out(tags.size(), Matrix(rows, cols));
  std::set<std::tuple<char, int, int>> seen;
  for (std::size_t n = 2; n < lines.size(); ++n) {
    const Line& l = lines[n];
    const auto tag = l.tokens[0].size() == 1 ? tags.find(l.tokens[0][0]) : std::string::npos;
    if (tag == std::string::npos) fail(l, "unexpected '" + l.tokens[0] + "'");
    if (l.tokens.size() != 4) fail(l, "expected '" + l.tokens[0] + " i j p/q'");
    const int i = parse_index(l, l.tokens[1], rows);
    const int j = parse_index(l, l.tokens[2], cols);
    const Rational c = parse_coefficient(l, l.tokens[3]);
    if (!seen.insert({tags[tag], i, j}).second) fail(l, "duplicate entry");
    out[tag].set(i, j, c);
  }
  return out;
}

void write_triplets(std::ostringstream& out, char tag, const Matrix& m) {
  for (int r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r)) out << tag << ' ' << r + 1 << ' ' << c + 1 << ' ' << rational_token(v) << '\n';
}

}  // namespace

LieAlgebra parse_lieconst(std::string_view text) {
  const auto lines = split_lines(text);
  expect_header(lines, "lieconst");
  const int n = expect_dim(lines, false).first;
  LieAlgebra L(n);
  std::set<std::tuple<int, int, int>> seen;
  bool named = false, graded = false, constants = false;
  for (std::size_t idx = 2; idx < lines.size(); ++idx) {
    const Line& l = lines[idx];
    const std::string& key = l.tokens[0];
    if (key == "name") {
      if (named || constants) fail(l, "'name' must precede the constants and appear once");
      L.set_name(l.rest);
      named = true;
    } else if (key == "grade") {
      if (graded || constants) fail(l, "'grade' must precede the constants and appear once");
      if (static_cast<int>(l.tokens.size()) != n + 1) fail(l, "expected " + std::to_string(n) + " grades");
      std::vector<int> g;
      for (std::size_t t = 1; t < l.tokens.size(); ++t) g.push_back(parse_int(l, l.tokens[t]));
      L.set_grade(std::move(g));
      graded = true;
    } else if (key == "c") {
      if (l.tokens.size() != 5) fail(l, "expected 'c i j k p/q'");
      const int i = parse_index(l, l.tokens[1], n);
      const int j = parse_index(l, l.tokens[2], n);
      const int k = parse_index(l, l.tokens[3], n);
      if (i >= j) fail(l, "requires i < j");
      const Rational c = parse_coefficient(l, l.tokens[4]);
      if (!seen.insert({i, j, k}).second) fail(l, "duplicate constant");
      L.add_structure_constant(i, j, k, c);
      constants = true;
    } else {
      fail(l, "unexpected '" + key + "'");
    }
  }
  return L;
}

std::string write_lieconst(const LieAlgebra& L) {
  std::ostringstream out;
  out << "lieconst 1\ndim " << L.dim() << '\n';
  if (!L.name().empty()) out << "name " << L.name() << '\n';
  if (L.grade()) {
    out << "grade";
    for (int g : *L.grade()) out << ' ' << g;
    out << '\n';
  }
  for (const auto& c : L.constants())
    out << "c " << c.i + 1 << ' ' << c.j + 1 << ' ' << c.k + 1 << ' ' << rational_token(c.c) << '\n';
  return out.str();
}

Sl2Action parse_sl2act(std::string_view text) {
  const auto lines = split_lines(text);
  expect_header(lines, "sl2act");
  const int n = expect_dim(lines, false).first;
  auto m = parse_triplets(lines, "HEF", n, n);
  try {
    return Sl2Action(m[0], m[1], m[2]);
  } catch (const Error& e) {
    throw ParseError(std::string("sl2 relations fail: ") + e.what());
  }
}

std::string write_sl2act(const Sl2Action& a) {
  std::ostringstream out;
  out << "sl2act 1\ndim " << a.dim() << '\n';
  write_triplets(out, 'H', a.H());
  write_triplets(out, 'E', a.E());
  write_triplets(out, 'F', a.F());
  return out.str();
}

Matrix parse_linmap(std::string_view text) {
  const auto lines = split_lines(text);
  expect_header(lines, "linmap");
  const auto [r, c] = expect_dim(lines, true);
  return parse_triplets(lines, "M", r, c)[0];
}

std::string write_linmap(const Matrix& m) {
  std::ostringstream out;
  out << "linmap 1\ndim " << m.rows();
  if (m.cols() != m.rows()) out << ' ' << m.cols();
  out << '\n';
  write_triplets(out, 'M', m);
  return out.str();
}

std::string read_text(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Error("cannot write '" + path + "'");
}

}  // namespace levi
