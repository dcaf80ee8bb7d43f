#pragma once

#include <string>
#include <string_view>

#include "levi/lie_algebra.hpp"
#include "levi/matrix.hpp"
#include "levi/sl2.hpp"

namespace levi {

// Text formats. Indices are 1-based in files and 0-based everywhere else.
// Blank lines and lines starting with '#' are ignored on input. The writers
// produce the canonical form: header, dim, optional name and grade, then the
// entries sorted by index, rationals as p/q in lowest terms (p alone when
// q = 1). All readers throw ParseError on malformed input.

/// lieconst 1
/// dim n
/// name <text>          (optional)
/// grade g1 ... gn      (optional)
/// c i j k p/q          i < j, meaning [b_i, b_j] += p/q b_k
LieAlgebra parse_lieconst(std::string_view text);
std::string write_lieconst(const LieAlgebra& L);

/// sl2act 1, dim n, then H|E|F i j p/q. The sl2 relations are checked.
Sl2Action parse_sl2act(std::string_view text);
std::string write_sl2act(const Sl2Action& a);

/// linmap 1, then "dim n" (square) or "dim r c", then M i j p/q.
Matrix parse_linmap(std::string_view text);
std::string write_linmap(const Matrix& m);

/// Whole file, or standard input for "-". Throws Error when unreadable.
std::string read_text(const std::string& path);
/// Throws Error when the file cannot be written.
void write_text(const std::string& path, const std::string& text);

}  // namespace levi
