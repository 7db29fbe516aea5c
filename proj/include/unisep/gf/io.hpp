#pragma once

#include <iosfwd>
#include <string>

#include "unisep/gf/matrix.hpp"

namespace unisep::gf {

// Text format: "p nrows ncols" on the first line, then one line per row with
// the residues separated by single spaces. Lines end with LF.
void write_matrix(std::ostream& os, const Matrix& m);
std::string to_text(const Matrix& m);

/// Throws ParseError on malformed input or out-of-range residues.
Matrix read_matrix(std::istream& is);
Matrix from_text(const std::string& text);

}  // namespace unisep::gf
