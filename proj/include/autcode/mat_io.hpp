#pragma once

#include <filesystem>
#include <iosfwd>

#include "autcode/code.hpp"

namespace autcode {

// Generator-matrix text format ("MAT"):
//   line 1:  n k
//   then k rows of exactly n characters from {0,1}.
// Blank lines and lines starting with '#' are skipped. Rows need not be independent
// on input; output is always the canonical RREF basis.

BinaryCode read_mat(std::istream& in);
BinaryCode read_mat_file(const std::filesystem::path& path);
void write_mat(std::ostream& out, const BinaryCode& code);

}  // namespace autcode
