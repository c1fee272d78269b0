#include "autcode/mat_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "autcode/errors.hpp"

namespace autcode {

namespace {

bool next_content_line(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    line = line.substr(first, line.find_last_not_of(" \t") - first + 1);
    return true;
  }
  return false;
}

}  // namespace

BinaryCode read_mat(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!next_content_line(in, line, line_no)) throw ParseError("MAT: missing header line");
  std::istringstream header(line);
  long long n = -1;
  long long k = -1;
  std::string extra;
  if (!(header >> n >> k) || (header >> extra) || n <= 0 || k < 0) {
    throw ParseError("MAT line " + std::to_string(line_no) + ": header must be 'n k' with n > 0, k >= 0");
  }
  std::vector<BitVector> rows;
  for (long long r = 0; r < k; ++r) {
    if (!next_content_line(in, line, line_no)) {
      throw ParseError("MAT: expected " + std::to_string(k) + " rows, found " + std::to_string(r));
    }
    if (line.size() != static_cast<std::size_t>(n)) {
      throw ParseError("MAT line " + std::to_string(line_no) + ": expected " + std::to_string(n) +
                       " characters, found " + std::to_string(line.size()));
    }
    try {
      rows.push_back(BitVector::from_string(line));
    } catch (const ParseError& e) {
      throw ParseError("MAT line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (next_content_line(in, line, line_no)) {
    throw ParseError("MAT line " + std::to_string(line_no) + ": unexpected content after the last row");
  }
  return BinaryCode::span(static_cast<std::size_t>(n), rows);
}

BinaryCode read_mat_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  return read_mat(in);
}

void write_mat(std::ostream& out, const BinaryCode& code) {
  out << code.length() << ' ' << code.dimension() << '\n';
  for (const auto& row : code.basis()) out << row.to_string() << '\n';
}

}  // namespace autcode
