#pragma once

#include <iosfwd>
#include <string>

#include "codeal/code.hpp"

namespace codeal {

/// Code file format: UTF-8 text, '#' starts a comment line, the first
/// non-comment line is "p k n", followed by k lines of n integers in [0, p)
/// separated by single spaces. Throws ParseError with a 1-based line number,
/// or the code-model validation errors.
LinearCode read_code(std::istream& in);
LinearCode read_code_file(const std::string& path);

/// The same format back out (no comments).
std::string write_code(const LinearCode& code);

}  // namespace codeal
