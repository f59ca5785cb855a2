#include "codeal/io.hpp"

#include <fstream>
#include <sstream>

namespace codeal {

namespace {

// Strips comments and splits a line into base-10 unsigned fields.
bool data_fields(const std::string& line, std::size_t line_no,
                 std::vector<std::uint64_t>* out) {
  std::string body = line;
  if (auto hash = body.find('#'); hash != std::string::npos) {
    body.resize(hash);
  }
  std::istringstream ss(body);
  std::string tok;
  out->clear();
  while (ss >> tok) {
    std::uint64_t v = 0;
    for (char c : tok) {
      if (c < '0' || c > '9')
        throw ParseError(line_no, "expected an unsigned integer, got '" + tok + "'");
      v = v * 10 + static_cast<std::uint64_t>(c - '0');
      if (v > (std::uint64_t{1} << 62)) throw ParseError(line_no, "integer too large");
    }
    out->push_back(v);
  }
  return !out->empty();
}

}  // namespace

LinearCode read_code(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::uint64_t> fields;

  // header: p k n
  std::size_t header_line = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (data_fields(line, line_no, &fields)) {
      header_line = line_no;
      break;
    }
  }
  if (header_line == 0) throw ParseError(line_no + 1, "missing header line 'p k n'");
  if (fields.size() != 3)
    throw ParseError(header_line, "header must be 'p k n' (three integers)");
  Prime p = [&] {
    try {
      return Prime(fields[0]);
    } catch (const Error& e) {
      throw ParseError(header_line, e.what());
    }
  }();
  const std::uint64_t k = fields[1], n = fields[2];
  if (k == 0 || n == 0) throw ParseError(header_line, "k and n must be positive");
  if (k > n) throw ParseError(header_line, "k must not exceed n");

  MatrixFp g(k, n, p);
  std::size_t row = 0;
  while (row < k && std::getline(in, line)) {
    ++line_no;
    if (!data_fields(line, line_no, &fields)) continue;
    if (fields.size() != n)
      throw ParseError(line_no, "expected " + std::to_string(n) +
                                    " entries, got " + std::to_string(fields.size()));
    for (std::size_t c = 0; c < n; ++c) {
      if (fields[c] >= p.value())
        throw ParseError(line_no, "entry " + std::to_string(fields[c]) +
                                      " is not in [0, " + std::to_string(p.value()) + ")");
      g.set(row, c, static_cast<std::uint32_t>(fields[c]));
    }
    ++row;
  }
  if (row < k)
    throw ParseError(line_no + 1, "expected " + std::to_string(k) +
                                      " generator rows, got " + std::to_string(row));
  while (std::getline(in, line)) {
    ++line_no;
    if (data_fields(line, line_no, &fields))
      throw ParseError(line_no, "unexpected data after the generator matrix");
  }
  return LinearCode::from_generator(g);
}

LinearCode read_code_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open '" + path + "'");
  return read_code(f);
}

std::string write_code(const LinearCode& code) {
  std::string out = std::to_string(code.p()) + " " +
                    std::to_string(code.dimension()) + " " +
                    std::to_string(code.length()) + "\n";
  for (std::size_t r = 0; r < code.dimension(); ++r) {
    for (std::size_t c = 0; c < code.length(); ++c) {
      if (c) out += " ";
      out += std::to_string(code.generator().at(r, c));
    }
    out += "\n";
  }
  return out;
}

}  // namespace codeal
