#include "codeal/render.hpp"

#include <cctype>

#include "json.hpp"

namespace codeal {

std::string variable_name(std::size_t index, std::size_t n, bool aliases) {
  if (aliases && n <= 26) {
    return std::string(1, static_cast<char>('a' + index));
  }
  return "x" + std::to_string(index + 1);
}

std::string monomial_text(const ExponentVector& e, bool aliases) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += variable_name(i, e.size(), aliases);
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

std::string binomial_text(const Binomial& b, bool aliases) {
  return monomial_text(b.plus(), aliases) + " - " +
         monomial_text(b.minus(), aliases);
}

namespace {

// Monomial grammar: "1" | factor ('*' factor)*, factor = var ('^' int)?,
// var = 'x' digits (1-based) | a single letter a..z (alias mode).
ExponentVector parse_monomial(std::string_view text, std::size_t n) {
  ExponentVector e(n);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos < text.size() && text[pos] == '1') {
    ++pos;
    skip_ws();
    if (pos != text.size()) throw Error("trailing characters after '1'");
    return e;
  }
  bool expect_factor = true;
  while (pos < text.size()) {
    skip_ws();
    if (pos >= text.size()) break;
    if (!expect_factor) {
      if (text[pos] != '*') throw Error("expected '*' between factors");
      ++pos;
      skip_ws();
    }
    expect_factor = false;
    std::size_t var = 0;
    char c = text[pos];
    if (c == 'x' && pos + 1 < text.size() &&
        std::isdigit(static_cast<unsigned char>(text[pos + 1]))) {
      ++pos;
      std::size_t v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + static_cast<std::size_t>(text[pos] - '0');
        ++pos;
      }
      if (v == 0 || v > n) throw Error("variable index out of range");
      var = v - 1;
    } else if (c >= 'a' && c <= 'z') {
      var = static_cast<std::size_t>(c - 'a');
      if (var >= n) throw Error("alias variable out of range");
      ++pos;
      // alias letters may carry the exponent directly: "b4" = b^4
      if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        std::int64_t exp = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
          exp = exp * 10 + (text[pos] - '0');
          ++pos;
        }
        e.set(var, e[var] + exp);
        continue;
      }
    } else {
      throw Error("invalid variable name in monomial");
    }
    std::int64_t exp = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        throw Error("expected exponent after '^'");
      exp = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        exp = exp * 10 + (text[pos] - '0');
        ++pos;
      }
    }
    e.set(var, e[var] + exp);
  }
  if (expect_factor) throw Error("empty monomial");
  return e;
}

}  // namespace

Binomial parse_binomial(std::string_view text, std::size_t n) {
  // Split on the '-' that separates the monomials (exponents are unsigned,
  // so the first '-' at top level is the separator).
  std::size_t sep = text.find('-');
  if (sep == std::string_view::npos)
    throw Error("binomial must contain ' - '");
  ExponentVector plus = parse_monomial(text.substr(0, sep), n);
  ExponentVector minus = parse_monomial(text.substr(sep + 1), n);
  return Binomial(std::move(plus), std::move(minus));
}

std::string basis_text(const BasisSet& s, bool aliases) {
  std::string out = "kind: " + to_string(s.kind) +
                    "  p: " + std::to_string(s.code.p()) +
                    "  n: " + std::to_string(s.code.length()) +
                    "  k: " + std::to_string(s.code.dimension()) +
                    "  unordered: " + std::to_string(s.unordered_count) +
                    "  oriented: " + std::to_string(s.oriented_count) + "\n";
  for (const Binomial& b : s.elements) {
    out += binomial_text(b, aliases) + "\n";
  }
  return out;
}

std::string basis_json(const BasisSet& s) {
  nlohmann::ordered_json j;
  j["kind"] = to_string(s.kind);
  j["p"] = s.code.p();
  j["n"] = s.code.length();
  j["k"] = s.code.dimension();
  j["oriented_count"] = s.oriented_count;
  j["unordered_count"] = s.unordered_count;
  nlohmann::ordered_json elems = nlohmann::ordered_json::array();
  for (const Binomial& b : s.elements) {
    nlohmann::ordered_json e;
    e["plus"] = b.plus().exps();
    e["minus"] = b.minus().exps();
    elems.push_back(std::move(e));
  }
  j["elements"] = std::move(elems);
  return j.dump() + "\n";
}

std::vector<Binomial> elements_from_json(std::string_view json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  std::vector<Binomial> out;
  for (const auto& e : j.at("elements")) {
    std::vector<std::int64_t> plus = e.at("plus").get<std::vector<std::int64_t>>();
    std::vector<std::int64_t> minus = e.at("minus").get<std::vector<std::int64_t>>();
    out.emplace_back(ExponentVector(std::move(plus)),
                     ExponentVector(std::move(minus)));
  }
  return out;
}

}  // namespace codeal
