#pragma once

#include <string>
#include <string_view>

#include "codeal/bases.hpp"

namespace codeal {

/// "x3" or, in alias mode with n <= 26, "c". Alias mode silently falls back
/// to x-names for longer codes.
std::string variable_name(std::size_t index, std::size_t n, bool aliases);

/// "x1^2*x3"; the empty monomial renders as "1"; exponent 1 is omitted.
std::string monomial_text(const ExponentVector& e, bool aliases);

/// "x1^2*x3 - x2" (single space around the minus sign).
std::string binomial_text(const Binomial& b, bool aliases);

/// Inverse of binomial_text; accepts both x-names and alias letters.
Binomial parse_binomial(std::string_view text, std::size_t n);

/// One binomial per line, preceded by a summary line with the kind, code
/// parameters and both counts.
std::string basis_text(const BasisSet& s, bool aliases);

/// {"kind":…,"p":…,"n":…,"k":…,"oriented_count":…,"unordered_count":…,
///  "elements":[{"plus":[…],"minus":[…]},…]} followed by a newline.
std::string basis_json(const BasisSet& s);

/// Elements parsed back from basis_json output (round-trip support).
std::vector<Binomial> elements_from_json(std::string_view json_text);

}  // namespace codeal
