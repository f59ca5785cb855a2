#pragma once

#include <optional>
#include <vector>

#include "codeal/code.hpp"
#include "codeal/monomial.hpp"

namespace codeal {

/// A pure difference of two monomials, x^plus - x^minus. Construction strips
/// any common monomial factor, so the stored sides always have disjoint
/// supports; the two sides are never equal (the zero polynomial is expressed
/// as an empty std::optional<Binomial> where it can occur).
class Binomial {
 public:
  /// Throws if plus and minus denote the same monomial after normalization.
  Binomial(ExponentVector plus, ExponentVector minus);

  /// x^plus - x^minus as a polynomial; nullopt when it is zero.
  static std::optional<Binomial> difference(const ExponentVector& plus,
                                            const ExponentVector& minus);

  /// x_i^p - 1.
  static Binomial power_relation(std::size_t n, std::size_t i, Prime p);

  const ExponentVector& plus() const { return plus_; }
  const ExponentVector& minus() const { return minus_; }
  std::size_t num_vars() const { return plus_.size(); }

  bool minus_is_one() const { return minus_.is_zero(); }
  bool two_sided() const { return !plus_.is_zero() && !minus_.is_zero(); }
  /// True for x_i^p - 1.
  bool is_power_relation(Prime p) const;

  /// supp(plus) ∪ supp(minus).
  std::uint64_t support_mask() const {
    return plus_.support_mask() | minus_.support_mask();
  }

  Binomial reversed() const { return Binomial(minus_, plus_, Raw{}); }

  /// Orientation-free representative: the side pair is ordered so that
  /// plus > minus under the fixed grevlex reference comparison.
  Binomial canonical() const;
  bool is_canonical() const;

  friend bool operator==(const Binomial& a, const Binomial& b) {
    return a.plus_ == b.plus_ && a.minus_ == b.minus_;
  }
  friend bool operator!=(const Binomial& a, const Binomial& b) {
    return !(a == b);
  }
  /// Deterministic container ordering on the (plus, minus) pair.
  friend bool operator<(const Binomial& a, const Binomial& b) {
    if (a.plus_ != b.plus_) return a.plus_ < b.plus_;
    return a.minus_ < b.minus_;
  }

 private:
  struct Raw {};
  Binomial(ExponentVector plus, ExponentVector minus, Raw)
      : plus_(std::move(plus)), minus_(std::move(minus)) {}

  ExponentVector plus_, minus_;
};

/// The binomial of the split of a nonzero codeword whose plus side is the
/// given subset of the support: plus_i = c_i on the subset, minus_i = p - c_i
/// on the rest of the support. Throws ZeroWord.
Binomial binomial_of_split(const Codeword& word,
                           const std::vector<std::size_t>& plus_side);

/// All 2^s splits of a weight-s codeword (include_trivial), or the 2^s - 2
/// splits with both sides nonempty. Results are distinct as ordered pairs and
/// returned in a deterministic order.
std::vector<Binomial> all_splits(const Codeword& word, bool include_trivial);

/// (plus - minus) reduced componentwise mod p: the vector of F_p^n the
/// binomial corresponds to. Membership in any code is not implied.
std::vector<std::uint32_t> word_of_binomial(const Binomial& b, Prime p);

/// Swaps the sides if needed so that plus > minus under the order. If
/// `flipped` is non-null it reports whether a swap (a sign flip) happened.
Binomial orient(const Binomial& b, const MonomialOrder& order,
                bool* flipped = nullptr);

}  // namespace codeal
