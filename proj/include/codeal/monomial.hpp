#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "codeal/errors.hpp"

namespace codeal {

/// Exponent vector of a monomial in n variables: an element of N_0^n.
class ExponentVector {
 public:
  explicit ExponentVector(std::size_t n) : e_(n, 0) {}
  explicit ExponentVector(std::vector<std::int64_t> e);

  std::size_t size() const { return e_.size(); }
  std::int64_t operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, std::int64_t v);

  std::int64_t degree() const;
  bool is_zero() const;
  std::vector<std::size_t> support() const;
  std::uint64_t support_mask() const;  // size() <= 64 assumed

  bool divides(const ExponentVector& other) const;  // componentwise <=
  ExponentVector plus(const ExponentVector& o) const;
  ExponentVector minus(const ExponentVector& o) const;  // requires >= 0
  /// In-place *this = *this - sub + add (sub must divide *this).
  void replace(const ExponentVector& sub, const ExponentVector& add);
  static ExponentVector lcm(const ExponentVector& a, const ExponentVector& b);
  static ExponentVector gcd(const ExponentVector& a, const ExponentVector& b);
  static bool coprime(const ExponentVector& a, const ExponentVector& b);

  const std::vector<std::int64_t>& exps() const { return e_; }

  friend bool operator==(const ExponentVector& a, const ExponentVector& b) {
    return a.e_ == b.e_;
  }
  friend bool operator!=(const ExponentVector& a, const ExponentVector& b) {
    return a.e_ != b.e_;
  }
  /// Container ordering (componentwise lexicographic); not a monomial order.
  friend bool operator<(const ExponentVector& a, const ExponentVector& b) {
    return a.e_ < b.e_;
  }

 private:
  std::vector<std::int64_t> e_;
};

enum class Ordering { LT, EQ, GT };

/// A total multiplicative order on monomials with 1 strictly minimal.
/// Variants: permuted lexicographic, graded (permuted) lexicographic, graded
/// reverse lexicographic, and weight-vector orders with a nested tie-break.
class MonomialOrder {
 public:
  enum class Kind { lex, grlex, grevlex, weighted };

  /// priority[0] is the greatest variable; must be a permutation of 0..n-1.
  static MonomialOrder lex(std::vector<std::size_t> priority);
  static MonomialOrder grlex(std::vector<std::size_t> priority);
  static MonomialOrder grevlex(std::vector<std::size_t> priority);
  /// Nonnegative weights; ties resolved by the nested order.
  static MonomialOrder weighted(std::vector<std::int64_t> weights,
                                MonomialOrder tiebreak);

  static std::vector<std::size_t> identity_priority(std::size_t n);

  Kind kind() const { return kind_; }
  std::size_t num_vars() const { return n_; }
  const std::vector<std::size_t>& priority() const { return priority_; }

  Ordering compare(const ExponentVector& a, const ExponentVector& b) const;
  bool greater(const ExponentVector& a, const ExponentVector& b) const {
    return compare(a, b) == Ordering::GT;
  }

  /// Textual form used by the CLI, e.g. "lex:2,1,3" (1-based indices).
  std::string describe() const;

 private:
  MonomialOrder(Kind kind, std::size_t n);

  Kind kind_;
  std::size_t n_;
  std::vector<std::size_t> priority_;       // lex/grlex/grevlex
  std::vector<std::int64_t> weights_;       // weighted
  std::shared_ptr<const MonomialOrder> tiebreak_;  // weighted
};

/// Fixed reference comparison used for canonical (order-free) bookkeeping:
/// graded reverse lexicographic with the identity priority.
Ordering compare_grevlex(const ExponentVector& a, const ExponentVector& b);

}  // namespace codeal
