#pragma once

#include <compare>
#include <cstdint>

#include "codeal/errors.hpp"

namespace codeal {

/// A validated prime modulus, 2 <= p <= 2^31. Primality is established at
/// construction, so every holder of a Prime may rely on it.
class Prime {
 public:
  explicit Prime(std::uint64_t p);

  std::uint32_t value() const { return p_; }

  friend bool operator==(Prime a, Prime b) { return a.p_ == b.p_; }
  friend bool operator!=(Prime a, Prime b) { return a.p_ != b.p_; }

 private:
  std::uint32_t p_;
};

/// An element of F_p held as its canonical representative in [0, p).
class FpElement {
 public:
  FpElement(std::uint64_t value, Prime modulus)
      : v_(static_cast<std::uint32_t>(value % modulus.value())), p_(modulus) {}

  std::uint32_t value() const { return v_; }
  Prime modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  FpElement operator+(FpElement o) const;
  FpElement operator-(FpElement o) const;
  FpElement operator*(FpElement o) const;
  FpElement operator-() const;
  /// Multiplicative inverse; throws DivisionByZero on zero.
  FpElement inverse() const;

  friend bool operator==(FpElement a, FpElement b) {
    return a.p_ == b.p_ && a.v_ == b.v_;
  }
  friend bool operator!=(FpElement a, FpElement b) { return !(a == b); }

 private:
  std::uint32_t v_;
  Prime p_;
};

/// Raw modular helpers used where carrying FpElement objects would be noisy.
std::uint32_t fp_add(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t fp_sub(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t fp_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t fp_neg(std::uint32_t a, std::uint32_t p);
std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p);

}  // namespace codeal
