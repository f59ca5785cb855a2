#include "codeal/fp.hpp"

namespace codeal {

namespace {

// Deterministic trial division is plenty for p <= 2^31.
bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

}  // namespace

Prime::Prime(std::uint64_t p) {
  if (p < 2 || p > (std::uint64_t{1} << 31)) {
    throw Error("modulus " + std::to_string(p) + " out of range [2, 2^31]");
  }
  if (!is_prime_u64(p)) {
    throw Error("modulus " + std::to_string(p) + " is not prime");
  }
  p_ = static_cast<std::uint32_t>(p);
}

std::uint32_t fp_add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint64_t s = std::uint64_t{a} + b;
  if (s >= p) s -= p;
  return static_cast<std::uint32_t>(s);
}

std::uint32_t fp_sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : static_cast<std::uint32_t>(a + std::uint64_t{p} - b);
}

std::uint32_t fp_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p);
}

std::uint32_t fp_neg(std::uint32_t a, std::uint32_t p) {
  return a == 0 ? 0 : p - a;
}

std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p) {
  if (a == 0) throw DivisionByZero();
  // Extended Euclid on (a, p); p prime guarantees gcd 1.
  std::int64_t r0 = a, r1 = p, s0 = 1, s1 = 0;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  std::int64_t inv = s0 % p;
  if (inv < 0) inv += p;
  return static_cast<std::uint32_t>(inv);
}

namespace {
void require_same_modulus(FpElement a, FpElement b) {
  if (a.modulus() != b.modulus()) throw ModulusMismatch();
}
}  // namespace

FpElement FpElement::operator+(FpElement o) const {
  require_same_modulus(*this, o);
  return {fp_add(v_, o.v_, p_.value()), p_};
}

FpElement FpElement::operator-(FpElement o) const {
  require_same_modulus(*this, o);
  return {fp_sub(v_, o.v_, p_.value()), p_};
}

FpElement FpElement::operator*(FpElement o) const {
  require_same_modulus(*this, o);
  return {fp_mul(v_, o.v_, p_.value()), p_};
}

FpElement FpElement::operator-() const { return {fp_neg(v_, p_.value()), p_}; }

FpElement FpElement::inverse() const { return {fp_inv(v_, p_.value()), p_}; }

}  // namespace codeal
