#include "codeal/binomial.hpp"

#include <algorithm>
#include <cassert>

namespace codeal {

namespace {

// Strip the common monomial factor so the sides have disjoint supports.
void purify(ExponentVector& plus, ExponentVector& minus) {
  ExponentVector g = ExponentVector::gcd(plus, minus);
  if (!g.is_zero()) {
    plus = plus.minus(g);
    minus = minus.minus(g);
  }
}

}  // namespace

Binomial::Binomial(ExponentVector plus, ExponentVector minus)
    : plus_(std::move(plus)), minus_(std::move(minus)) {
  if (plus_.size() != minus_.size()) throw LengthMismatch();
  purify(plus_, minus_);
  if (plus_ == minus_) throw Error("binomial sides are equal (zero polynomial)");
}

std::optional<Binomial> Binomial::difference(const ExponentVector& plus,
                                             const ExponentVector& minus) {
  if (plus.size() != minus.size()) throw LengthMismatch();
  if (plus == minus) return std::nullopt;
  return Binomial(plus, minus);
}

Binomial Binomial::power_relation(std::size_t n, std::size_t i, Prime p) {
  ExponentVector hi(n);
  hi.set(i, p.value());
  return Binomial(std::move(hi), ExponentVector(n));
}

bool Binomial::is_power_relation(Prime p) const {
  if (!minus_.is_zero()) return false;
  auto s = plus_.support();
  return s.size() == 1 && plus_[s[0]] == p.value();
}

Binomial Binomial::canonical() const {
  if (compare_grevlex(plus_, minus_) == Ordering::LT)
    return Binomial(minus_, plus_, Raw{});
  return *this;
}

bool Binomial::is_canonical() const {
  return compare_grevlex(plus_, minus_) != Ordering::LT;
}

Binomial binomial_of_split(const Codeword& word,
                           const std::vector<std::size_t>& plus_side) {
  if (word.is_zero()) throw ZeroWord();
  const std::size_t n = word.length();
  const std::uint32_t p = word.modulus().value();
  std::vector<char> in_plus(n, 0);
  for (std::size_t i : plus_side) {
    if (i >= n || word.at(i) == 0)
      throw Error("plus side must be a subset of the support");
    in_plus[i] = 1;
  }
  ExponentVector plus(n), minus(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t c = word.at(i);
    if (c == 0) continue;
    if (in_plus[i]) {
      plus.set(i, c);
    } else {
      minus.set(i, p - c);
    }
  }
  return Binomial(std::move(plus), std::move(minus));
}

std::vector<Binomial> all_splits(const Codeword& word, bool include_trivial) {
  if (word.is_zero()) throw ZeroWord();
  const std::vector<std::size_t> supp = word.support();
  const std::size_t s = supp.size();
  assert(s < 64);
  std::vector<Binomial> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s); ++mask) {
    const bool trivial = mask == 0 || mask + 1 == (std::uint64_t{1} << s);
    if (trivial && !include_trivial) continue;
    std::vector<std::size_t> plus_side;
    for (std::size_t i = 0; i < s; ++i) {
      if (mask & (std::uint64_t{1} << i)) plus_side.push_back(supp[i]);
    }
    out.push_back(binomial_of_split(word, plus_side));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint32_t> word_of_binomial(const Binomial& b, Prime p) {
  const std::uint32_t pv = p.value();
  std::vector<std::uint32_t> w(b.num_vars());
  for (std::size_t i = 0; i < b.num_vars(); ++i) {
    std::int64_t d = (b.plus()[i] - b.minus()[i]) % static_cast<std::int64_t>(pv);
    if (d < 0) d += pv;
    w[i] = static_cast<std::uint32_t>(d);
  }
  return w;
}

Binomial orient(const Binomial& b, const MonomialOrder& order, bool* flipped) {
  const bool flip = order.compare(b.plus(), b.minus()) == Ordering::LT;
  if (flipped != nullptr) *flipped = flip;
  return flip ? b.reversed() : b;
}

}  // namespace codeal
