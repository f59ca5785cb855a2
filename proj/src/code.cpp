#include "codeal/code.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace codeal {

std::vector<std::size_t> Codeword::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < v_.size(); ++i)
    if (v_[i] != 0) s.push_back(i);
  return s;
}

std::size_t Codeword::weight() const {
  return static_cast<std::size_t>(
      std::count_if(v_.begin(), v_.end(), [](auto x) { return x != 0; }));
}

bool Codeword::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](auto x) { return x == 0; });
}

LinearCode LinearCode::from_generator(const MatrixFp& g) {
  if (g.rows() == 0) throw Error("generator matrix must have at least one row");
  for (std::size_t c = 0; c < g.cols(); ++c) {
    if (g.column_is_zero(c)) throw ZeroColumn(c);
  }
  RrefResult r = rref(g);
  if (r.rank < g.rows()) throw RankDeficient(r.rank, g.rows());
  if (g.rows() > g.cols()) throw Error("dimension exceeds length");

  // H = (-M^T | I_{n-k}) spread back over the original column positions:
  // pivot columns carry -M^T, non-pivot columns carry the identity.
  const std::size_t n = g.cols(), k = g.rows();
  const std::uint32_t p = g.modulus().value();
  std::vector<char> is_pivot(n, 0);
  for (std::size_t c : r.pivot_cols) is_pivot[c] = 1;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  MatrixFp h(n - k, n, g.modulus());
  for (std::size_t b = 0; b < free_cols.size(); ++b) {
    h.set(b, free_cols[b], 1);
    for (std::size_t a = 0; a < k; ++a) {
      h.set(b, r.pivot_cols[a], fp_neg(r.reduced.at(a, free_cols[b]), p));
    }
  }
  return LinearCode(g, std::move(r.reduced), std::move(r.pivot_cols),
                    std::move(h));
}

bool LinearCode::contains(std::span<const std::uint32_t> coords) const {
  if (coords.size() != length()) return false;
  // H c^T = 0 componentwise.
  const std::uint32_t p = this->p();
  for (std::size_t r = 0; r < h_.rows(); ++r) {
    std::uint32_t acc = 0;
    for (std::size_t c = 0; c < length(); ++c) {
      acc = fp_add(acc, fp_mul(h_.at(r, c), coords[c], p), p);
    }
    if (acc != 0) return false;
  }
  return true;
}

Codeword LinearCode::codeword(const std::vector<std::uint32_t>& coords) const {
  std::vector<std::uint32_t> v(coords);
  const std::uint32_t p = this->p();
  for (auto& x : v) x %= p;
  if (!contains(v)) throw NotACodeword();
  return Codeword(std::move(v), modulus());
}

Codeword LinearCode::encode(std::span<const std::uint32_t> message) const {
  if (message.size() != dimension()) throw Error("message length must be k");
  return Codeword(row_times_matrix(message, g_), modulus());
}

Codeword LinearCode::zero_codeword() const {
  return Codeword(std::vector<std::uint32_t>(length(), 0), modulus());
}

bool is_information_set(const LinearCode& c, std::span<const std::size_t> j) {
  if (j.size() != c.dimension())
    throw WrongCardinality(j.size(), c.dimension());
  return rank_of_columns(c.generator(), j) == c.dimension();
}

std::vector<std::vector<std::size_t>> information_sets(const LinearCode& c) {
  const std::size_t n = c.length(), k = c.dimension();
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (is_information_set(c, idx)) out.push_back(idx);
    // next k-subset in lexicographic order
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t t = i; t < k; ++t) idx[t] = idx[t - 1] + 1;
  }
  return out;
}

std::uint64_t codeword_count_checked(const LinearCode& c, std::uint64_t cap) {
  const std::uint64_t p = c.p();
  constexpr std::uint64_t kSafe = std::uint64_t{1} << 62;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < c.dimension(); ++i) {
    if (total > kSafe / p) {
      throw TooLarge("p^k = " + std::to_string(c.p()) + "^" +
                     std::to_string(c.dimension()) +
                     " codewords exceed the enumeration cap " +
                     std::to_string(cap));
    }
    total *= p;
  }
  if (total > cap) {
    throw TooLarge("p^k = " + std::to_string(total) +
                   " codewords exceed the enumeration cap " +
                   std::to_string(cap));
  }
  return total;
}

CodewordRange::CodewordRange(const LinearCode& c, std::uint64_t cap)
    : code_(std::make_shared<LinearCode>(c)),
      total_(codeword_count_checked(c, cap)) {}

CodewordRange::iterator::iterator(std::shared_ptr<const LinearCode> code,
                                  std::uint64_t index, std::uint64_t total)
    : code_(std::move(code)),
      index_(index),
      total_(total),
      message_(code_->dimension(), 0),
      current_(code_->zero_codeword()) {}

CodewordRange::iterator& CodewordRange::iterator::operator++() {
  ++index_;
  if (index_ >= total_) return *this;
  // Odometer over messages, least significant digit last: lexicographic
  // order of information words.
  const std::uint32_t p = code_->p();
  std::size_t pos = message_.size();
  while (pos > 0) {
    --pos;
    if (++message_[pos] < p) break;
    message_[pos] = 0;
  }
  current_ = code_->encode(message_);
  return *this;
}

CodewordRange enumerate_codewords(const LinearCode& c, std::uint64_t cap) {
  return CodewordRange(c, cap);
}

WeightDistribution weight_distribution(const LinearCode& c,
                                       std::uint64_t cap) {
  WeightDistribution d;
  d.counts.assign(c.length() + 1, 0);
  for (const Codeword& w : enumerate_codewords(c, cap)) ++d.counts[w.weight()];
  return d;
}

std::size_t minimum_distance(const LinearCode& c, std::uint64_t cap) {
  WeightDistribution d = weight_distribution(c, cap);
  for (std::size_t i = 1; i < d.counts.size(); ++i) {
    if (d.counts[i] > 0) return i;
  }
  throw Error("code has no nonzero codeword");  // unreachable: k >= 1
}

}  // namespace codeal
