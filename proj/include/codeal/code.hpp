#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "codeal/matrix.hpp"

namespace codeal {

/// Default bound on p^k for every enumerating operation. Overridable per call
/// and, in the CLI, via --cap or the CODEAL_CAP environment variable.
inline constexpr std::uint64_t kDefaultCap = std::uint64_t{1} << 24;

class LinearCode;

/// A vector of F_p^n known to lie in some code. Constructed only through
/// LinearCode (parity-checked) or codeword enumeration.
class Codeword {
 public:
  std::size_t length() const { return v_.size(); }
  Prime modulus() const { return p_; }
  std::uint32_t at(std::size_t i) const { return v_[i]; }
  const std::vector<std::uint32_t>& values() const { return v_; }

  std::vector<std::size_t> support() const;
  std::size_t weight() const;
  bool is_zero() const;

  friend bool operator==(const Codeword& a, const Codeword& b) {
    return a.p_ == b.p_ && a.v_ == b.v_;
  }

 private:
  friend class LinearCode;
  friend class CodewordRange;
  Codeword(std::vector<std::uint32_t> v, Prime p) : v_(std::move(v)), p_(p) {}

  std::vector<std::uint32_t> v_;
  Prime p_;
};

struct WeightDistribution {
  std::vector<std::uint64_t> counts;  // A_0 .. A_n
};

/// A validated [n,k] linear code over F_p. The generator matrix is stored
/// verbatim; the RREF, pivot columns and parity check matrix are cached.
class LinearCode {
 public:
  /// Validates rank(G) = rows(G) and the absence of zero columns.
  /// Throws RankDeficient or ZeroColumn.
  static LinearCode from_generator(const MatrixFp& g);

  Prime modulus() const { return g_.modulus(); }
  std::uint32_t p() const { return g_.modulus().value(); }
  std::size_t length() const { return g_.cols(); }       // n
  std::size_t dimension() const { return g_.rows(); }    // k
  const MatrixFp& generator() const { return g_; }
  const MatrixFp& generator_rref() const { return rref_; }

  /// (n-k) x n matrix H with G H^T = 0 and rank n-k. Built from the RREF on
  /// the first information set: H = (-M^T | I) up to the column permutation
  /// that undoes the pivot/non-pivot split.
  const MatrixFp& parity_check() const { return h_; }

  /// Pivot columns of rref(G): the lexicographically first information set.
  const std::vector<std::size_t>& first_information_set() const {
    return pivots_;
  }

  /// Membership-checked construction; throws NotACodeword.
  Codeword codeword(const std::vector<std::uint32_t>& coords) const;
  /// Encodes a message of length k; the result is a codeword by construction.
  Codeword encode(std::span<const std::uint32_t> message) const;
  Codeword zero_codeword() const;

  bool contains(std::span<const std::uint32_t> coords) const;

 private:
  LinearCode(MatrixFp g, MatrixFp rref, std::vector<std::size_t> pivots,
             MatrixFp h)
      : g_(std::move(g)),
        rref_(std::move(rref)),
        pivots_(std::move(pivots)),
        h_(std::move(h)) {}

  MatrixFp g_;
  MatrixFp rref_;
  std::vector<std::size_t> pivots_;
  MatrixFp h_;
};

/// |J| must equal k (WrongCardinality); true iff rank(G_J) = k. The answer
/// depends only on the row space of G.
bool is_information_set(const LinearCode& c, std::span<const std::size_t> j);

/// All information sets as ascending k-subsets, in lexicographic order.
std::vector<std::vector<std::size_t>> information_sets(const LinearCode& c);

/// Forward range over all p^k codewords in lexicographic order of the
/// information words. Construction throws TooLarge if p^k exceeds the cap.
/// The range owns a copy of the code, so iterating over a temporary is safe.
class CodewordRange {
 public:
  CodewordRange(const LinearCode& c, std::uint64_t cap);

  class iterator {
   public:
    const Codeword& operator*() const { return current_; }
    iterator& operator++();
    friend bool operator!=(const iterator& a, const iterator& b) {
      return a.index_ != b.index_;
    }

   private:
    friend class CodewordRange;
    iterator(std::shared_ptr<const LinearCode> code, std::uint64_t index,
             std::uint64_t total);

    std::shared_ptr<const LinearCode> code_;
    std::uint64_t index_, total_;
    std::vector<std::uint32_t> message_;
    Codeword current_;
  };

  iterator begin() const { return {code_, 0, total_}; }
  iterator end() const { return {code_, total_, total_}; }
  std::uint64_t size() const { return total_; }

 private:
  std::shared_ptr<const LinearCode> code_;
  std::uint64_t total_;
};

CodewordRange enumerate_codewords(const LinearCode& c,
                                  std::uint64_t cap = kDefaultCap);

WeightDistribution weight_distribution(const LinearCode& c,
                                       std::uint64_t cap = kDefaultCap);

/// Smallest nonzero codeword weight.
std::size_t minimum_distance(const LinearCode& c,
                             std::uint64_t cap = kDefaultCap);

/// p^k if it is <= cap, otherwise throws TooLarge naming both quantities.
std::uint64_t codeword_count_checked(const LinearCode& c, std::uint64_t cap);

}  // namespace codeal
