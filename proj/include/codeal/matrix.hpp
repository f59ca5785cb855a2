#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "codeal/fp.hpp"

namespace codeal {

/// Dense row-major matrix over F_p. A matrix may have zero rows (kernels of
/// full-rank maps, parity checks of [n,n] codes); it always has >= 1 column.
class MatrixFp {
 public:
  MatrixFp(std::size_t rows, std::size_t cols, Prime p);

  static MatrixFp from_rows(const std::vector<std::vector<std::uint32_t>>& rows,
                            Prime p);
  static MatrixFp identity(std::size_t n, Prime p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Prime modulus() const { return p_; }

  std::uint32_t at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, std::uint32_t v) {
    data_[r * cols_ + c] = v % p_.value();
  }
  FpElement elem(std::size_t r, std::size_t c) const { return {at(r, c), p_}; }

  std::vector<std::uint32_t> row(std::size_t r) const;
  bool is_zero() const;
  bool column_is_zero(std::size_t c) const;

  /// Columns of *this restricted to the given indices, in the given order.
  MatrixFp columns(std::span<const std::size_t> idx) const;
  MatrixFp transpose() const;

  friend bool operator==(const MatrixFp& a, const MatrixFp& b);
  friend bool operator!=(const MatrixFp& a, const MatrixFp& b) {
    return !(a == b);
  }

  // In-place row operations used by elimination.
  void swap_rows(std::size_t a, std::size_t b);
  void scale_row(std::size_t r, std::uint32_t c);
  void add_scaled_row(std::size_t dst, std::size_t src, std::uint32_t c);

 private:
  std::size_t rows_, cols_;
  Prime p_;
  std::vector<std::uint32_t> data_;
};

MatrixFp matmul(const MatrixFp& a, const MatrixFp& b);

/// y = x * m for a row vector x of length m.rows().
std::vector<std::uint32_t> row_times_matrix(std::span<const std::uint32_t> x,
                                            const MatrixFp& m);

struct RrefResult {
  MatrixFp reduced;
  std::size_t rank;
  std::vector<std::size_t> pivot_cols;  // ascending, 0-based
};

/// Unique reduced row echelon form: leftmost pivot columns, pivots scaled to
/// 1, zeros above and below every pivot.
RrefResult rref(const MatrixFp& m);

struct RrefWrtResult {
  MatrixFp reduced;
  std::size_t rank;
};

/// Row reduction that scans only the columns in `cols`, in the given order.
/// If the rank over `cols` equals the row count, the submatrix on `cols` is
/// an identity up to column order, with the pivot of cols[j] in row j.
RrefWrtResult rref_wrt(const MatrixFp& m, std::span<const std::size_t> cols);

/// Rank of the submatrix on the given column set; 0 for the empty set.
std::size_t rank_of_columns(const MatrixFp& m, std::span<const std::size_t> cols);

std::size_t rank(const MatrixFp& m);

/// Rows form a basis of { x : m x^T = 0 }; row count = cols(m) - rank(m).
MatrixFp kernel_basis(const MatrixFp& m);

}  // namespace codeal
