#include "codeal/matrix.hpp"

#include <algorithm>
#include <cassert>

namespace codeal {

MatrixFp::MatrixFp(std::size_t rows, std::size_t cols, Prime p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {
  if (cols == 0) throw Error("matrix must have at least one column");
}

MatrixFp MatrixFp::from_rows(
    const std::vector<std::vector<std::uint32_t>>& rows, Prime p) {
  if (rows.empty()) throw Error("from_rows requires at least one row");
  MatrixFp m(rows.size(), rows.front().size(), p);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw Error("ragged rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

MatrixFp MatrixFp::identity(std::size_t n, Prime p) {
  MatrixFp m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

std::vector<std::uint32_t> MatrixFp::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

bool MatrixFp::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](std::uint32_t v) { return v == 0; });
}

bool MatrixFp::column_is_zero(std::size_t c) const {
  for (std::size_t r = 0; r < rows_; ++r)
    if (at(r, c) != 0) return false;
  return true;
}

MatrixFp MatrixFp::columns(std::span<const std::size_t> idx) const {
  if (idx.empty()) throw Error("column selection must be nonempty");
  MatrixFp m(rows_, idx.size(), p_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < idx.size(); ++j) m.set(r, j, at(r, idx[j]));
  return m;
}

MatrixFp MatrixFp::transpose() const {
  if (rows_ == 0) throw Error("cannot transpose a matrix with zero rows");
  MatrixFp m(cols_, rows_, p_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m.set(c, r, at(r, c));
  return m;
}

bool operator==(const MatrixFp& a, const MatrixFp& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.p_ == b.p_ &&
         a.data_ == b.data_;
}

void MatrixFp::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    std::swap(data_[a * cols_ + c], data_[b * cols_ + c]);
  }
}

void MatrixFp::scale_row(std::size_t r, std::uint32_t c) {
  const std::uint32_t p = p_.value();
  for (std::size_t j = 0; j < cols_; ++j)
    data_[r * cols_ + j] = fp_mul(data_[r * cols_ + j], c, p);
}

void MatrixFp::add_scaled_row(std::size_t dst, std::size_t src,
                              std::uint32_t c) {
  const std::uint32_t p = p_.value();
  for (std::size_t j = 0; j < cols_; ++j) {
    data_[dst * cols_ + j] = fp_add(
        data_[dst * cols_ + j], fp_mul(data_[src * cols_ + j], c, p), p);
  }
}

MatrixFp matmul(const MatrixFp& a, const MatrixFp& b) {
  if (a.modulus() != b.modulus()) throw ModulusMismatch();
  if (a.cols() != b.rows()) throw Error("matmul dimension mismatch");
  const std::uint32_t p = a.modulus().value();
  MatrixFp out(a.rows(), b.cols(), a.modulus());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::uint32_t aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out.set(i, j, fp_add(out.at(i, j), fp_mul(aik, b.at(k, j), p), p));
      }
    }
  }
  return out;
}

std::vector<std::uint32_t> row_times_matrix(std::span<const std::uint32_t> x,
                                            const MatrixFp& m) {
  assert(x.size() == m.rows());
  const std::uint32_t p = m.modulus().value();
  std::vector<std::uint32_t> out(m.cols(), 0);
  for (std::size_t k = 0; k < m.rows(); ++k) {
    if (x[k] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out[j] = fp_add(out[j], fp_mul(x[k], m.at(k, j), p), p);
    }
  }
  return out;
}

RrefResult rref(const MatrixFp& m) {
  MatrixFp r = m;
  const std::uint32_t p = r.modulus().value();
  std::vector<std::size_t> pivots;
  std::size_t prow = 0;
  for (std::size_t col = 0; col < r.cols() && prow < r.rows(); ++col) {
    std::size_t sel = prow;
    while (sel < r.rows() && r.at(sel, col) == 0) ++sel;
    if (sel == r.rows()) continue;
    r.swap_rows(prow, sel);
    r.scale_row(prow, fp_inv(r.at(prow, col), p));
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i != prow && r.at(i, col) != 0) {
        r.add_scaled_row(i, prow, fp_neg(r.at(i, col), p));
      }
    }
    pivots.push_back(col);
    ++prow;
  }
  return {std::move(r), pivots.size(), std::move(pivots)};
}

RrefWrtResult rref_wrt(const MatrixFp& m, std::span<const std::size_t> cols) {
  MatrixFp r = m;
  const std::uint32_t p = r.modulus().value();
  std::vector<char> seen(m.cols(), 0);
  for (std::size_t c : cols) {
    if (c >= m.cols()) throw Error("column index out of range");
    if (seen[c]) throw Error("duplicate column index");
    seen[c] = 1;
  }
  std::size_t prow = 0;
  for (std::size_t col : cols) {
    if (prow >= r.rows()) break;
    std::size_t sel = prow;
    while (sel < r.rows() && r.at(sel, col) == 0) ++sel;
    if (sel == r.rows()) continue;
    r.swap_rows(prow, sel);
    r.scale_row(prow, fp_inv(r.at(prow, col), p));
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i != prow && r.at(i, col) != 0) {
        r.add_scaled_row(i, prow, fp_neg(r.at(i, col), p));
      }
    }
    ++prow;
  }
  return {std::move(r), prow};
}

std::size_t rank_of_columns(const MatrixFp& m,
                            std::span<const std::size_t> cols) {
  if (cols.empty()) return 0;
  return rref_wrt(m, cols).rank;
}

std::size_t rank(const MatrixFp& m) { return rref(m).rank; }

MatrixFp kernel_basis(const MatrixFp& m) {
  RrefResult r = rref(m);
  const std::uint32_t p = m.modulus().value();
  const std::size_t n = m.cols();
  std::vector<char> is_pivot(n, 0);
  for (std::size_t c : r.pivot_cols) is_pivot[c] = 1;

  MatrixFp basis(n - r.rank, n, m.modulus());
  std::size_t bi = 0;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    basis.set(bi, f, 1);
    for (std::size_t i = 0; i < r.rank; ++i) {
      basis.set(bi, r.pivot_cols[i], fp_neg(r.reduced.at(i, f), p));
    }
    ++bi;
  }
  return basis;
}

}  // namespace codeal
