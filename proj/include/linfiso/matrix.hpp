#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "linfiso/rational.hpp"

namespace linfiso {

// Strictly increasing subset of {0, ..., ambient-1}. Stored zero-based;
// to_string() and the I/O layers print one-based indices.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::vector<std::size_t> members, std::size_t ambient);

  static IndexSet all(std::size_t ambient);

  std::size_t size() const noexcept { return members_.size(); }
  std::size_t ambient() const noexcept { return ambient_; }
  bool empty() const noexcept { return members_.empty(); }
  std::size_t operator[](std::size_t pos) const { return members_[pos]; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }
  const std::vector<std::size_t>& members() const noexcept { return members_; }

  bool contains(std::size_t index) const;
  // Position of `index` inside the set; throws Error(bounds) if absent.
  std::size_t position_of(std::size_t index) const;
  IndexSet complement() const;

  std::vector<std::size_t> one_based() const;
  std::string to_string() const;  // "{1,3}"

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend auto operator<=>(const IndexSet& a, const IndexSet& b) {
    return a.members_ <=> b.members_;
  }

 private:
  std::vector<std::size_t> members_;
  std::size_t ambient_ = 0;
};

// Calls visit(IndexSet) for every size-k subset of {0..n-1} in lexicographic
// order. The visitor returns false to stop early.
template <class Visitor>
void for_each_subset(std::size_t n, std::size_t k, Visitor&& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!visit(IndexSet(idx, n))) return;
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) return;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
}

class MatrixQ {
 public:
  MatrixQ() = default;
  MatrixQ(std::size_t rows, std::size_t cols);
  MatrixQ(std::initializer_list<std::initializer_list<Rational>> rows);

  static MatrixQ identity(std::size_t n);
  static MatrixQ from_rows(const std::vector<VectorQ>& rows);
  static MatrixQ from_columns(const std::vector<VectorQ>& columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const Rational> row_view(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  VectorQ row(std::size_t r) const;
  VectorQ column(std::size_t c) const;

  MatrixQ transpose() const;
  MatrixQ row_submatrix(const IndexSet& rows) const;
  MatrixQ column_submatrix(const IndexSet& cols) const;
  MatrixQ submatrix(const IndexSet& rows, const IndexSet& cols) const;
  // Copy with row `r` (zero-based position) overwritten by `values`.
  MatrixQ replace_row(std::size_t r, std::span<const Rational> values) const;
  MatrixQ hstack(const MatrixQ& right) const;

  friend bool operator==(const MatrixQ&, const MatrixQ&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

MatrixQ operator+(const MatrixQ& a, const MatrixQ& b);
MatrixQ operator-(const MatrixQ& a, const MatrixQ& b);
MatrixQ operator*(const MatrixQ& a, const MatrixQ& b);
MatrixQ operator*(const Rational& s, const MatrixQ& a);
VectorQ operator*(const MatrixQ& a, std::span<const Rational> x);

// Fraction-free (Bareiss) elimination after clearing row denominators.
Rational det(const MatrixQ& a);

MatrixQ inverse(const MatrixQ& a);

struct RowEchelon {
  MatrixQ reduced;
  std::vector<std::size_t> pivot_columns;
};
RowEchelon rref(const MatrixQ& a);
std::size_t rank(const MatrixQ& a);
// Columns form a basis of {x : a x = 0}; empty vector when trivial.
std::vector<VectorQ> kernel_basis(const MatrixQ& a);

Rational vec_norm1(std::span<const Rational> v);
Rational vec_norm_inf(std::span<const Rational> v);
// Maximum absolute row sum, the l_inf -> l_inf operator norm.
Rational op_norm_inf(const MatrixQ& a);

// Both sides of det(A^T B) = sum_{|S|=m} det(A_S) det(B_S).
std::pair<Rational, Rational> cauchy_binet_check(const MatrixQ& a, const MatrixQ& b);

std::string to_string(const MatrixQ& a);

}  // namespace linfiso
