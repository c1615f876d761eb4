#include "linfiso/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "linfiso/error.hpp"

namespace linfiso {

// ---------------------------------------------------------------- IndexSet

IndexSet::IndexSet(std::vector<std::size_t> members, std::size_t ambient)
    : members_(std::move(members)), ambient_(ambient) {
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] >= ambient_)
      throw Error(ErrorCode::bounds, "index " + std::to_string(members_[i] + 1) +
                                         " outside {1.." + std::to_string(ambient_) + "}");
    if (i > 0 && members_[i] <= members_[i - 1])
      throw Error(ErrorCode::bounds, "index set is not strictly increasing");
  }
}

IndexSet IndexSet::all(std::size_t ambient) {
  std::vector<std::size_t> m(ambient);
  for (std::size_t i = 0; i < ambient; ++i) m[i] = i;
  return IndexSet(std::move(m), ambient);
}

bool IndexSet::contains(std::size_t index) const {
  return std::binary_search(members_.begin(), members_.end(), index);
}

std::size_t IndexSet::position_of(std::size_t index) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), index);
  if (it == members_.end() || *it != index)
    throw Error(ErrorCode::bounds, "index " + std::to_string(index + 1) + " not in " + to_string());
  return static_cast<std::size_t>(it - members_.begin());
}

IndexSet IndexSet::complement() const {
  std::vector<std::size_t> rest;
  rest.reserve(ambient_ - members_.size());
  for (std::size_t i = 0; i < ambient_; ++i)
    if (!contains(i)) rest.push_back(i);
  return IndexSet(std::move(rest), ambient_);
}

std::vector<std::size_t> IndexSet::one_based() const {
  std::vector<std::size_t> out(members_);
  for (auto& i : out) ++i;
  return out;
}

std::string IndexSet::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(members_[i] + 1);
  }
  return s + "}";
}

// ----------------------------------------------------------------- MatrixQ

MatrixQ::MatrixQ(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) throw Error(ErrorCode::dimension, "matrix must be at least 1x1");
}

MatrixQ::MatrixQ(std::initializer_list<std::initializer_list<Rational>> rows) {
  std::vector<VectorQ> r;
  for (const auto& row : rows) r.emplace_back(row);
  *this = from_rows(r);
}

MatrixQ MatrixQ::identity(std::size_t n) {
  MatrixQ m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

MatrixQ MatrixQ::from_rows(const std::vector<VectorQ>& rows) {
  if (rows.empty() || rows.front().empty())
    throw Error(ErrorCode::dimension, "matrix must be at least 1x1");
  MatrixQ m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw Error(ErrorCode::dimension, "ragged rows");
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + r * m.cols_);
  }
  return m;
}

MatrixQ MatrixQ::from_columns(const std::vector<VectorQ>& columns) {
  return from_rows(columns).transpose();
}

VectorQ MatrixQ::row(std::size_t r) const {
  auto v = row_view(r);
  return {v.begin(), v.end()};
}

VectorQ MatrixQ::column(std::size_t c) const {
  VectorQ v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

MatrixQ MatrixQ::transpose() const {
  MatrixQ t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

MatrixQ MatrixQ::row_submatrix(const IndexSet& rows) const {
  return submatrix(rows, IndexSet::all(cols_));
}

MatrixQ MatrixQ::column_submatrix(const IndexSet& cols) const {
  return submatrix(IndexSet::all(rows_), cols);
}

MatrixQ MatrixQ::submatrix(const IndexSet& rows, const IndexSet& cols) const {
  if (rows.ambient() > rows_ || cols.ambient() > cols_)
    throw Error(ErrorCode::bounds, "index set exceeds matrix shape");
  MatrixQ out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(rows[i], cols[j]);
  return out;
}

MatrixQ MatrixQ::replace_row(std::size_t r, std::span<const Rational> values) const {
  if (r >= rows_) throw Error(ErrorCode::bounds, "row position out of range");
  if (values.size() != cols_) throw Error(ErrorCode::dimension, "replacement row length mismatch");
  MatrixQ out(*this);
  std::copy(values.begin(), values.end(), out.data_.begin() + r * cols_);
  return out;
}

MatrixQ MatrixQ::hstack(const MatrixQ& right) const {
  if (right.rows_ != rows_) throw Error(ErrorCode::dimension, "hstack row mismatch");
  MatrixQ out(rows_, cols_ + right.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < right.cols_; ++c) out(r, cols_ + c) = right(r, c);
  }
  return out;
}

MatrixQ operator+(const MatrixQ& a, const MatrixQ& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::dimension, "shape mismatch in +");
  MatrixQ out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) + b(r, c);
  return out;
}

MatrixQ operator-(const MatrixQ& a, const MatrixQ& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::dimension, "shape mismatch in -");
  MatrixQ out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) - b(r, c);
  return out;
}

MatrixQ operator*(const MatrixQ& a, const MatrixQ& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::dimension, "shape mismatch in *");
  MatrixQ out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& ark = a(r, k);
      if (ark == 0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += ark * b(k, c);
    }
  return out;
}

MatrixQ operator*(const Rational& s, const MatrixQ& a) {
  MatrixQ out(a);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) *= s;
  return out;
}

VectorQ operator*(const MatrixQ& a, std::span<const Rational> x) {
  if (x.size() != a.cols()) throw Error(ErrorCode::dimension, "shape mismatch in matrix-vector *");
  VectorQ y(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) y[r] += a(r, c) * x[c];
  return y;
}

// ------------------------------------------------------------ determinants

Rational det(const MatrixQ& a) {
  if (!a.is_square()) throw Error(ErrorCode::dimension, "determinant of a non-square matrix");
  const std::size_t n = a.rows();

  // Scale each row to integers; det(A) = det(M) / prod(scale).
  std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
  mpz_class scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < n; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < n; ++c) m[r][c] = a(r, c).get_num() * (l / a(r, c).get_den());
    scale *= l;
  }

  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  Rational d(sign * m[n - 1][n - 1], scale);
  d.canonicalize();
  return d;
}

// ------------------------------------------------------- elimination-based

RowEchelon rref(const MatrixQ& a) {
  RowEchelon out{a, {}};
  MatrixQ& m = out.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
    const Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rational factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  return out;
}

std::size_t rank(const MatrixQ& a) { return rref(a).pivot_columns.size(); }

std::vector<VectorQ> kernel_basis(const MatrixQ& a) {
  const RowEchelon e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : e.pivot_columns) is_pivot[c] = true;

  std::vector<VectorQ> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    VectorQ v(a.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivot_columns.size(); ++r)
      v[e.pivot_columns[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

MatrixQ inverse(const MatrixQ& a) {
  if (!a.is_square()) throw Error(ErrorCode::dimension, "inverse of a non-square matrix");
  const std::size_t n = a.rows();
  const RowEchelon e = rref(a.hstack(MatrixQ::identity(n)));
  if (e.pivot_columns.size() < n || e.pivot_columns[n - 1] != n - 1)
    throw Error(ErrorCode::singular, "matrix is singular");
  std::vector<std::size_t> right(n);
  for (std::size_t i = 0; i < n; ++i) right[i] = n + i;
  return e.reduced.column_submatrix(IndexSet(right, 2 * n));
}

// ------------------------------------------------------------------- norms

Rational vec_norm1(std::span<const Rational> v) {
  Rational s = 0;
  for (const auto& x : v) s += abs(x);
  return s;
}

Rational vec_norm_inf(std::span<const Rational> v) {
  Rational s = 0;
  for (const auto& x : v) {
    Rational ax = abs(x);
    if (ax > s) s = ax;
  }
  return s;
}

Rational op_norm_inf(const MatrixQ& a) {
  Rational best = 0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Rational s = vec_norm1(a.row_view(r));
    if (s > best) best = s;
  }
  return best;
}

std::pair<Rational, Rational> cauchy_binet_check(const MatrixQ& a, const MatrixQ& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::dimension, "Cauchy-Binet needs equal shapes");
  if (a.cols() > a.rows())
    throw Error(ErrorCode::dimension, "Cauchy-Binet needs rows >= cols");
  Rational lhs = det(a.transpose() * b);
  Rational rhs = 0;
  for_each_subset(a.rows(), a.cols(), [&](const IndexSet& s) {
    rhs += det(a.row_submatrix(s)) * det(b.row_submatrix(s));
    return true;
  });
  return {lhs, rhs};
}

std::string to_string(const MatrixQ& a) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < a.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < a.cols(); ++c) os << (c ? ", " : "") << to_string(a(r, c));
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace linfiso
