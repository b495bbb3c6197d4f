#include "symlie/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace symlie {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::elementary(std::size_t n, std::size_t a, std::size_t b) {
  Matrix m(n, n);
  m(a, b) = Scalar(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_flat(std::size_t n, std::span<const Scalar> entries) {
  if (entries.size() != n * n) throw std::invalid_argument("from_flat: expected n*n entries");
  Matrix m(n, n);
  std::copy(entries.begin(), entries.end(), m.data_.begin());
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

bool Matrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && !(*this)(r, c).is_zero()) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product: size mismatch");
  Matrix p(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) {
        const Scalar& b = o(k, c);
        if (!b.is_zero()) p(r, c) += a * b;
      }
    }
  return p;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum: size mismatch");
  Matrix s = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] += o.data_[i];
  return s;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference: size mismatch");
  Matrix s = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] -= o.data_[i];
  return s;
}

Matrix Matrix::operator*(const Scalar& c) const {
  Matrix s = *this;
  for (auto& x : s.data_) x *= c;
  return s;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
    os << "]\n";
  }
  return os.str();
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Vector RowEchelon::reduce(Vector v) const {
  if (v.size() != cols_) throw std::invalid_argument("RowEchelon: vector length mismatch");
  for (const auto& [pivot, row] : rows_) {
    if (v[pivot].is_zero()) continue;
    Scalar f = v[pivot];
    for (std::size_t c = pivot; c < cols_; ++c) {
      if (!row[c].is_zero()) v[c].sub_mul(f, row[c]);
    }
  }
  return v;
}

bool RowEchelon::in_span(const Vector& v) const {
  Vector r = reduce(v);
  for (const auto& s : r)
    if (!s.is_zero()) return false;
  return true;
}

std::optional<std::size_t> RowEchelon::insert(Vector v) {
  v = reduce(std::move(v));
  std::size_t pivot = 0;
  while (pivot < cols_ && v[pivot].is_zero()) ++pivot;
  if (pivot == cols_) return std::nullopt;
  Scalar inv = v[pivot].inverse();
  for (std::size_t c = pivot; c < cols_; ++c)
    if (!v[c].is_zero()) v[c] *= inv;
  rows_.emplace(pivot, std::move(v));
  return pivot;
}

std::vector<std::size_t> RowEchelon::pivots() const {
  std::vector<std::size_t> p;
  for (const auto& [pivot, row] : rows_) p.push_back(pivot);
  return p;
}

std::vector<Vector> RowEchelon::reduced_rows() const {
  std::vector<Vector> rows;
  std::vector<std::size_t> piv;
  for (const auto& [pivot, row] : rows_) {
    rows.push_back(row);
    piv.push_back(pivot);
  }
  // Back substitution, bottom up.
  for (std::size_t k = rows.size(); k-- > 0;) {
    for (std::size_t r = 0; r < k; ++r) {
      if (rows[r][piv[k]].is_zero()) continue;
      Scalar f = rows[r][piv[k]];
      for (std::size_t c = piv[k]; c < cols_; ++c)
        if (!rows[k][c].is_zero()) rows[r][c].sub_mul(f, rows[k][c]);
    }
  }
  return rows;
}

std::vector<Vector> RowEchelon::nullspace() const {
  std::vector<Vector> rref = reduced_rows();
  std::vector<std::size_t> piv = pivots();
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t p : piv) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols_);
    v[f] = Scalar(1);
    for (std::size_t r = 0; r < rref.size(); ++r) v[piv[r]] = -rref[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const std::vector<Vector>& rows, std::size_t cols) {
  RowEchelon e(cols);
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse: matrix not square");
  std::size_t n = m.rows();
  Matrix a = m;
  Matrix inv = Matrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a(p, col).is_zero()) ++p;
    if (p == n) throw std::domain_error("matrix is singular");
    if (p != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(p, c), a(col, c));
        std::swap(inv(p, c), inv(col, c));
      }
    }
    Scalar s = a(col, col).inverse();
    for (std::size_t c = 0; c < n; ++c) {
      a(col, c) *= s;
      inv(col, c) *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      Scalar f = a(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c).sub_mul(f, a(col, c));
        inv(r, c).sub_mul(f, inv(col, c));
      }
    }
  }
  return inv;
}

Scalar determinant(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant: matrix not square");
  std::size_t n = m.rows();
  Matrix a = m;
  Scalar det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a(p, col).is_zero()) ++p;
    if (p == n) return Scalar();
    if (p != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(p, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    Scalar s = a(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      Scalar f = a(r, col) * s;
      for (std::size_t c = col; c < n; ++c) a(r, c).sub_mul(f, a(col, c));
    }
  }
  return det;
}

Polynomial change_variables(const Polynomial& p, const Matrix& b) {
  const RingPtr& ring = p.ring();
  std::size_t n = ring->arity();
  if (!b.is_square() || b.rows() != n)
    throw std::invalid_argument("change_variables: matrix size does not match ring arity");
  if (determinant(b).is_zero()) throw std::invalid_argument("change_variables: matrix is singular");
  std::vector<Polynomial> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial img(ring);
    for (std::size_t j = 0; j < n; ++j) img.add_term(Monomial::variable(n, j), b(i, j));
    images.push_back(std::move(img));
  }
  return substitute(p, images, ring);
}

}  // namespace symlie
