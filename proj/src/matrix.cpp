#include "shv/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace shv {

std::optional<Rational> Rational::parse(const std::string& text) {
  if (text.empty()) return std::nullopt;
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(BigInt(text));
    }
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den <= 0) return std::nullopt;
    return Rational(num, den);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != rows_ * cols_) throw std::invalid_argument("Matrix: entry count mismatch");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("Matrix: ragged initializer");
    for (long long x : r) a_.emplace_back(x);
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::jordan_block(const Rational& alpha, std::size_t r) {
  Matrix m(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    m.at(i, i) = alpha;
    if (i + 1 < r) m.at(i, i + 1) = 1;
  }
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("Matrix: product shape mismatch");
  Matrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& x = at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: sum shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: diff shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

Matrix Matrix::operator*(const Rational& s) const {
  Matrix r = *this;
  for (auto& x : r.a_) x *= s;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Matrix Matrix::pow(std::size_t k) const {
  if (!is_square()) throw std::invalid_argument("Matrix: pow of non-square");
  Matrix r = identity(rows_);
  for (std::size_t i = 0; i < k; ++i) r = r * *this;
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Rational Matrix::trace() const {
  if (!is_square()) throw std::invalid_argument("Matrix: trace of non-square");
  Rational t;
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

Matrix Matrix::hstack(const Matrix& o) const {
  if (rows_ != o.rows_) throw std::invalid_argument("Matrix: hstack row mismatch");
  Matrix r(rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
  }
  return r;
}

Matrix Matrix::vstack(const Matrix& o) const {
  if (cols_ != o.cols_) throw std::invalid_argument("Matrix: vstack col mismatch");
  Matrix r(rows_ + o.rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (std::size_t i = 0; i < o.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
  return r;
}

Matrix Matrix::submatrix(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("Matrix: submatrix bounds");
  Matrix r(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) r.at(i, j) = at(r0 + i, c0 + j);
  return r;
}

Matrix Matrix::kron(const Matrix& o) const {
  Matrix r(rows_ * o.rows_, cols_ * o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Rational& x = at(i, j);
      if (x.is_zero()) continue;
      for (std::size_t p = 0; p < o.rows_; ++p)
        for (std::size_t q = 0; q < o.cols_; ++q)
          r.at(i * o.rows_ + p, j * o.cols_ + q) = x * o.at(p, q);
    }
  return r;
}

Matrix Matrix::rref(std::vector<std::size_t>* pivots) const {
  Matrix m = *this;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols_ && lead < rows_; ++col) {
    std::size_t piv = lead;
    while (piv < rows_ && m.at(piv, col).is_zero()) ++piv;
    if (piv == rows_) continue;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(lead, j));
    Rational inv = m.at(lead, col).inverse();
    for (std::size_t j = col; j < cols_; ++j) m.at(lead, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == lead || m.at(i, col).is_zero()) continue;
      Rational f = m.at(i, col);
      for (std::size_t j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(lead, j);
    }
    if (pivots) pivots->push_back(col);
    ++lead;
  }
  return m;
}

std::size_t Matrix::rank() const {
  std::vector<std::size_t> piv;
  rref(&piv);
  return piv.size();
}

Matrix Matrix::kernel_basis() const {
  std::vector<std::size_t> piv;
  Matrix r = rref(&piv);
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : piv) is_pivot[p] = true;
  Matrix k(cols_, cols_ - piv.size());
  std::size_t col = 0;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    k.at(free, col) = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) k.at(piv[i], col) = -r.at(i, free);
    ++col;
  }
  return k;
}

Matrix Matrix::image_basis() const {
  std::vector<std::size_t> piv;
  rref(&piv);
  Matrix b(rows_, piv.size());
  for (std::size_t j = 0; j < piv.size(); ++j)
    for (std::size_t i = 0; i < rows_; ++i) b.at(i, j) = at(i, piv[j]);
  return b;
}

Rational Matrix::determinant() const {
  if (!is_square()) throw std::invalid_argument("Matrix: determinant of non-square");
  Matrix m = *this;
  Rational det(1);
  for (std::size_t col = 0; col < cols_; ++col) {
    std::size_t piv = col;
    while (piv < rows_ && m.at(piv, col).is_zero()) ++piv;
    if (piv == rows_) return Rational(0);
    if (piv != col) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(col, j));
      det = -det;
    }
    det *= m.at(col, col);
    Rational inv = m.at(col, col).inverse();
    for (std::size_t i = col + 1; i < rows_; ++i) {
      if (m.at(i, col).is_zero()) continue;
      Rational f = m.at(i, col) * inv;
      for (std::size_t j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(col, j);
    }
  }
  return det;
}

Matrix Matrix::inverse() const {
  if (!is_square()) throw std::invalid_argument("Matrix: inverse of non-square");
  std::vector<std::size_t> piv;
  Matrix r = hstack(identity(rows_)).rref(&piv);
  if (piv.size() != rows_ || (rows_ > 0 && piv.back() >= rows_))
    throw std::domain_error("Matrix: not invertible");
  return r.submatrix(0, rows_, cols_, cols_);
}

std::optional<Matrix> Matrix::solve(const Matrix& b) const {
  if (b.rows_ != rows_) throw std::invalid_argument("Matrix: solve shape mismatch");
  std::vector<std::size_t> piv;
  Matrix r = hstack(b).rref(&piv);
  // Inconsistent when some pivot lands in the augmented block.
  std::size_t nmain = 0;
  for (auto p : piv)
    if (p < cols_) ++nmain;
  if (nmain != piv.size()) return std::nullopt;
  Matrix x(cols_, b.cols_);
  for (std::size_t i = 0; i < piv.size(); ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) x.at(piv[i], j) = r.at(i, cols_ + j);
  return x;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
  }
  os << "]";
  return os.str();
}

std::vector<Rational> char_poly(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("char_poly: non-square");
  std::size_t n = m.rows();
  // Faddeev-LeVerrier: c[n] = 1, M_1 = A, c_{n-k} = -tr(A M_k)/k.
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Matrix mk = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk;
    Rational ck = -(mk.trace() / Rational((long long)k));
    c[n - k] = ck;
    for (std::size_t i = 0; i < n; ++i) mk.at(i, i) += ck;
  }
  return c;
}

}  // namespace shv
