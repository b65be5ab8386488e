#include "poscomm/matrix.hpp"

#include <sstream>

#include "poscomm/errors.hpp"

namespace poscomm {

RationalMatrix::RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) throw DimensionMismatch("matrix dimensions must be >= 1");
  e_.assign(static_cast<size_t>(rows) * cols, Rational());
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty() || rows[0].empty()) throw DimensionMismatch("from_rows: empty input");
  RationalMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows_; ++i) {
    if (static_cast<int>(rows[i].size()) != m.cols_) {
      throw DimensionMismatch("from_rows: ragged rows");
    }
    for (int j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

RationalMatrix RationalMatrix::from_int_rows(const std::vector<std::vector<long long>>& rows) {
  std::vector<std::vector<Rational>> r;
  r.reserve(rows.size());
  for (const auto& row : rows) r.emplace_back(row.begin(), row.end());
  return from_rows(r);
}

RationalMatrix RationalMatrix::unflatten(int rows, int cols, std::vector<Rational> entries) {
  if (static_cast<size_t>(rows) * cols != entries.size()) {
    throw DimensionMismatch("unflatten: size mismatch");
  }
  RationalMatrix m(rows, cols);
  m.e_ = std::move(entries);
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Rational RationalMatrix::trace() const {
  if (!is_square()) throw NotSquare("trace: matrix not square");
  Rational t;
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool RationalMatrix::nonnegative() const {
  for (const auto& x : e_)
    if (x.sign() < 0) return false;
  return true;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("add: shape mismatch");
  for (size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("sub: shape mismatch");
  for (size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
  return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("mul: inner dimensions differ");
  RationalMatrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const Rational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const Rational& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        c.at(i, j) += aik * bkj;
      }
    }
  }
  return c;
}

RationalMatrix operator*(const Rational& s, const RationalMatrix& m) {
  RationalMatrix r = m;
  for (auto& x : r.e_) x *= s;
  return r;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != cols_) throw DimensionMismatch("apply: vector length");
  std::vector<Rational> y(rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      if (!at(i, j).is_zero() && !x[j].is_zero()) y[i] += at(i, j) * x[j];
    }
  }
  return y;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

std::string RationalMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < cols_; ++j) {
      if (j) os << ",";
      os << at(i, j).str();
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

bool leq_entrywise(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("leq_entrywise: shape mismatch");
  }
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a.at(i, j) > b.at(i, j)) return false;
  return true;
}

RationalMatrix power(const RationalMatrix& m, unsigned long long k) {
  if (!m.is_square()) throw NotSquare("power: matrix not square");
  RationalMatrix result = RationalMatrix::identity(m.rows());
  RationalMatrix base = m;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Rational trace_of_product(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) {
    throw DimensionMismatch("trace_of_product: shape mismatch");
  }
  Rational t;
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const Rational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      const Rational& bki = b.at(k, i);
      if (bki.is_zero()) continue;
      t += aik * bki;
    }
  }
  return t;
}

bool is_nilpotent(const RationalMatrix& m) {
  if (!m.is_square()) throw NotSquare("is_nilpotent: matrix not square");
  const int n = m.rows();
  RationalMatrix p = m;
  // Square until the exponent reaches n; m nilpotent iff m^n = 0.
  unsigned long long e = 1;
  while (true) {
    if (p.is_zero()) return true;
    if (e >= static_cast<unsigned long long>(n)) return false;
    p = p * p;
    e *= 2;
  }
}

std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m) {
  const int rows = m.rows();
  const int cols = m.cols();
  // Row-reduce a working copy to reduced echelon form.
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a[i][j] = m.at(i, j);

  std::vector<int> pivot_col;  // pivot column of each echelon row
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i) {
      if (!a[i][c].is_zero()) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(a[r], a[sel]);
    Rational inv = Rational(1) / a[r][c];
    for (int j = c; j < cols; ++j) a[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Rational f = a[i][c];
      for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols);
    v[free] = 1;
    for (size_t k = 0; k < pivot_col.size(); ++k) {
      v[pivot_col[k]] = -a[k][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace poscomm
