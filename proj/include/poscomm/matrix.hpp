#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "poscomm/rational.hpp"

namespace poscomm {

// Dense matrix with exact rational entries, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;  // empty placeholder, 0x0
  RationalMatrix(int rows, int cols);
  static RationalMatrix identity(int n);
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static RationalMatrix from_int_rows(const std::vector<std::vector<long long>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_ && rows_ > 0; }
  bool empty() const { return rows_ == 0; }

  const Rational& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }
  Rational& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }

  const std::vector<Rational>& entries() const { return e_; }
  std::vector<Rational> flatten() const { return e_; }
  static RationalMatrix unflatten(int rows, int cols, std::vector<Rational> entries);

  RationalMatrix transpose() const;
  Rational trace() const;  // NotSquare otherwise
  bool is_zero() const;
  bool nonnegative() const;  // entrywise >= 0

  RationalMatrix& operator+=(const RationalMatrix& o);
  RationalMatrix& operator-=(const RationalMatrix& o);
  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const Rational& s, const RationalMatrix& m);

  std::vector<Rational> apply(const std::vector<Rational>& x) const;  // m * x

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator!=(const RationalMatrix& a, const RationalMatrix& b) { return !(a == b); }

  std::string str() const;  // single-line [[..],[..]]

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> e_;
};

// True iff a <= b entrywise (same shape required).
bool leq_entrywise(const RationalMatrix& a, const RationalMatrix& b);

RationalMatrix power(const RationalMatrix& m, unsigned long long k);  // m^k, k >= 0, m square

// trace(a * b) without forming the product.
Rational trace_of_product(const RationalMatrix& a, const RationalMatrix& b);

// True iff m^n = 0 (n = size); evaluated by repeated squaring.
bool is_nilpotent(const RationalMatrix& m);

// Exact basis of the right nullspace {x : m x = 0}.
std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m);

}  // namespace poscomm
