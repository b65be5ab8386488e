#pragma once

#include <vector>

#include "poscomm/matrix.hpp"
#include "poscomm/rational.hpp"

namespace poscomm {

// Vector in R^n under the componentwise order.
class LatticeVector {
 public:
  explicit LatticeVector(std::vector<Rational> entries);
  static LatticeVector zero(int dim);
  static LatticeVector basis_vector(int dim, int i);

  int dim() const { return static_cast<int>(e_.size()); }
  const Rational& operator[](int i) const { return e_[i]; }
  Rational& operator[](int i) { return e_[i]; }
  const std::vector<Rational>& entries() const { return e_; }

  bool is_zero() const;
  std::vector<int> support() const;

  friend bool operator==(const LatticeVector& a, const LatticeVector& b) { return a.e_ == b.e_; }
  friend bool operator!=(const LatticeVector& a, const LatticeVector& b) { return !(a == b); }

 private:
  std::vector<Rational> e_;
};

// Positive linear functional on R^n, represented by nonnegative coefficients.
class PositiveFunctional {
 public:
  explicit PositiveFunctional(std::vector<Rational> coeffs);  // NotPositive if any < 0

  int dim() const { return static_cast<int>(c_.size()); }
  const Rational& operator[](int i) const { return c_[i]; }
  const std::vector<Rational>& coefficients() const { return c_; }

  Rational apply(const LatticeVector& x) const;

  friend bool operator==(const PositiveFunctional& a, const PositiveFunctional& b) {
    return a.c_ == b.c_;
  }

 private:
  std::vector<Rational> c_;
};

bool is_positive_vector(const LatticeVector& x);

// |x| ^ |y| = 0, i.e. disjoint supports.
bool are_disjoint(const LatticeVector& x, const LatticeVector& y);

// Positive functionals with phi_i(x_j) = delta_ij for nonzero positive
// pairwise disjoint x_j; each phi_i is supported inside support(x_i).
std::vector<PositiveFunctional> dual_functionals(const std::vector<LatticeVector>& xs);

// Outer product y phi^T.
RationalMatrix rank_one(const LatticeVector& y, const PositiveFunctional& phi);

// Positive T with T x_j = y_j, built as sum of y_i (x) phi_i.
RationalMatrix interpolate_positive(const std::vector<LatticeVector>& xs,
                                    const std::vector<LatticeVector>& ys);

}  // namespace poscomm
