#pragma once

#include <string>
#include <vector>

#include "poscomm/rational.hpp"

namespace poscomm {

class RationalMatrix;

// Univariate polynomial over the rationals, coefficients in ascending degree.
class Polynomial {
 public:
  Polynomial() = default;  // zero polynomial
  explicit Polynomial(std::vector<Rational> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int k) const;  // 0 beyond degree
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational eval(const Rational& x) const;

  // True iff this == x^n (the characteristic polynomial of a nilpotent).
  bool is_power_of_x(int n) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  std::string str() const;  // e.g. "x^2 - 2x + 1"

 private:
  std::vector<Rational> c_;
};

// Monic characteristic polynomial det(xI - m) via Faddeev-LeVerrier.
Polynomial char_poly(const RationalMatrix& m);

// True iff char_poly(m)(lambda) = 0.
bool in_spectrum(const RationalMatrix& m, const Rational& lambda);

}  // namespace poscomm
