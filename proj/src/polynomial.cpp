#include "poscomm/polynomial.hpp"

#include <sstream>

#include "poscomm/errors.hpp"
#include "poscomm/matrix.hpp"

namespace poscomm {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Polynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rational();
  return c_[k];
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

bool Polynomial::is_power_of_x(int n) const {
  if (degree() != n) return false;
  for (int k = 0; k < n; ++k) {
    if (!coeff(k).is_zero()) return false;
  }
  return coeff(n).is_one();
}

std::string Polynomial::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = c_[k];
    if (c.is_zero()) continue;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    bool unit = mag.is_one();
    if (k == 0) {
      os << mag.str();
    } else {
      if (!unit) os << mag.str() << "*";
      os << "x";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

Polynomial char_poly(const RationalMatrix& m) {
  if (!m.is_square()) throw NotSquare("char_poly: matrix not square");
  const int n = m.rows();
  // Faddeev-LeVerrier: M_1 = m, c_{n-1} = -tr(M_1);
  // M_k = m (M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k)/k.
  std::vector<Rational> c(static_cast<size_t>(n) + 1);
  c[n] = 1;
  RationalMatrix mk = m;
  c[n - 1] = -mk.trace();
  for (int k = 2; k <= n; ++k) {
    RationalMatrix shifted = mk;
    for (int i = 0; i < n; ++i) shifted.at(i, i) += c[n - k + 1];
    mk = m * shifted;
    c[n - k] = -(mk.trace() / Rational(k));
  }
  return Polynomial(std::move(c));
}

bool in_spectrum(const RationalMatrix& m, const Rational& lambda) {
  return char_poly(m).eval(lambda).is_zero();
}

}  // namespace poscomm
