#include "poscomm/order.hpp"

#include "poscomm/errors.hpp"

namespace poscomm {

LatticeVector::LatticeVector(std::vector<Rational> entries) : e_(std::move(entries)) {
  if (e_.empty()) throw DimensionMismatch("LatticeVector: dim must be >= 1");
}

LatticeVector LatticeVector::zero(int dim) {
  return LatticeVector(std::vector<Rational>(static_cast<size_t>(dim)));
}

LatticeVector LatticeVector::basis_vector(int dim, int i) {
  LatticeVector v = zero(dim);
  v[i] = 1;
  return v;
}

bool LatticeVector::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<int> LatticeVector::support() const {
  std::vector<int> s;
  for (int i = 0; i < dim(); ++i)
    if (!e_[i].is_zero()) s.push_back(i);
  return s;
}

PositiveFunctional::PositiveFunctional(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw DimensionMismatch("PositiveFunctional: dim must be >= 1");
  for (const auto& x : c_) {
    if (x.sign() < 0) throw NotPositive("PositiveFunctional: negative coefficient");
  }
}

Rational PositiveFunctional::apply(const LatticeVector& x) const {
  if (x.dim() != dim()) throw DimensionMismatch("functional/vector dimension mismatch");
  Rational v;
  for (int i = 0; i < dim(); ++i) {
    if (!c_[i].is_zero() && !x[i].is_zero()) v += c_[i] * x[i];
  }
  return v;
}

bool is_positive_vector(const LatticeVector& x) {
  for (const auto& e : x.entries())
    if (e.sign() < 0) return false;
  return true;
}

bool are_disjoint(const LatticeVector& x, const LatticeVector& y) {
  if (x.dim() != y.dim()) throw DimensionMismatch("are_disjoint: dimension mismatch");
  for (int i = 0; i < x.dim(); ++i) {
    if (!x[i].is_zero() && !y[i].is_zero()) return false;
  }
  return true;
}

std::vector<PositiveFunctional> dual_functionals(const std::vector<LatticeVector>& xs) {
  if (xs.empty()) return {};
  const int n = xs[0].dim();
  for (const auto& x : xs) {
    if (x.dim() != n) throw DimensionMismatch("dual_functionals: dimension mismatch");
    if (x.is_zero()) throw ZeroVector("dual_functionals: zero vector");
    if (!is_positive_vector(x)) throw NotPositive("dual_functionals: vector not positive");
  }
  for (size_t i = 0; i < xs.size(); ++i) {
    for (size_t j = i + 1; j < xs.size(); ++j) {
      if (!are_disjoint(xs[i], xs[j])) {
        throw NotDisjoint("dual_functionals: vectors are not pairwise disjoint");
      }
    }
  }
  std::vector<PositiveFunctional> phis;
  phis.reserve(xs.size());
  for (const auto& x : xs) {
    // Smallest index attaining the maximal entry; disjoint supports make the
    // delta_ij relation automatic.
    int k = 0;
    for (int i = 1; i < n; ++i) {
      if (x[i] > x[k]) k = i;
    }
    std::vector<Rational> c(static_cast<size_t>(n));
    c[k] = Rational(1) / x[k];
    phis.emplace_back(std::move(c));
  }
  return phis;
}

RationalMatrix rank_one(const LatticeVector& y, const PositiveFunctional& phi) {
  if (y.dim() != phi.dim()) throw DimensionMismatch("rank_one: dimension mismatch");
  RationalMatrix m(y.dim(), y.dim());
  for (int i = 0; i < y.dim(); ++i) {
    if (y[i].is_zero()) continue;
    for (int j = 0; j < y.dim(); ++j) {
      if (phi[j].is_zero()) continue;
      m.at(i, j) = y[i] * phi[j];
    }
  }
  return m;
}

RationalMatrix interpolate_positive(const std::vector<LatticeVector>& xs,
                                    const std::vector<LatticeVector>& ys) {
  if (xs.empty() || xs.size() != ys.size()) {
    throw DimensionMismatch("interpolate_positive: need equally many xs and ys");
  }
  const int n = xs[0].dim();
  for (const auto& y : ys) {
    if (y.dim() != n) throw DimensionMismatch("interpolate_positive: dimension mismatch");
    if (!is_positive_vector(y)) throw NotPositive("interpolate_positive: y not positive");
  }
  std::vector<PositiveFunctional> phis = dual_functionals(xs);  // validates xs
  RationalMatrix t(n, n);
  for (size_t i = 0; i < xs.size(); ++i) {
    t += rank_one(ys[i], phis[i]);
  }
  return t;
}

}  // namespace poscomm
