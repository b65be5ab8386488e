#include "poscomm/echelon.hpp"

#include <algorithm>

#include "poscomm/errors.hpp"

namespace poscomm {

RowSpace::RowSpace(int width) : width_(width) {
  if (width < 1) throw DimensionMismatch("RowSpace: width must be >= 1");
}

bool RowSpace::insert(std::vector<Rational> v) {
  if (static_cast<int>(v.size()) != width_) throw DimensionMismatch("RowSpace: width mismatch");
  for (const Row& r : rows_) {
    Rational& coef = v[r.pivot];
    if (coef.is_zero()) continue;
    Rational f = coef;
    coef = Rational();
    for (int j = r.pivot + 1; j < width_; ++j) {
      if (!r.v[j].is_zero()) v[j] -= f * r.v[j];
    }
  }
  int p = -1;
  for (int j = 0; j < width_; ++j) {
    if (!v[j].is_zero()) {
      p = j;
      break;
    }
  }
  if (p < 0) return false;

  Rational inv = Rational(1) / v[p];
  v[p] = 1;
  for (int j = p + 1; j < width_; ++j) {
    if (!v[j].is_zero()) v[j] *= inv;
  }
  // Clear column p in the existing rows to keep the form fully reduced.
  for (Row& r : rows_) {
    Rational& coef = r.v[p];
    if (coef.is_zero()) continue;
    Rational f = coef;
    coef = Rational();
    for (int j = p + 1; j < width_; ++j) {
      if (!v[j].is_zero()) r.v[j] -= f * v[j];
    }
  }
  Row row{std::move(v), p};
  auto it = std::lower_bound(rows_.begin(), rows_.end(), p,
                             [](const Row& r, int pivot) { return r.pivot < pivot; });
  rows_.insert(it, std::move(row));
  return true;
}

std::vector<Rational> RowSpace::reduce(std::vector<Rational> v) const {
  if (static_cast<int>(v.size()) != width_) throw DimensionMismatch("RowSpace: width mismatch");
  for (const Row& r : rows_) {
    Rational& coef = v[r.pivot];
    if (coef.is_zero()) continue;
    Rational f = coef;
    coef = Rational();
    for (int j = r.pivot + 1; j < width_; ++j) {
      if (!r.v[j].is_zero()) v[j] -= f * r.v[j];
    }
  }
  return v;
}

bool RowSpace::contains(const std::vector<Rational>& v) const {
  std::vector<Rational> res = reduce(v);
  for (const auto& x : res)
    if (!x.is_zero()) return false;
  return true;
}

std::optional<std::vector<Rational>> RowSpace::coordinates(const std::vector<Rational>& v) const {
  if (static_cast<int>(v.size()) != width_) throw DimensionMismatch("RowSpace: width mismatch");
  std::vector<Rational> work = v;
  std::vector<Rational> coords(rows_.size());
  for (size_t k = 0; k < rows_.size(); ++k) {
    const Row& r = rows_[k];
    Rational f = work[r.pivot];
    coords[k] = f;
    if (f.is_zero()) continue;
    work[r.pivot] = Rational();
    for (int j = r.pivot + 1; j < width_; ++j) {
      if (!r.v[j].is_zero()) work[j] -= f * r.v[j];
    }
  }
  for (const auto& x : work)
    if (!x.is_zero()) return std::nullopt;
  return coords;
}

bool RowSpace::same_span(const RowSpace& o) const {
  if (width_ != o.width_ || rows_.size() != o.rows_.size()) return false;
  for (size_t k = 0; k < rows_.size(); ++k) {
    if (rows_[k].pivot != o.rows_[k].pivot || rows_[k].v != o.rows_[k].v) return false;
  }
  return true;
}

}  // namespace poscomm
