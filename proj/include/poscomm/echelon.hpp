#pragma once

#include <optional>
#include <vector>

#include "poscomm/rational.hpp"

namespace poscomm {

// Incrementally maintained reduced row echelon form of a rational subspace.
// Rows are kept fully reduced with pivot entries equal to 1, so the stored
// basis is the canonical one for the subspace regardless of insertion order.
class RowSpace {
 public:
  struct Row {
    std::vector<Rational> v;
    int pivot;
  };

  explicit RowSpace(int width);

  int width() const { return width_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<Row>& rows() const { return rows_; }

  // Adds v to the span; returns true if the dimension grew.
  bool insert(std::vector<Rational> v);

  // Residual of v after reduction against the current rows.
  std::vector<Rational> reduce(std::vector<Rational> v) const;

  bool contains(const std::vector<Rational>& v) const;

  // Coefficients of v over rows() when v lies in the span.
  std::optional<std::vector<Rational>> coordinates(const std::vector<Rational>& v) const;

  bool same_span(const RowSpace& o) const;

 private:
  int width_;
  std::vector<Row> rows_;  // sorted by pivot column
};

}  // namespace poscomm
