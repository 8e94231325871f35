#pragma once

// Small dense exact linear algebra over Q.

#include <optional>
#include <vector>

#include "singspec/rational.hpp"

namespace singspec {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;

/// Solves A x = b for square A. Returns nullopt when A is singular.
std::optional<Vector> solve(Matrix a, Vector b);

/// Rank of a (not necessarily square) matrix.
std::size_t rank(Matrix a);

/// Incremental row echelon form used for greedy independence tests.
class Echelon {
 public:
  explicit Echelon(std::size_t ncols) : ncols_(ncols) {}

  std::size_t ncols() const noexcept { return ncols_; }
  std::size_t rank() const noexcept { return rows_.size(); }

  /// True when v is a combination of the rows inserted so far.
  bool in_span(const Vector& v) const;
  /// Inserts v if it is independent; returns whether it was.
  bool insert(Vector v);

 private:
  void reduce(Vector& v) const;

  std::size_t ncols_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace singspec
