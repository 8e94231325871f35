#include "singspec/linalg.hpp"

#include <utility>

#include "singspec/errors.hpp"

namespace singspec {

std::optional<Vector> solve(Matrix a, Vector b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw DomainError("solve: dimension mismatch");
  for (const auto& row : a)
    if (row.size() != n) throw DomainError("solve: matrix is not square");

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(a[piv][col]) == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(a[r][col]) == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

std::size_t rank(Matrix a) {
  if (a.empty()) return 0;
  Echelon e(a.front().size());
  for (auto& row : a) e.insert(std::move(row));
  return e.rank();
}

void Echelon::reduce(Vector& v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational& c = v[pivots_[i]];
    if (sgn(c) == 0) continue;
    Rational f = c;
    const Vector& row = rows_[i];
    for (std::size_t j = pivots_[i]; j < ncols_; ++j)
      if (sgn(row[j]) != 0) v[j] -= f * row[j];
  }
}

bool Echelon::in_span(const Vector& v) const {
  if (v.size() != ncols_) throw DomainError("echelon: dimension mismatch");
  Vector w = v;
  reduce(w);
  for (const auto& x : w)
    if (sgn(x) != 0) return false;
  return true;
}

bool Echelon::insert(Vector v) {
  if (v.size() != ncols_) throw DomainError("echelon: dimension mismatch");
  reduce(v);
  std::size_t p = 0;
  while (p < ncols_ && sgn(v[p]) == 0) ++p;
  if (p == ncols_) return false;
  Rational lead = v[p];
  for (std::size_t j = p; j < ncols_; ++j) v[j] /= lead;
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

}  // namespace singspec
