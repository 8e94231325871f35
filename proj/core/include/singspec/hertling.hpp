#pragma once

// Exact checks of the variance inequality (1/mu) sum (a_i - c)^2 <= (a_max -
// a_min)/12 for spectra (c = (n+1)/2) and Tjurina spectra (c = mean).

#include <optional>
#include <string>
#include <vector>

#include "singspec/spectrum.hpp"

namespace singspec {

enum class CheckMode { Hertling, Ghcts, GhctsReduced };

std::string to_string(CheckMode mode);

struct InequalityVerdict {
  CheckMode mode = CheckMode::Hertling;
  bool holds = false;
  Rational lhs;    ///< (1/count) sum (a_i - center)^2
  Rational rhs;    ///< range / 12
  Rational slack;  ///< rhs - lhs
  Rational center;
  Rational sum_sq_dev;
  Rational range;
  std::size_t count = 0;
  /// sum (a_i - center)^2 - count * range / 12; <= 0 iff the inequality holds.
  Rational residual;
  /// Number of largest exponents removed before the check.
  std::size_t dropped = 0;
};

/// Centered at (n+1)/2. Throws DomainError when empty.
InequalityVerdict hertling_check(const Spectrum& s);
/// Centered at the mean. Throws DomainError when empty.
InequalityVerdict ghcts_check(const Spectrum& beta);
/// tau_max in {mu, mu-1, mu-2}: removes mu - tau_max largest exponents and
/// runs ghcts_check on the rest. Throws DomainError otherwise.
InequalityVerdict ghcts_reduced_check(const Spectrum& s, std::size_t tau_max);

struct Lemma510Result {
  Rational v1;
  Rational v2;
  bool ok = false;  ///< v1 >= v2
  /// Empty when the hypotheses hold, otherwise the first violated one.
  std::optional<std::string> hypothesis_violation;
};

/// For sorted positive x_1 <= ... <= x_m (m >= 3), 1 <= k <= m-2 and
/// b = (sum x)/m:
///   V1 = (1/(m-2)) sum_{j != m-1,m} x_j^2 - (1/(m-2)^2)(sum_{j != m-1,m} x_j)^2
///        - (x_{m-2} - x_1)/12
///   V2 = (1/(m-2)) sum_{j != k,m} x_j^2 - (1/(m-2)^2)(sum_{j != k,m} x_j)^2
///        - (x_{m-1} - x_1)/12
/// Both values are always computed; `ok` is only meaningful when the
/// hypothesis b >= (1/2)(1 - 4/m)^{-1}(x_m + x_{m-1}) holds. Throws
/// DomainError for m < 3 or k out of range.
Lemma510Result lemma510_compare(const std::vector<Rational>& xs, std::size_t k, const Rational& b);

}  // namespace singspec
