#pragma once

// Spectrum of an isolated hypersurface singularity via a maximal basis for
// the shifted Newton filtration, and the weighted homogeneous formula.

#include <cstdint>
#include <optional>
#include <vector>

#include "singspec/localstd.hpp"
#include "singspec/newton.hpp"
#include "singspec/poly.hpp"

namespace singspec {

/// Sorted multiset of spectral numbers of a germ in `dim` = n+1 variables.
class Spectrum {
 public:
  Spectrum() = default;
  Spectrum(int dim, std::vector<Rational> exponents);

  int dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return xs_.size(); }
  bool empty() const noexcept { return xs_.empty(); }
  const std::vector<Rational>& exponents() const noexcept { return xs_; }
  const Rational& operator[](std::size_t i) const { return xs_[i]; }

  /// Throw DomainError when empty.
  const Rational& min() const;
  const Rational& max() const;
  std::size_t multiplicity(const Rational& value) const;
  Rational sum() const;

  /// The spectrum with its `count` largest exponents removed.
  Spectrum without_largest(std::size_t count) const;

  friend bool operator==(const Spectrum& a, const Spectrum& b) {
    return a.dim_ == b.dim_ && a.xs_ == b.xs_;
  }

 private:
  int dim_ = 1;
  std::vector<Rational> xs_;
};

/// Sub-multiset difference a - b. Throws DomainError when b is not
/// contained in a.
std::vector<Rational> multiset_difference(const std::vector<Rational>& a,
                                          const std::vector<Rational>& b);

enum class IdealKind { Jacobian, Tjurina };

struct BasisEntry {
  MultiIndex monomial;
  Rational valuation;
};

/// Monomials forming a basis of O/I, in weakly increasing shifted valuation.
struct MaximalBasis {
  IdealKind kind = IdealKind::Jacobian;
  std::vector<BasisEntry> entries;
};

struct SpectrumOptions {
  StdOptions std;
  /// Proceed when non-degeneracy cannot be decided.
  bool assume_nondegenerate = false;
  /// Shuffle the candidate order within equal-valuation groups.
  std::optional<std::uint64_t> shuffle_seed;
};

/// Greedy maximal basis: monomials are visited in decreasing shifted
/// valuation and kept when independent modulo I of those already kept.
/// `f` must be convenient. Throws DegeneracyError when a facet is not
/// known to be non-degenerate (unless assumed), NotIsolatedError.
MaximalBasis maximal_basis(const Polynomial& f, IdealKind kind,
                           const SpectrumOptions& options = {});

/// Spectrum from the Jacobian maximal basis. Adds pure powers first when f
/// is not convenient.
Spectrum spectrum_newton(const Polynomial& f, const SpectrumOptions& options = {});

/// {(alpha + e) . w} over the standard monomials of the Milnor algebra.
/// Throws DomainError unless every support point v has w . v = 1.
Spectrum spectrum_quasihomogeneous(const Polynomial& f, const WeightVector& w,
                                   const StdOptions& options = {});

/// alpha_i + alpha_{mu+1-i} = n+1 for every i.
bool check_symmetry(const Spectrum& s);

struct SpectrumStats {
  Rational sum_sq_dev;
  Rational range;
  Rational mean;
};

/// Sum of squared deviations from `center`, range and mean. Throws
/// DomainError for an empty multiset.
SpectrumStats stats(const Spectrum& s, const Rational& center);

}  // namespace singspec
