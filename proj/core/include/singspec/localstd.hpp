#pragma once

// Local standard bases (Mora's tangent-cone algorithm) for ideals of the
// local ring O_{n+1}, and the finite-dimensional quotient O/I they describe.

#include <cstdint>
#include <optional>
#include <vector>

#include "singspec/poly.hpp"

namespace singspec {

inline constexpr std::uint64_t kDefaultReductionBudget = 10'000'000;

struct StdOptions {
  /// Maximum number of Mora reduction steps per standard-basis or
  /// normal-form computation.
  std::uint64_t reduction_budget = kDefaultReductionBudget;
};

/// Generators of an ideal; zero generators are dropped on construction.
class IdealBasis {
 public:
  IdealBasis(int nvars, std::vector<Polynomial> generators);

  int nvars() const noexcept { return nvars_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }

 private:
  int nvars_;
  std::vector<Polynomial> gens_;
};

/// J(f) = (d f/d x_0, ..., d f/d x_n).
IdealBasis jacobian_ideal(const Polynomial& f);
/// T(f) = (f, J(f)).
IdealBasis tjurina_ideal(const Polynomial& f);

class StandardBasis {
 public:
  StandardBasis(int nvars, std::vector<Polynomial> elements,
                std::optional<int> truncation = std::nullopt);

  int nvars() const noexcept { return nvars_; }
  /// Content-normalized elements; no leading monomial divides another.
  const std::vector<Polynomial>& elements() const noexcept { return elems_; }
  /// Minimal generators of the leading ideal L(I).
  std::vector<MultiIndex> leading_ideal() const;
  bool in_leading_ideal(const MultiIndex& m) const noexcept;
  /// True iff every variable has a pure power in L(I) (I is m-primary, or
  /// I is the unit ideal).
  bool is_zero_dimensional() const noexcept;
  bool is_unit_ideal() const noexcept;
  /// A degree D with m^D contained in I, once one was detected while the
  /// basis was built. Elements are then only known modulo m^D, and every
  /// monomial of degree >= D counts as a leading monomial.
  std::optional<int> truncation() const noexcept { return trunc_; }

  /// Monomials outside L(I), in decreasing local order. Throws
  /// NotIsolatedError when there are infinitely many.
  std::vector<MultiIndex> standard_monomials() const;
  /// dim_Q O/I, or nullopt when infinite.
  std::optional<std::size_t> colength() const;

 private:
  int nvars_;
  std::vector<Polynomial> elems_;
  std::optional<int> trunc_;
};

/// Mora's algorithm with the ecart-driven weak normal form. Throws
/// DomainError for the zero ideal and BudgetExceededError.
StandardBasis standard_basis(const IdealBasis& ideal, const StdOptions& options = {});

/// Mora weak normal form: u*g = NF + (element of I) for some unit u, and
/// NF = 0 iff g lies in the ideal.
Polynomial normal_form(const Polynomial& g, const StandardBasis& basis,
                       const StdOptions& options = {});

/// dim O/I; nullopt stands for "infinite".
std::optional<std::size_t> colength(const IdealBasis& ideal, const StdOptions& options = {});

/// mu(f). Throws DomainError when f has a constant term, NotIsolatedError
/// when mu is infinite.
std::size_t milnor_number(const Polynomial& f, const StdOptions& options = {});
/// tau(f), same error contract as milnor_number.
std::size_t tjurina_number(const Polynomial& f, const StdOptions& options = {});

/// f in J(f).
bool is_quasihomogeneous(const Polynomial& f, const StdOptions& options = {});

/// mu(f) + 2: f is right-equivalent to every germ in f + m^(mu+2).
std::size_t determinacy_bound(const Polynomial& f, const StdOptions& options = {});

/// O/I for an m-primary ideal, with exact linear normal forms expressed in
/// the standard-monomial basis.
class QuotientAlgebra {
 public:
  /// Throws NotIsolatedError unless the basis is m-primary.
  explicit QuotientAlgebra(StandardBasis basis);

  const StandardBasis& standard_basis() const noexcept { return basis_; }
  std::size_t dimension() const noexcept { return monomials_.size(); }
  /// Standard monomials in decreasing local order; coordinate i refers to
  /// monomials()[i].
  const std::vector<MultiIndex>& monomials() const noexcept { return monomials_; }
  /// D with m^D contained in I (one more than the top standard degree).
  int truncation_degree() const noexcept { return truncation_; }

  /// The unique representative of g mod I supported on standard monomials.
  Polynomial reduce(const Polynomial& g) const;
  std::vector<Rational> coordinates(const Polynomial& g) const;
  std::vector<Rational> coordinates(const MultiIndex& m) const;

 private:
  StandardBasis basis_;
  std::vector<MultiIndex> monomials_;
  int truncation_ = 0;
};

/// Every exponent vector in `nvars` variables of total degree < `degree`,
/// in decreasing local order.
std::vector<MultiIndex> monomials_below_degree(int nvars, int degree);

}  // namespace singspec
