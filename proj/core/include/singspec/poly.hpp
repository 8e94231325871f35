#pragma once

// Exact multivariate polynomials over Q with a local (negative-degree) order.

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "singspec/rational.hpp"

namespace singspec {

/// Largest supported ambient variable count n+1.
inline constexpr int kMaxVars = 8;

/// Exponent vector alpha of the monomial x^alpha.
class MultiIndex {
 public:
  MultiIndex() = default;
  /// The zero exponent (the monomial 1) in `nvars` variables.
  explicit MultiIndex(int nvars);
  MultiIndex(std::initializer_list<int> exponents);
  static MultiIndex from_span(std::span<const int> exponents);
  /// x_i as an exponent vector.
  static MultiIndex unit(int nvars, int i);

  int nvars() const noexcept { return n_; }
  int operator[](int i) const noexcept { return e_[static_cast<std::size_t>(i)]; }
  void set(int i, int value);
  /// |alpha|.
  int degree() const noexcept { return static_cast<int>(deg_); }
  bool is_one() const noexcept { return deg_ == 0; }

  /// True when x^this divides x^other.
  bool divides(const MultiIndex& other) const noexcept;
  MultiIndex operator+(const MultiIndex& other) const;
  /// Requires `other.divides(*this)`.
  MultiIndex operator-(const MultiIndex& other) const;
  MultiIndex lcm(const MultiIndex& other) const;
  bool coprime(const MultiIndex& other) const noexcept;

  std::vector<int> to_vector() const;

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) noexcept {
    return a.n_ == b.n_ && a.e_ == b.e_;
  }
  /// Plain lexicographic comparison of raw exponents; use LocalOrder for
  /// the monomial order.
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) noexcept {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.e_ <=> b.e_;
  }

 private:
  std::array<std::uint16_t, kMaxVars> e_{};
  std::uint8_t n_ = 0;
  std::uint32_t deg_ = 0;
};

/// Negative total degree, ties broken lexicographically with
/// x_0 > x_1 > ... > x_n. 1 is the largest monomial.
struct LocalOrder {
  static std::strong_ordering compare(const MultiIndex& a, const MultiIndex& b) noexcept;
};

/// Strict "greater in the local order"; sorts leading terms first.
struct LocalGreater {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const noexcept {
    return LocalOrder::compare(a, b) > 0;
  }
};

/// Strictly positive weights w, one per variable.
class WeightVector {
 public:
  explicit WeightVector(std::vector<Rational> weights);
  const std::vector<Rational>& weights() const noexcept { return w_; }
  int nvars() const noexcept { return static_cast<int>(w_.size()); }
  /// w . alpha
  Rational apply(const MultiIndex& alpha) const;

 private:
  std::vector<Rational> w_;
};

class Polynomial {
 public:
  using Term = std::pair<MultiIndex, Rational>;

  /// The zero polynomial in `nvars` variables.
  explicit Polynomial(int nvars = 1);
  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial monomial(const MultiIndex& m, const Rational& c = 1);
  /// Builds from arbitrary (unsorted, possibly repeated or zero) terms.
  static Polynomial from_terms(int nvars, std::vector<Term> terms);

  int nvars() const noexcept { return nvars_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  /// Terms sorted by decreasing local order (leading term first).
  const std::vector<Term>& terms() const noexcept { return terms_; }

  const MultiIndex& leading_monomial() const;
  const Rational& leading_coefficient() const;
  Rational coefficient(const MultiIndex& m) const;
  /// Supp(f), in decreasing local order.
  std::vector<MultiIndex> support() const;
  /// Highest total degree of a term; -1 for zero.
  int max_degree() const noexcept;
  /// ecart(f) = max_degree - deg(LM(f)).
  int ecart() const;
  bool has_constant_term() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& g);
  Polynomial& operator-=(const Polynomial& g);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
  friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
  friend Polynomial operator*(Polynomial f, const Rational& c) { return f *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial f) { return f *= c; }
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);

  /// c * x^m * f
  Polynomial mul_term(const MultiIndex& m, const Rational& c) const;
  /// Drops every term of total degree >= `degree`.
  Polynomial truncated(int degree) const;
  /// Scales to coprime integer coefficients with a positive leading one.
  Polynomial primitive() const;

  friend bool operator==(const Polynomial& f, const Polynomial& g) {
    return f.nvars_ == g.nvars_ && f.terms_ == g.terms_;
  }

 private:
  int nvars_;
  std::vector<Term> terms_;
};

enum class VarNaming {
  Auto,     ///< x,y,z for up to three variables, x0..xn otherwise
  Indexed,  ///< always x0..xn
};

/// Canonical text: terms in decreasing local order, coefficients as p/q.
std::string to_string(const Polynomial& f, VarNaming naming = VarNaming::Auto);
std::string variable_name(int index, int nvars, VarNaming naming = VarNaming::Auto);

/// Parses a signed sum of rational-coefficient monomials in x,y,z or
/// x0..xn. `^` is a power, `*` is optional. Throws ParseError.
Polynomial parse(std::string_view text, int nvars);
/// Smallest variable count that covers every variable named in `text`
/// (at least 1). Throws ParseError.
int infer_nvars(std::string_view text);

/// d f / d x_i. Throws DomainError for an index out of range.
Polynomial partial(const Polynomial& f, int i);
/// The n+1 partial derivatives in variable order.
std::vector<Polynomial> jacobian_generators(const Polynomial& f);

struct WeightedOrder {
  Rational degree;
  Polynomial principal_part;
};

/// d = min w.v over Supp(f) and the terms attaining it. Throws DomainError
/// for the zero polynomial or a weight-length mismatch.
WeightedOrder weighted_order(const Polynomial& f, const WeightVector& w);

}  // namespace singspec
