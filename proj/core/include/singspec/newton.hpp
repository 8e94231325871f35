#pragma once

// Newton diagram of a germ, the piecewise-linear Newton valuation and the
// shifted valuation v(g) = phi(x^e g).

#include <vector>

#include "singspec/localstd.hpp"
#include "singspec/poly.hpp"

namespace singspec {

/// A compact facet of the Newton diagram together with its functional a,
/// normalized so that a . p = 1 on the facet.
struct Facet {
  std::vector<MultiIndex> points;  ///< support points on the facet
  std::vector<Rational> functional;
};

class NewtonDiagram {
 public:
  NewtonDiagram(int nvars, std::vector<MultiIndex> support, std::vector<Facet> facets,
                bool convenient);

  int nvars() const noexcept { return nvars_; }
  const std::vector<MultiIndex>& support() const noexcept { return support_; }
  const std::vector<Facet>& facets() const noexcept { return facets_; }
  bool convenient() const noexcept { return convenient_; }

  /// phi(v) = min over facets of a . v. Throws DomainError when the diagram
  /// is not convenient.
  Rational valuation(const MultiIndex& v) const;
  /// phi(v) located through the cone over the facet that contains v.
  /// Independent code path used for cross-checks.
  Rational valuation_by_cones(const MultiIndex& v) const;
  /// phi(m + (1,...,1)).
  Rational shifted_valuation(const MultiIndex& m) const;

 private:
  int nvars_;
  std::vector<MultiIndex> support_;
  std::vector<Facet> facets_;
  bool convenient_;
};

/// Throws DomainError for the zero polynomial or a germ with constant term.
NewtonDiagram newton_diagram(const Polynomial& f);

enum class FacetVerdict { Nondegenerate, Unknown };

/// One verdict per facet of `d`, in the same order. A facet carrying exactly
/// n+1 support points is simplicial and hence non-degenerate; in two
/// variables a facet is non-degenerate iff its face polynomial is square
/// free.
std::vector<FacetVerdict> nondegeneracy_check(const Polynomial& f, const NewtonDiagram& d);

/// True when every verdict is Nondegenerate.
bool is_nondegenerate(const Polynomial& f, const NewtonDiagram& d);

/// f + sum of x_i^(mu+2) over the variables without a pure power in Supp(f).
/// Throws ConsistencyError if mu changes.
Polynomial make_convenient(const Polynomial& f, const StdOptions& options = {});

}  // namespace singspec
