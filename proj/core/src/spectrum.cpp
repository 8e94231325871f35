#include "singspec/spectrum.hpp"

#include <algorithm>
#include <random>

#include "singspec/errors.hpp"
#include "singspec/linalg.hpp"

namespace singspec {

Spectrum::Spectrum(int dim, std::vector<Rational> exponents)
    : dim_(dim), xs_(std::move(exponents)) {
  if (dim < 1) throw DomainError("spectrum dimension must be positive");
  std::sort(xs_.begin(), xs_.end());
}

const Rational& Spectrum::min() const {
  if (xs_.empty()) throw DomainError("empty spectrum");
  return xs_.front();
}

const Rational& Spectrum::max() const {
  if (xs_.empty()) throw DomainError("empty spectrum");
  return xs_.back();
}

std::size_t Spectrum::multiplicity(const Rational& value) const {
  auto [lo, hi] = std::equal_range(xs_.begin(), xs_.end(), value);
  return static_cast<std::size_t>(hi - lo);
}

Rational Spectrum::sum() const { return singspec::sum(xs_); }

Spectrum Spectrum::without_largest(std::size_t count) const {
  if (count > xs_.size()) throw DomainError("cannot drop more exponents than present");
  return Spectrum(dim_, std::vector<Rational>(xs_.begin(), xs_.end() - static_cast<long>(count)));
}

std::vector<Rational> multiset_difference(const std::vector<Rational>& a,
                                          const std::vector<Rational>& b) {
  std::vector<Rational> sa = a, sb = b, out;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  std::size_t j = 0;
  for (const auto& x : sa) {
    if (j < sb.size() && sb[j] == x) {
      ++j;
      continue;
    }
    if (j < sb.size() && sb[j] < x) break;
    out.push_back(x);
  }
  if (j != sb.size()) throw DomainError("multiset difference: subtrahend is not a sub-multiset");
  return out;
}

MaximalBasis maximal_basis(const Polynomial& f, IdealKind kind, const SpectrumOptions& options) {
  NewtonDiagram diagram = newton_diagram(f);
  if (!diagram.convenient()) throw DomainError("maximal basis requires a convenient germ");
  if (!options.assume_nondegenerate && !is_nondegenerate(f, diagram))
    throw DegeneracyError("Newton non-degeneracy could not be established");

  IdealBasis ideal = kind == IdealKind::Jacobian ? jacobian_ideal(f) : tjurina_ideal(f);
  QuotientAlgebra quotient(standard_basis(ideal, options.std));

  std::vector<BasisEntry> candidates;
  for (auto& m : monomials_below_degree(f.nvars(), quotient.truncation_degree())) {
    Rational v = diagram.shifted_valuation(m);
    candidates.push_back({std::move(m), std::move(v)});
  }
  // Largest valuation first; the local order breaks ties.
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const BasisEntry& a, const BasisEntry& b) { return a.valuation > b.valuation; });
  if (options.shuffle_seed) {
    std::mt19937_64 rng(*options.shuffle_seed);
    auto first = candidates.begin();
    while (first != candidates.end()) {
      auto last = std::find_if(first, candidates.end(), [&](const BasisEntry& e) {
        return e.valuation != first->valuation;
      });
      std::shuffle(first, last, rng);
      first = last;
    }
  }

  MaximalBasis basis;
  basis.kind = kind;
  Echelon echelon(quotient.dimension());
  for (auto& c : candidates) {
    if (echelon.rank() == quotient.dimension()) break;
    if (echelon.insert(quotient.coordinates(c.monomial))) basis.entries.push_back(std::move(c));
  }
  if (echelon.rank() != quotient.dimension())
    throw ConsistencyError("candidate monomials do not span the quotient");
  std::reverse(basis.entries.begin(), basis.entries.end());
  return basis;
}

Spectrum spectrum_newton(const Polynomial& f, const SpectrumOptions& options) {
  Polynomial g = make_convenient(f, options.std);
  MaximalBasis basis = maximal_basis(g, IdealKind::Jacobian, options);
  std::vector<Rational> xs;
  for (const auto& e : basis.entries) xs.push_back(e.valuation);
  return Spectrum(f.nvars(), std::move(xs));
}

Spectrum spectrum_quasihomogeneous(const Polynomial& f, const WeightVector& w,
                                   const StdOptions& options) {
  if (w.nvars() != f.nvars()) throw DomainError("weight vector length mismatch");
  if (f.is_zero()) throw DomainError("zero polynomial");
  for (const auto& v : f.support())
    if (w.apply(v) != 1) throw DomainError("polynomial is not weighted homogeneous of degree 1");
  StandardBasis sb = standard_basis(jacobian_ideal(f), options);
  std::vector<Rational> xs;
  MultiIndex e(f.nvars());
  for (int i = 0; i < f.nvars(); ++i) e.set(i, 1);
  for (const auto& m : sb.standard_monomials()) xs.push_back(w.apply(m + e));
  return Spectrum(f.nvars(), std::move(xs));
}

bool check_symmetry(const Spectrum& s) {
  const auto& xs = s.exponents();
  const std::size_t mu = xs.size();
  for (std::size_t i = 0; i < mu; ++i)
    if (xs[i] + xs[mu - 1 - i] != s.dim()) return false;
  return true;
}

SpectrumStats stats(const Spectrum& s, const Rational& center) {
  if (s.empty()) throw DomainError("statistics of an empty spectrum");
  SpectrumStats out;
  out.sum_sq_dev = 0;
  for (const auto& x : s.exponents()) {
    Rational d = x - center;
    out.sum_sq_dev += d * d;
  }
  out.range = s.max() - s.min();
  out.mean = s.sum() / static_cast<long>(s.size());
  return out;
}

}  // namespace singspec
