#include "singspec/localstd.hpp"

#include <algorithm>
#include <climits>
#include <map>

#include "singspec/errors.hpp"

namespace singspec {

namespace {

class Budget {
 public:
  explicit Budget(std::uint64_t limit) : limit_(limit) {}
  void tick() {
    if (++used_ > limit_)
      throw BudgetExceededError("reduction budget of " + std::to_string(limit_) +
                                " steps exceeded");
  }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

// One reduction step h <- h - (LC(h)/LC(g)) x^(LM(h)-LM(g)) g.
Polynomial reduce_step(const Polynomial& h, const Polynomial& g) {
  Rational c = h.leading_coefficient() / g.leading_coefficient();
  return h - g.mul_term(h.leading_monomial() - g.leading_monomial(), c);
}

// Mora's weak normal form. `base` is the current basis; intermediate
// remainders with small ecart are appended to a private reducer set T.
// Terms of degree >= `trunc` are discarded (they lie in the ideal). With a
// finite `trunc` only finitely many monomials remain, so plain reduction
// terminates and T stays empty.
Polynomial mora_normal_form(Polynomial h, const std::vector<Polynomial>& base,
                            const std::vector<int>& base_ecart, int trunc, Budget& budget) {
  h = h.truncated(trunc);
  std::vector<Polynomial> extra;
  std::vector<int> extra_ecart;
  while (!h.is_zero()) {
    const MultiIndex& lm = h.leading_monomial();
    const Polynomial* best = nullptr;
    int best_ecart = INT_MAX;
    for (std::size_t i = 0; i < base.size(); ++i) {
      if (base_ecart[i] < best_ecart && !base[i].is_zero() &&
          base[i].leading_monomial().divides(lm)) {
        best = &base[i];
        best_ecart = base_ecart[i];
      }
    }
    for (std::size_t i = 0; i < extra.size(); ++i) {
      if (extra_ecart[i] < best_ecart && extra[i].leading_monomial().divides(lm)) {
        best = &extra[i];
        best_ecart = extra_ecart[i];
      }
    }
    if (best == nullptr) break;
    budget.tick();
    Polynomial next = reduce_step(h, *best).truncated(trunc).primitive();
    if (int eh = h.ecart(); trunc == INT_MAX && best_ecart > eh) {
      extra.push_back(std::move(h));
      extra_ecart.push_back(eh);
    }
    h = std::move(next);
  }
  return h;
}

// One more than the largest degree of a monomial outside the monomial ideal
// generated by `lms`, or nullopt when there are infinitely many such
// monomials. Only monomials of degree < `trunc` are considered.
std::optional<int> corner_degree(const std::vector<MultiIndex>& lms, int nvars, int trunc) {
  std::vector<int> bound(static_cast<std::size_t>(nvars), INT_MAX);
  for (const auto& lm : lms) {
    if (lm.is_one()) return 0;
    for (int i = 0; i < nvars; ++i)
      if (lm[i] == lm.degree())
        bound[static_cast<std::size_t>(i)] = std::min(bound[static_cast<std::size_t>(i)], lm[i]);
  }
  if (trunc != INT_MAX)
    for (auto& b : bound) b = std::min(b, trunc);
  for (int b : bound)
    if (b == INT_MAX) return std::nullopt;

  int top = -1;
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  while (true) {
    MultiIndex m = MultiIndex::from_span(e);
    if (m.degree() > top && m.degree() < trunc) {
      bool inside = false;
      for (const auto& lm : lms)
        if (lm.divides(m)) {
          inside = true;
          break;
        }
      if (!inside) top = m.degree();
    }
    int i = 0;
    for (; i < nvars; ++i) {
      if (++e[static_cast<std::size_t>(i)] < bound[static_cast<std::size_t>(i)]) break;
      e[static_cast<std::size_t>(i)] = 0;
    }
    if (i == nvars) break;
  }
  return top + 1;
}

Polynomial spoly(const Polynomial& f, const Polynomial& g) {
  MultiIndex m = f.leading_monomial().lcm(g.leading_monomial());
  return f.mul_term(m - f.leading_monomial(), g.leading_coefficient()) -
         g.mul_term(m - g.leading_monomial(), f.leading_coefficient());
}

std::vector<int> ecarts(const std::vector<Polynomial>& ps) {
  std::vector<int> e;
  e.reserve(ps.size());
  for (const auto& p : ps) e.push_back(p.is_zero() ? 0 : p.ecart());
  return e;
}

void enumerate_monomials(int nvars, int degree, std::vector<int>& current, int var,
                         int remaining, std::vector<MultiIndex>& out) {
  if (var == nvars) {
    out.push_back(MultiIndex::from_span(current));
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    current[static_cast<std::size_t>(var)] = e;
    enumerate_monomials(nvars, degree, current, var + 1, remaining - e, out);
  }
  current[static_cast<std::size_t>(var)] = 0;
}

}  // namespace

// --------------------------------------------------------------- IdealBasis

IdealBasis::IdealBasis(int nvars, std::vector<Polynomial> generators) : nvars_(nvars) {
  for (auto& g : generators) {
    if (g.nvars() != nvars) throw DomainError("ideal generator variable count mismatch");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

IdealBasis jacobian_ideal(const Polynomial& f) {
  return IdealBasis(f.nvars(), jacobian_generators(f));
}

IdealBasis tjurina_ideal(const Polynomial& f) {
  std::vector<Polynomial> gens{f};
  for (auto& p : jacobian_generators(f)) gens.push_back(std::move(p));
  return IdealBasis(f.nvars(), std::move(gens));
}

// ------------------------------------------------------------ StandardBasis

StandardBasis::StandardBasis(int nvars, std::vector<Polynomial> elements,
                             std::optional<int> truncation)
    : nvars_(nvars), elems_(std::move(elements)), trunc_(truncation) {}

std::vector<MultiIndex> StandardBasis::leading_ideal() const {
  std::vector<MultiIndex> out;
  for (const auto& p : elems_) out.push_back(p.leading_monomial());
  std::sort(out.begin(), out.end(), LocalGreater{});
  return out;
}

bool StandardBasis::in_leading_ideal(const MultiIndex& m) const noexcept {
  if (trunc_ && m.degree() >= *trunc_) return true;
  for (const auto& p : elems_)
    if (p.leading_monomial().divides(m)) return true;
  return false;
}

bool StandardBasis::is_unit_ideal() const noexcept {
  if (trunc_ && *trunc_ == 0) return true;
  for (const auto& p : elems_)
    if (p.leading_monomial().is_one()) return true;
  return false;
}

bool StandardBasis::is_zero_dimensional() const noexcept {
  if (trunc_ || is_unit_ideal()) return true;
  for (int i = 0; i < nvars_; ++i) {
    bool found = false;
    for (const auto& p : elems_) {
      const MultiIndex& lm = p.leading_monomial();
      if (lm[i] > 0 && lm[i] == lm.degree()) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::vector<MultiIndex> StandardBasis::standard_monomials() const {
  if (!is_zero_dimensional())
    throw NotIsolatedError("ideal is not m-primary: infinitely many standard monomials");
  std::vector<MultiIndex> out;
  if (is_unit_ideal()) return out;
  auto top = corner_degree(leading_ideal(), nvars_, trunc_.value_or(INT_MAX));
  for (auto& m : monomials_below_degree(nvars_, *top))
    if (!in_leading_ideal(m)) out.push_back(std::move(m));
  return out;
}

std::optional<std::size_t> StandardBasis::colength() const {
  if (!is_zero_dimensional()) return std::nullopt;
  return standard_monomials().size();
}

namespace {

struct RawBasis {
  std::vector<Polynomial> elements;
  int trunc = INT_MAX;
};

// Mora's algorithm for I + m^trunc (trunc = INT_MAX: for I itself).
RawBasis mora_basis(const IdealBasis& ideal, int trunc, Budget& budget) {
  const int nvars = ideal.nvars();
  std::vector<Polynomial> basis;
  for (const auto& g : ideal.generators()) basis.push_back(g.truncated(trunc).primitive());
  std::vector<int> basis_ecart = ecarts(basis);

  // Once every monomial of some degree D is a leading monomial, m^D lies in
  // the ideal and all later work can be done modulo m^D.
  auto tighten = [&] {
    std::vector<MultiIndex> lms;
    for (const auto& b : basis)
      if (!b.is_zero()) lms.push_back(b.leading_monomial());
    auto d = corner_degree(lms, nvars, trunc);
    if (!d || *d >= trunc) return;
    trunc = *d;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      basis[i] = basis[i].truncated(trunc);
      basis_ecart[i] = basis[i].is_zero() ? 0 : basis[i].ecart();
    }
  };

  struct Pair {
    std::size_t i, j;
    int lcm_degree;
  };
  std::vector<Pair> pairs;
  auto add_pairs_for = [&](std::size_t k) {
    if (basis[k].is_zero()) return;
    for (std::size_t i = 0; i < k; ++i) {
      if (basis[i].is_zero()) continue;
      int d = basis[i].leading_monomial().lcm(basis[k].leading_monomial()).degree();
      pairs.push_back({i, k, d});
    }
  };
  for (std::size_t k = 1; k < basis.size(); ++k) add_pairs_for(k);
  tighten();

  while (!pairs.empty() && trunc != 0) {
    // Normal strategy: smallest lcm degree first, oldest pair on ties.
    auto it = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
      if (a.lcm_degree != b.lcm_degree) return a.lcm_degree < b.lcm_degree;
      if (a.j != b.j) return a.j < b.j;
      return a.i < b.i;
    });
    Pair p = *it;
    pairs.erase(it);
    if (p.lcm_degree >= trunc || basis[p.i].is_zero() || basis[p.j].is_zero()) continue;
    Polynomial s = spoly(basis[p.i], basis[p.j]);
    Polynomial h = mora_normal_form(std::move(s), basis, basis_ecart, trunc, budget);
    if (h.is_zero()) continue;
    h = h.primitive();
    basis_ecart.push_back(h.ecart());
    basis.push_back(std::move(h));
    add_pairs_for(basis.size() - 1);
    tighten();
  }
  return {std::move(basis), trunc};
}

constexpr std::uint64_t kFirstAttemptBudget = 200;
constexpr int kFirstTentativeDegree = 4;
constexpr int kMaxTentativeDegree = 256;

}  // namespace

StandardBasis standard_basis(const IdealBasis& ideal, const StdOptions& options) {
  if (ideal.is_zero()) throw DomainError("standard basis of the zero ideal");
  const int nvars = ideal.nvars();
  Budget budget(options.reduction_budget);

  // A short untruncated run settles easy and non-isolated cases. Otherwise
  // compute modulo m^D for growing D: a corner found below D proves m^c in
  // I + m^D, hence m^c in I by Nakayama, and the truncated basis is exact.
  std::optional<RawBasis> raw;
  try {
    Budget first(std::min(kFirstAttemptBudget, options.reduction_budget));
    raw = mora_basis(ideal, INT_MAX, first);
  } catch (const BudgetExceededError&) {
    for (int d = kFirstTentativeDegree; d <= kMaxTentativeDegree && !raw;
         d += std::max(2, d / 4)) {
      RawBasis attempt = mora_basis(ideal, d, budget);
      if (attempt.trunc < d) raw = std::move(attempt);
    }
    if (!raw) raw = mora_basis(ideal, INT_MAX, budget);
  }
  std::vector<Polynomial>& basis = raw->elements;
  const int trunc = raw->trunc;

  std::optional<int> truncation;
  if (trunc != INT_MAX) truncation = trunc;
  if (trunc == 0)
    return StandardBasis(nvars, {Polynomial::constant(nvars, 1)}, std::nullopt);

  // Drop elements whose leading monomial is a multiple of another one.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].is_zero()) continue;
    const MultiIndex& lm = basis[i].leading_monomial();
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (j == i || basis[j].is_zero()) continue;
      const MultiIndex& other = basis[j].leading_monomial();
      if (other.divides(lm) && (other != lm || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::sort(minimal.begin(), minimal.end(), [](const Polynomial& a, const Polynomial& b) {
    return LocalGreater{}(a.leading_monomial(), b.leading_monomial());
  });
  return StandardBasis(nvars, std::move(minimal), truncation);
}

Polynomial normal_form(const Polynomial& g, const StandardBasis& basis,
                       const StdOptions& options) {
  if (g.nvars() != basis.nvars()) throw DomainError("normal form: variable count mismatch");
  Budget budget(options.reduction_budget);
  return mora_normal_form(g, basis.elements(), ecarts(basis.elements()),
                          basis.truncation().value_or(INT_MAX), budget);
}

std::optional<std::size_t> colength(const IdealBasis& ideal, const StdOptions& options) {
  if (ideal.is_zero()) return std::nullopt;
  return standard_basis(ideal, options).colength();
}

namespace {

std::size_t finite_colength(const IdealBasis& ideal, const StdOptions& options,
                            const char* what) {
  auto c = colength(ideal, options);
  if (!c) throw NotIsolatedError(std::string(what) + " is infinite: not an isolated singularity");
  return *c;
}

void require_in_maximal_ideal(const Polynomial& f) {
  if (f.has_constant_term()) throw DomainError("germ must vanish at the origin");
}

}  // namespace

std::size_t milnor_number(const Polynomial& f, const StdOptions& options) {
  require_in_maximal_ideal(f);
  return finite_colength(jacobian_ideal(f), options, "Milnor number");
}

std::size_t tjurina_number(const Polynomial& f, const StdOptions& options) {
  require_in_maximal_ideal(f);
  return finite_colength(tjurina_ideal(f), options, "Tjurina number");
}

bool is_quasihomogeneous(const Polynomial& f, const StdOptions& options) {
  require_in_maximal_ideal(f);
  IdealBasis j = jacobian_ideal(f);
  if (j.is_zero()) throw NotIsolatedError("zero Jacobian ideal");
  StandardBasis sb = standard_basis(j, options);
  if (!sb.is_zero_dimensional()) throw NotIsolatedError("not an isolated singularity");
  return normal_form(f, sb, options).is_zero();
}

std::size_t determinacy_bound(const Polynomial& f, const StdOptions& options) {
  return milnor_number(f, options) + 2;
}

// ---------------------------------------------------------- QuotientAlgebra

QuotientAlgebra::QuotientAlgebra(StandardBasis basis) : basis_(std::move(basis)) {
  monomials_ = basis_.standard_monomials();
  int top = -1;
  for (const auto& m : monomials_) top = std::max(top, m.degree());
  truncation_ = top + 1;
}

Polynomial QuotientAlgebra::reduce(const Polynomial& g) const {
  if (g.nvars() != basis_.nvars()) throw DomainError("reduce: variable count mismatch");
  std::map<MultiIndex, Rational, LocalGreater> h;
  for (const auto& [m, c] : g.terms()) {
    if (m.degree() >= truncation_) break;
    h.emplace(m, c);
  }
  const auto& elems = basis_.elements();
  // Reducing a term only creates strictly smaller terms, so one forward
  // sweep suffices; everything of degree >= D lies in the ideal.
  for (auto it = h.begin(); it != h.end();) {
    if (it->first.degree() >= truncation_) {
      h.erase(it, h.end());
      break;
    }
    const Polynomial* reducer = nullptr;
    for (const auto& s : elems) {
      if (s.leading_monomial().divides(it->first) &&
          (reducer == nullptr || s.size() < reducer->size()))
        reducer = &s;
    }
    if (reducer == nullptr) {
      ++it;
      continue;
    }
    Rational c = it->second / reducer->leading_coefficient();
    MultiIndex shift = it->first - reducer->leading_monomial();
    const auto& terms = reducer->terms();
    for (std::size_t k = 1; k < terms.size(); ++k) {
      MultiIndex m = terms[k].first + shift;
      if (m.degree() >= truncation_) break;
      auto [slot, inserted] = h.try_emplace(m, 0);
      slot->second -= c * terms[k].second;
      if (sgn(slot->second) == 0) h.erase(slot);
    }
    it = h.erase(it);
  }
  std::vector<Polynomial::Term> terms(h.begin(), h.end());
  return Polynomial::from_terms(g.nvars(), std::move(terms));
}

std::vector<Rational> QuotientAlgebra::coordinates(const Polynomial& g) const {
  Polynomial r = reduce(g);
  std::vector<Rational> out(monomials_.size(), Rational(0));
  // Both sequences are in decreasing local order.
  std::size_t i = 0;
  for (const auto& [m, c] : r.terms()) {
    while (i < monomials_.size() && monomials_[i] != m) ++i;
    if (i == monomials_.size()) throw ConsistencyError("reduced form left the standard basis");
    out[i] = c;
  }
  return out;
}

std::vector<Rational> QuotientAlgebra::coordinates(const MultiIndex& m) const {
  return coordinates(Polynomial::monomial(m));
}

std::vector<MultiIndex> monomials_below_degree(int nvars, int degree) {
  std::vector<MultiIndex> out;
  if (degree <= 0) return out;
  std::vector<int> current(static_cast<std::size_t>(nvars), 0);
  enumerate_monomials(nvars, degree, current, 0, degree - 1, out);
  std::sort(out.begin(), out.end(), LocalGreater{});
  return out;
}

}  // namespace singspec
