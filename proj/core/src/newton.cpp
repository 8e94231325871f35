#include "singspec/newton.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "singspec/errors.hpp"
#include "singspec/linalg.hpp"

namespace singspec {

namespace {

Rational dot(const std::vector<Rational>& a, const MultiIndex& v) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * v[static_cast<int>(i)];
  return s;
}

// Support points not dominated componentwise by another support point;
// only these can lie on a compact facet.
std::vector<MultiIndex> minimal_points(const std::vector<MultiIndex>& support) {
  std::vector<MultiIndex> out;
  for (const auto& s : support) {
    bool dominated = false;
    for (const auto& t : support)
      if (t != s && t.divides(s)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(s);
  }
  return out;
}

void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool has_pure_power(const std::vector<MultiIndex>& support, int i) {
  for (const auto& s : support)
    if (s[i] > 0 && s[i] == s.degree()) return true;
  return false;
}

// ---- univariate helpers over Q for the square-free test

using UPoly = std::vector<Rational>;  // coefficient of t^j at index j

void trim(UPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

UPoly derivative(const UPoly& p) {
  UPoly d;
  for (std::size_t j = 1; j < p.size(); ++j) d.push_back(p[j] * static_cast<long>(j));
  trim(d);
  return d;
}

UPoly remainder(UPoly a, const UPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
    trim(a);
  }
  return a;
}

std::size_t gcd_degree(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? 0 : a.size() - 1;
}

bool face_square_free(const Polynomial& f, const Facet& facet) {
  std::vector<MultiIndex> pts = facet.points;
  std::sort(pts.begin(), pts.end(), [](const MultiIndex& a, const MultiIndex& b) {
    return a[0] < b[0];
  });
  const MultiIndex& p0 = pts.front();
  const MultiIndex& p1 = pts.back();
  int dx = p1[0] - p0[0];
  int dy = p0[1] - p1[1];
  int g = std::gcd(dx, dy);
  dx /= g;
  dy /= g;
  UPoly poly(static_cast<std::size_t>(g) + 1, Rational(0));
  for (const auto& p : pts) {
    int j = (p[0] - p0[0]) / dx;
    poly[static_cast<std::size_t>(j)] = f.coefficient(p);
  }
  return gcd_degree(poly, derivative(poly)) == 0;
}

}  // namespace

NewtonDiagram::NewtonDiagram(int nvars, std::vector<MultiIndex> support,
                             std::vector<Facet> facets, bool convenient)
    : nvars_(nvars),
      support_(std::move(support)),
      facets_(std::move(facets)),
      convenient_(convenient) {}

Rational NewtonDiagram::valuation(const MultiIndex& v) const {
  if (!convenient_) throw DomainError("valuation requires a convenient Newton diagram");
  if (v.is_one()) return 0;
  Rational best = dot(facets_.front().functional, v);
  for (std::size_t i = 1; i < facets_.size(); ++i) {
    Rational c = dot(facets_[i].functional, v);
    if (c < best) best = c;
  }
  return best;
}

Rational NewtonDiagram::valuation_by_cones(const MultiIndex& v) const {
  if (!convenient_) throw DomainError("valuation requires a convenient Newton diagram");
  if (v.is_one()) return 0;
  const std::size_t n = static_cast<std::size_t>(nvars_);
  Vector target(n);
  for (std::size_t i = 0; i < n; ++i) target[i] = v[static_cast<int>(i)];

  for (const auto& facet : facets_) {
    bool inside = false;
    for_each_subset(facet.points.size(), n, [&](const std::vector<std::size_t>& idx) {
      if (inside) return;
      // Columns are the chosen facet points.
      Matrix a(n, Vector(n));
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) a[r][c] = facet.points[idx[c]][static_cast<int>(r)];
      auto lambda = solve(a, target);
      if (!lambda) return;
      for (const auto& l : *lambda)
        if (sgn(l) < 0) return;
      inside = true;
    });
    if (inside) return dot(facet.functional, v);
  }
  throw ConsistencyError("point lies in no facet cone");
}

Rational NewtonDiagram::shifted_valuation(const MultiIndex& m) const {
  MultiIndex v(m);
  for (int i = 0; i < nvars_; ++i) v.set(i, m[i] + 1);
  return valuation(v);
}

NewtonDiagram newton_diagram(const Polynomial& f) {
  if (f.is_zero()) throw DomainError("Newton diagram of the zero polynomial");
  if (f.has_constant_term()) throw DomainError("germ must vanish at the origin");
  const int nvars = f.nvars();
  const std::size_t n = static_cast<std::size_t>(nvars);
  std::vector<MultiIndex> support = f.support();
  std::vector<MultiIndex> candidates = minimal_points(support);

  std::vector<Facet> facets;
  for_each_subset(candidates.size(), n, [&](const std::vector<std::size_t>& idx) {
    Matrix a(n, Vector(n));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) a[r][c] = candidates[idx[r]][static_cast<int>(c)];
    auto sol = solve(a, Vector(n, Rational(1)));
    if (!sol) return;
    for (const auto& x : *sol)
      if (sgn(x) <= 0) return;
    for (const auto& s : candidates)
      if (dot(*sol, s) < 1) return;
    for (const auto& existing : facets)
      if (existing.functional == *sol) return;
    Facet facet;
    facet.functional = std::move(*sol);
    for (const auto& s : candidates)
      if (dot(facet.functional, s) == 1) facet.points.push_back(s);
    facets.push_back(std::move(facet));
  });

  bool convenient = true;
  for (int i = 0; i < nvars; ++i) convenient = convenient && has_pure_power(support, i);
  if (convenient && facets.empty())
    throw ConsistencyError("convenient diagram without compact facets");
  return NewtonDiagram(nvars, std::move(support), std::move(facets), convenient);
}

std::vector<FacetVerdict> nondegeneracy_check(const Polynomial& f, const NewtonDiagram& d) {
  std::vector<FacetVerdict> out;
  for (const auto& facet : d.facets()) {
    if (facet.points.size() == static_cast<std::size_t>(d.nvars()) || d.nvars() == 1) {
      out.push_back(FacetVerdict::Nondegenerate);
    } else if (d.nvars() == 2) {
      out.push_back(face_square_free(f, facet) ? FacetVerdict::Nondegenerate
                                               : FacetVerdict::Unknown);
    } else {
      out.push_back(FacetVerdict::Unknown);
    }
  }
  return out;
}

bool is_nondegenerate(const Polynomial& f, const NewtonDiagram& d) {
  for (auto v : nondegeneracy_check(f, d))
    if (v != FacetVerdict::Nondegenerate) return false;
  return true;
}

Polynomial make_convenient(const Polynomial& f, const StdOptions& options) {
  std::vector<MultiIndex> support = f.support();
  std::vector<int> missing;
  for (int i = 0; i < f.nvars(); ++i)
    if (!has_pure_power(support, i)) missing.push_back(i);
  if (missing.empty()) return f;

  std::size_t mu = milnor_number(f, options);
  int m = static_cast<int>(mu) + 2;
  Polynomial g = f;
  for (int i : missing) {
    MultiIndex e(f.nvars());
    e.set(i, m);
    g += Polynomial::monomial(e);
  }
  std::size_t mu2 = milnor_number(g, options);
  if (mu2 != mu)
    throw ConsistencyError("adding pure powers changed the Milnor number from " +
                           std::to_string(mu) + " to " + std::to_string(mu2));
  return g;
}

}  // namespace singspec
