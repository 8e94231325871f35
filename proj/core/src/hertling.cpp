#include "singspec/hertling.hpp"

#include <algorithm>

#include "singspec/errors.hpp"

namespace singspec {

std::string to_string(CheckMode mode) {
  switch (mode) {
    case CheckMode::Hertling: return "hertling";
    case CheckMode::Ghcts: return "ghcts";
    case CheckMode::GhctsReduced: return "ghcts-reduced";
  }
  return "unknown";
}

namespace {

InequalityVerdict verdict(const Spectrum& s, const Rational& center, CheckMode mode) {
  SpectrumStats st = stats(s, center);
  InequalityVerdict v;
  v.mode = mode;
  v.center = center;
  v.count = s.size();
  v.sum_sq_dev = st.sum_sq_dev;
  v.range = st.range;
  v.lhs = st.sum_sq_dev / static_cast<long>(s.size());
  v.rhs = st.range / 12;
  v.slack = v.rhs - v.lhs;
  v.holds = sgn(v.slack) >= 0;
  v.residual = st.sum_sq_dev - Rational(static_cast<long>(s.size())) * st.range / 12;
  return v;
}

}  // namespace

InequalityVerdict hertling_check(const Spectrum& s) {
  if (s.empty()) throw DomainError("Hertling check of an empty spectrum");
  Rational center(s.dim(), 2);
  center.canonicalize();
  return verdict(s, center, CheckMode::Hertling);
}

InequalityVerdict ghcts_check(const Spectrum& beta) {
  if (beta.empty()) throw DomainError("GHCTS check of an empty multiset");
  return verdict(beta, beta.sum() / static_cast<long>(beta.size()), CheckMode::Ghcts);
}

InequalityVerdict ghcts_reduced_check(const Spectrum& s, std::size_t tau_max) {
  const std::size_t mu = s.size();
  if (tau_max > mu || mu - tau_max > 2)
    throw DomainError("tau_max must be one of mu, mu-1, mu-2 (mu = " + std::to_string(mu) +
                      ", got " + std::to_string(tau_max) + ")");
  Spectrum rest = s.without_largest(mu - tau_max);
  InequalityVerdict v = ghcts_check(rest);
  v.mode = CheckMode::GhctsReduced;
  v.dropped = mu - tau_max;
  return v;
}

Lemma510Result lemma510_compare(const std::vector<Rational>& xs, std::size_t k,
                                const Rational& b) {
  const std::size_t m = xs.size();
  if (m < 3) throw DomainError("lemma 5.10 comparison needs at least three values");
  if (k < 1 || k > m - 2) throw DomainError("k must satisfy 1 <= k <= m-2");
  auto x = [&](std::size_t i) -> const Rational& { return xs[i - 1]; };

  auto variance_part = [&](std::size_t skip1, std::size_t skip2) -> Rational {
    Rational sq = 0, lin = 0;
    for (std::size_t j = 1; j <= m; ++j) {
      if (j == skip1 || j == skip2) continue;
      sq += x(j) * x(j);
      lin += x(j);
    }
    Rational d = static_cast<long>(m - 2);
    return sq / d - lin * lin / (d * d);
  };

  Lemma510Result r;
  r.v1 = variance_part(m - 1, m) - (x(m - 2) - x(1)) / 12;
  r.v2 = variance_part(k, m) - (x(m - 1) - x(1)) / 12;
  r.ok = r.v1 >= r.v2;

  for (std::size_t i = 1; i <= m; ++i) {
    if (sgn(x(i)) <= 0) {
      r.hypothesis_violation = "values must be positive";
      return r;
    }
    if (i > 1 && x(i) < x(i - 1)) {
      r.hypothesis_violation = "values must be sorted increasingly";
      return r;
    }
  }
  if (sum(xs) != b * static_cast<long>(m)) {
    r.hypothesis_violation = "sum of values must equal b*m";
    return r;
  }
  Rational quarter(4, static_cast<long>(m));
  quarter.canonicalize();
  Rational factor = 1 - quarter;
  if (sgn(factor) == 0) {
    r.hypothesis_violation = "(1 - 4/m)^-1 is undefined for m = 4";
    return r;
  }
  if (b < (x(m) + x(m - 1)) / (2 * factor)) {
    r.hypothesis_violation = "b < (1/2)(1 - 4/m)^-1 (x_m + x_{m-1})";
    return r;
  }
  return r;
}

}  // namespace singspec
