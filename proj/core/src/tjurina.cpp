#include "singspec/tjurina.hpp"

#include <algorithm>

#include "singspec/errors.hpp"

namespace singspec {

Spectrum tjurina_spectrum(const Polynomial& f, const SpectrumOptions& options) {
  Polynomial g = make_convenient(f, options.std);
  MaximalBasis basis = maximal_basis(g, IdealKind::Tjurina, options);
  std::vector<Rational> xs;
  for (const auto& e : basis.entries) xs.push_back(e.valuation);
  return Spectrum(f.nvars(), std::move(xs));
}

ExclusionReport exclusion_report(const Polynomial& f, const SpectrumOptions& options) {
  ExclusionReport rep;
  rep.sp = spectrum_newton(f, options);
  rep.sp_tau = tjurina_spectrum(f, options);
  try {
    rep.rset = multiset_difference(rep.sp.exponents(), rep.sp_tau.exponents());
  } catch (const DomainError&) {
    throw ConsistencyError("Tjurina spectrum is not contained in the spectrum");
  }
  rep.bounds = theoremB_bounds(rep.sp, rep.rset.size());
  return rep;
}

std::vector<Rational> theoremB_bounds(const Spectrum& s, std::size_t d) {
  if (d > s.size()) throw DomainError("more excluded exponents than spectral numbers");
  const auto& xs = s.exponents();
  // 1-based positions of the last occurrence of each distinct value.
  std::vector<std::size_t> jumps;
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (i + 1 == xs.size() || xs[i + 1] != xs[i]) jumps.push_back(i + 1);

  std::vector<Rational> out;
  for (std::size_t k = 1; k <= d; ++k) {
    auto it = std::upper_bound(jumps.begin(), jumps.end(), k);
    if (it == jumps.begin())
      throw DomainError("no jumping index at or below k = " + std::to_string(k));
    std::size_t j = *(it - 1);
    out.push_back(xs[j - 1] + 1);
  }
  return out;
}

bool check_max_excluded(const ExclusionReport& report) {
  if (report.rset.empty()) return report.sp.size() == report.sp_tau.size();
  const Rational& top = report.sp.max();
  return std::count(report.rset.begin(), report.rset.end(), top) == 1;
}

}  // namespace singspec
