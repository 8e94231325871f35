// Acceptance runner: one PASS/FAIL line per criterion, exit status 0 iff all
// criteria pass.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "oracles.hpp"
#include "singspec/catalog.hpp"
#include "singspec/errors.hpp"

using namespace singspec;
using oracle::q;

namespace {

struct Outcome {
  bool pass = true;
  std::size_t checked = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    pass = false;
    if (failures.size() < 10) failures.push_back(what);
  }
};

unsigned jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

template <class T, class F>
std::vector<T> parallel_map(std::size_t n, F fn) {
  std::vector<T> out(n);
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(jobs(), n); ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < n;) out[i] = fn(i);
    });
  for (auto& th : pool) th.join();
  return out;
}

std::string label(const FamilySpec& fam, const ParamMap& pm) {
  return pm.empty() ? fam.name : fam.name + " at " + format_params(pm);
}

std::vector<SweepItem> modality3_grid(long rs, long k) {
  std::vector<SweepItem> items;
  for (const auto& fam : Catalog::builtin().families()) {
    if (fam.kind != FamilyKind::Germ || fam.modality != 3) continue;
    for (auto& pm : parameter_grid(fam, {{"r", rs}, {"s", rs}, {"k", k}}, rs)) items.push_back({&fam, std::move(pm)});
  }
  return items;
}

struct Computed {
  std::string label;
  std::size_t mu = 0, tau = 0;
  std::size_t mu_expected = 0;
  Spectrum sp_expected;
  std::vector<Rational> rset_expected;
  ExclusionReport rep;
  std::string error;
};

Computed compute(const SweepItem& it) {
  Computed c;
  c.label = label(*it.family, it.params);
  try {
    c.mu_expected = expected_mu(*it.family, it.params);
    c.sp_expected = expected_spectrum_at(*it.family, it.params);
    c.rset_expected = expected_rset_at(*it.family, it.params);
    Polynomial f = instantiate(*it.family, it.params);
    c.mu = milnor_number(f);
    c.tau = tjurina_number(f);
    SpectrumOptions o;
    o.assume_nondegenerate = it.family->assume_nondegenerate;
    c.rep = exclusion_report(f, o);
  } catch (const Error& e) {
    c.error = e.what();
  }
  return c;
}

void symmetry_suite(Outcome& out, const Spectrum& s, const std::string& what) {
  if (s.empty()) {
    out.expect(false, what + ": empty spectrum");
    return;
  }
  const std::size_t mu = s.size();
  bool sym = true;
  for (std::size_t i = 0; i < mu; ++i) sym = sym && s[i] + s[mu - 1 - i] == s.dim();
  out.expect(sym, what + ": not symmetric");
  out.expect(s.sum() * 2 == Rational(static_cast<long>(mu) * s.dim()), what + ": wrong sum");
  out.expect(s.multiplicity(s.min()) == 1 && s.multiplicity(s.max()) == 1,
             what + ": extreme exponent is not simple");
}

void report(int n, const std::string& title, const Outcome& o, double secs) {
  std::cout << (o.pass ? "PASS" : "FAIL") << " " << n << " " << title << " (" << o.checked << " checks, "
            << std::fixed;
  std::cout.precision(1);
  std::cout << secs << " s)\n";
  for (const auto& f : o.failures) std::cout << "    " << f << "\n";
}

Polynomial permuted(const Polynomial& f, const std::vector<int>& perm) {
  std::vector<Polynomial::Term> ts;
  for (const auto& [m, c] : f.terms()) {
    std::vector<int> e(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) e[static_cast<std::size_t>(perm[i])] = m[static_cast<int>(i)];
    ts.emplace_back(MultiIndex::from_span(e), c);
  }
  return Polynomial::from_terms(f.nvars(), std::move(ts));
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  auto secs = [](clock::time_point t0) { return std::chrono::duration<double>(clock::now() - t0).count(); };
  bool all = true;
  const auto& cat = Catalog::builtin();

  // Criteria 1, 2, 4, 5 share one pass over the grid r,s <= 5, k <= 4.
  auto t0 = clock::now();
  auto grid = modality3_grid(5, 4);
  auto rows = parallel_map<Computed>(grid.size(), [&](std::size_t i) { return compute(grid[i]); });
  const double grid_secs = secs(t0);

  Outcome c1, c2, c4, c5;
  std::vector<std::pair<std::string, Spectrum>> spectra;
  for (const auto& r : rows) {
    if (!r.error.empty()) {
      for (auto* o : {&c1, &c2, &c5}) o->expect(false, r.label + ": " + r.error);
      continue;
    }
    c1.expect(r.mu == r.mu_expected,
              r.label + ": mu " + std::to_string(r.mu) + " != " + std::to_string(r.mu_expected));
    c1.expect(r.mu - r.tau == r.rset_expected.size(), r.label + ": mu - tau " + std::to_string(r.mu - r.tau) +
                                                          " != " + std::to_string(r.rset_expected.size()));
    c1.expect(r.rep.sp_tau.size() == r.tau, r.label + ": Tjurina basis size differs from tau");
    c2.expect(r.rep.sp == r.sp_expected, r.label + ": spectrum differs from the closed form");
    spectra.emplace_back(r.label, r.rep.sp);

    c5.expect(r.rep.rset == oracle::sorted(r.rset_expected), r.label + ": R(f) differs from the closed form");
    if (r.mu > r.tau) c5.expect(check_max_excluded(r.rep), r.label + ": maximal exponent not excluded");
    c5.expect(r.rep.bounds.size() == r.rep.rset.size(), r.label + ": bound count");
    for (std::size_t k = 0; k < std::min(r.rep.rset.size(), r.rep.bounds.size()); ++k)
      c5.expect(r.rep.rset[k] >= r.rep.bounds[k], r.label + ": excluded exponent below its Theorem B bound");
  }

  // Criterion 3.
  t0 = clock::now();
  Outcome c3;
  struct Qh {
    const char* f;
    int n;
    std::vector<Rational> w;
  };
  for (const auto& c : std::vector<Qh>{{"x^5+y^6", 2, {q(1, 5), q(1, 6)}},
                                       {"x^4*y+y^6", 2, {q(5, 24), q(1, 6)}},
                                       {"x^2+y^2", 2, {q(1, 2), q(1, 2)}}}) {
    try {
      Polynomial f = parse(c.f, c.n);
      Spectrum a = spectrum_quasihomogeneous(f, WeightVector(c.w));
      Spectrum b = spectrum_newton(f);
      c3.expect(a == b, std::string(c.f) + ": the two spectra differ");
      c3.expect(hertling_check(b).slack == 0, std::string(c.f) + ": Hertling slack is not 0");
      spectra.emplace_back(c.f, b);
      spectra.emplace_back(std::string(c.f) + " (weighted)", a);
    } catch (const Error& e) {
      c3.expect(false, std::string(c.f) + ": " + e.what());
    }
  }
  const double c3_secs = secs(t0);

  for (const auto& [name, s] : spectra) symmetry_suite(c4, s, name);

  report(1, "Milnor/Tjurina regression", c1, grid_secs);
  report(2, "spectrum regression", c2, 0);
  report(3, "weighted homogeneous agreement", c3, c3_secs);
  report(4, "symmetry and sum", c4, 0);
  report(5, "Tjurina exclusion regression", c5, 0);
  all = all && c1.pass && c2.pass && c3.pass && c4.pass && c5.pass;

  // Criterion 6.
  t0 = clock::now();
  Outcome c6;
  {
    auto wide = modality3_grid(10, 10);
    VerifyOptions vo;
    vo.skip_tjurina = true;
    auto recs = sweep(wide, jobs(), vo);
    for (std::size_t i = 0; i < recs.size(); ++i) {
      const auto& r = recs[i];
      const std::string name = label(*wide[i].family, wide[i].params);
      c6.expect(r.hertling.has_value() && r.hertling->holds, name + ": Hertling inequality fails");
      c6.expect(r.hertling_ok && r.spectrum_ok,
                name + ": " + (r.mismatches.empty() ? std::string("mismatch") : r.mismatches.front()));
    }
    auto spot = [&](const char* fam, ParamMap pm, const Rational& sum_sq, const Rational& range) {
      auto v = hertling_check(spectrum_newton(instantiate(cat.find(fam), pm)));
      c6.expect(v.sum_sq_dev == sum_sq, std::string(fam) + ": mu*Var is " + to_string(v.sum_sq_dev));
      c6.expect(v.range == range, std::string(fam) + ": range is " + to_string(v.range));
      return v;
    };
    spot("VA_{r,s}", {{"r", 1}, {"s", 1}}, q(15, 16) + q(24, 60) + q(24, 60), q(5, 4));
    auto v = spot("VA_{2k,0}^#", {{"k", 1}}, q(69, 40), q(5, 4));
    c6.expect(v.rhs * 17 == q(85, 48), "VA_{2k,0}^#: mu*rhs is " + to_string(v.rhs * 17));
    spot("VB_{(0)}^s", {{"s", 1}}, q(13, 8) + q(24, 60), q(43, 20) - q(17, 20));
  }
  report(6, "Hertling verification", c6, secs(t0));
  all = all && c6.pass;

  // Criterion 7.
  t0 = clock::now();
  Outcome c7;
  {
    std::vector<SweepItem> items;
    for (const auto& fam : cat.families()) {
      if (fam.tau_max_offsets.empty()) continue;
      for (auto& pm : parameter_grid(fam, {{"r", 5}, {"s", 5}, {"k", 4}}, 10)) items.push_back({&fam, std::move(pm)});
    }
    auto recs = sweep(items, jobs());
    for (std::size_t i = 0; i < recs.size(); ++i) {
      const auto& r = recs[i];
      const std::string name = label(*items[i].family, items[i].params);
      c7.expect(r.ghcts.size() == items[i].family->tau_max_offsets.size(), name + ": missing GHCTS verdicts");
      for (const auto& g : r.ghcts) c7.expect(g.holds, name + ": GHCTS fails, slack " + to_string(g.slack));
      c7.expect(r.ghcts_ok, name + ": " + (r.mismatches.empty() ? std::string("mismatch") : r.mismatches.front()));
    }
    Spectrum q10 = expected_spectrum_at(cat.find("Q_{10}"), {});
    auto g = ghcts_reduced_check(q10, 9);
    c7.expect(g.center == q(311, 216), "Q_10 mean is " + to_string(g.center));
    c7.expect(g.sum_sq_dev == q(1495, 2592), "Q_10 sum of squares is " + to_string(g.sum_sq_dev));
    c7.expect(g.residual == q(-125, 2592), "Q_10 residual is " + to_string(g.residual));
    c7.expect(g.holds, "Q_10 GHCTS fails");
  }
  report(7, "GHCTS verification", c7, secs(t0));
  all = all && c7.pass;

  // Criterion 8.
  t0 = clock::now();
  Outcome c8;
  {
    std::mt19937_64 rng(8);
    std::vector<std::pair<const char*, int>> germs{{"x^6+x^3*y^2+y^5", 2},
                                                   {"x^5+x^2*y^2+x*z^2+y*z^2+y^5", 3},
                                                   {"x^4*y+y^6", 2},
                                                   {"x^6+x^3*y^2+x^2*y^3+y^6", 2},
                                                   {"x^3*z+x^3*y+x^2*y^2+y*z^2+y^5", 3}};
    for (int trial = 0; trial < 100; ++trial) {
      const auto& [text, n] = germs[static_cast<std::size_t>(trial) % germs.size()];
      Polynomial f = parse(text, n);
      Spectrum base = spectrum_newton(f);
      SpectrumOptions o;
      o.shuffle_seed = rng();
      std::vector<int> perm(static_cast<std::size_t>(n));
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      c8.expect(spectrum_newton(f, o) == base, std::string(text) + ": candidate shuffle changed the spectrum");
      c8.expect(spectrum_newton(permuted(f, perm), o) == base,
                std::string(text) + ": variable permutation changed the spectrum");
    }

    for (const auto& fam : cat.families()) {
      if (fam.kind != FamilyKind::Germ) continue;
      for (const auto& pm : parameter_grid(fam, {{"r", 5}, {"s", 5}, {"k", 4}}, 5)) {
        Polynomial f = instantiate(fam, pm);
        if (newton_diagram(f).convenient()) continue;
        c8.expect(milnor_number(make_convenient(f)) == milnor_number(f),
                  label(fam, pm) + ": make_convenient changed mu");
      }
    }

    // Positive sorted x with sum x = bm and b >= (1/2)(1-4/m)^{-1}(x_m + x_{m-1})
    // exist only for m = 3.
    std::uniform_int_distribution<int> num(1, 1000), den(1, 60);
    for (int t = 0; t < 10000; ++t) {
      std::vector<Rational> xs{q(num(rng), den(rng)), q(num(rng), den(rng)), q(num(rng), den(rng))};
      xs = oracle::sorted(xs);
      Rational b = (xs[0] + xs[1] + xs[2]) / 3;
      auto r = lemma510_compare(xs, 1, b);
      c8.expect(!r.hypothesis_violation.has_value(), "Lemma 5.10: unexpected hypothesis violation");
      c8.expect(r.ok, "Lemma 5.10: V1 < V2");
    }
  }
  report(8, "algorithmic robustness", c8, secs(t0));
  all = all && c8.pass;

  // Criterion 9.
  t0 = clock::now();
  Outcome c9;
  {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 50; ++i) {
      auto ideal = oracle::random_ideal(rng);
      auto want = oracle::truncated_colength(ideal.generators, 2, 15);
      auto got = colength(IdealBasis(2, ideal.generators));
      std::ostringstream what;
      what << "ideal " << i << ": colength " << (got ? std::to_string(*got) : "inf") << " != " << want;
      c9.expect(got.has_value() && *got == want, what.str());
    }
  }
  report(9, "oracle equivalence", c9, secs(t0));
  all = all && c9.pass;

  return all ? 0 : 1;
}
