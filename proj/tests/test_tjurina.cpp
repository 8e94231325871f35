#include <doctest.h>

#include "oracles.hpp"
#include "singspec/catalog.hpp"
#include "singspec/errors.hpp"
#include "singspec/tjurina.hpp"

using namespace singspec;
using oracle::q;

namespace {

const char* kNA10 = "x^6+x^3*y^2+y^5";
const char* kVA11 = "x^5+x^2*y^2+x*z^2+y*z^2+y^5";

std::vector<Polynomial> corpus() {
  std::vector<Polynomial> out{parse(kNA10, 2), parse("x^5+y^6", 2), parse("x^4*y+y^6", 2), parse("x^2+y^2", 2),
                              parse(kVA11, 3)};
  for (const auto& fam : Catalog::builtin().families()) {
    if (fam.kind != FamilyKind::Germ) continue;
    for (const auto& pm : parameter_grid(fam, {}, 2)) out.push_back(instantiate(fam, pm));
  }
  return out;
}

}  // namespace

TEST_CASE("Tjurina spectrum") {
  auto na = tjurina_spectrum(parse(kNA10, 2));
  CHECK(na.size() == 15);
  auto sp = spectrum_newton(parse(kNA10, 2));
  CHECK(multiset_difference(sp.exponents(), na.exponents()) == std::vector<Rational>{q(17, 12), q(8, 5)});

  Polynomial bp = parse("x^5+y^6", 2);
  CHECK(tjurina_spectrum(bp) == spectrum_newton(bp));
}

TEST_CASE("exclusion reports") {
  auto na = exclusion_report(parse(kNA10, 2));
  CHECK(na.rset == std::vector<Rational>{q(17, 12), q(8, 5)});
  CHECK(na.bounds == std::vector<Rational>{q(7, 5), q(19, 12)});
  CHECK(check_max_excluded(na));

  auto bp = exclusion_report(parse("x^5+y^6", 2));
  CHECK(bp.rset.empty());
  CHECK(bp.bounds.empty());
  CHECK(check_max_excluded(bp));

  auto va = exclusion_report(parse(kVA11, 3));
  CHECK(va.rset == std::vector<Rational>{q(19, 10), q(17, 8)});
  CHECK(check_max_excluded(va));
}

TEST_CASE("Theorem B bounds") {
  CHECK(theoremB_bounds(Spectrum(2, {q(1, 2), q(1), q(3, 2)}), 0).empty());
  CHECK(theoremB_bounds(Spectrum(2, {q(1, 2), q(1), q(3, 2)}), 1) == std::vector<Rational>{q(3, 2)});
  CHECK(theoremB_bounds(Spectrum(2, {q(1, 2), q(1), q(1), q(3, 2)}), 2) == std::vector<Rational>{q(3, 2), q(3, 2)});
  CHECK(theoremB_bounds(Spectrum(2, {q(1, 2), q(1), q(1), q(3, 2)}), 3) ==
        std::vector<Rational>{q(3, 2), q(3, 2), q(2)});
  CHECK_THROWS_AS(theoremB_bounds(Spectrum(2, {q(1)}), 2), DomainError);
  CHECK_THROWS_AS(theoremB_bounds(Spectrum(2, {q(1), q(1)}), 1), DomainError);
}

TEST_CASE("check_max_excluded") {
  ExclusionReport r;
  r.sp = Spectrum(2, {q(1, 2), q(1), q(3, 2)});
  r.sp_tau = Spectrum(2, {q(1, 2), q(1)});
  r.rset = {q(3, 2)};
  CHECK(check_max_excluded(r));
  r.sp_tau = Spectrum(2, {q(1, 2), q(3, 2)});
  r.rset = {q(1)};
  CHECK_FALSE(check_max_excluded(r));
}

TEST_CASE("exclusion invariants on the corpus") {
  for (const auto& f : corpus()) {
    SpectrumOptions o;
    o.assume_nondegenerate = true;
    auto rep = exclusion_report(f, o);
    const auto mu = milnor_number(f), tau = tjurina_number(f);
    CHECK(rep.sp.size() == mu);
    CHECK(rep.sp_tau.size() == tau);
    CHECK(rep.rset.size() == mu - tau);
    CHECK(multiset_difference(rep.sp.exponents(), rep.sp_tau.exponents()) == rep.rset);
    CHECK(rep.bounds.size() == rep.rset.size());
    for (std::size_t k = 0; k < rep.rset.size(); ++k) CHECK(rep.rset[k] >= rep.bounds[k]);
    if (mu > tau) {
      CHECK(check_max_excluded(rep));
      CHECK(std::count(rep.rset.begin(), rep.rset.end(), rep.rset.front()) == 1);
      CHECK(std::count(rep.rset.begin(), rep.rset.end(), rep.rset.back()) == 1);
    }
  }
}
