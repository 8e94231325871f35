#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "singspec/catalog.hpp"
#include "singspec/errors.hpp"
#include "singspec/newton.hpp"

using namespace singspec;
using oracle::q;

namespace {

std::vector<std::vector<Rational>> functionals(const NewtonDiagram& d) {
  std::vector<std::vector<Rational>> out;
  for (const auto& f : d.facets()) out.push_back(f.functional);
  std::sort(out.begin(), out.end());
  return out;
}

Rational dot(const std::vector<Rational>& a, const MultiIndex& v) {
  Rational s = 0;
  for (int i = 0; i < v.nvars(); ++i) s += a[static_cast<std::size_t>(i)] * v[i];
  return s;
}

std::vector<Polynomial> corpus() {
  std::vector<Polynomial> out{parse("x^5+y^6", 2), parse("x^6+x^3*y^2+y^5", 2), parse("x^4*y+y^6", 2),
                              parse("x^2+y^2", 2), parse("x^3+y^3+z^4", 3)};
  for (const auto& fam : Catalog::builtin().families()) {
    if (fam.kind != FamilyKind::Germ) continue;
    for (const auto& pm : parameter_grid(fam, {}, 2)) out.push_back(instantiate(fam, pm));
  }
  return out;
}

}  // namespace

TEST_CASE("Newton diagram facets") {
  auto a = newton_diagram(parse("x^5+y^6", 2));
  CHECK(a.convenient());
  CHECK(functionals(a) == std::vector<std::vector<Rational>>{{q(1, 5), q(1, 6)}});

  auto b = newton_diagram(parse("x^6+x^3*y^2+y^5", 2));
  CHECK(b.convenient());
  CHECK(functionals(b) == std::vector<std::vector<Rational>>{{q(1, 6), q(1, 4)}, {q(1, 5), q(1, 5)}});

  CHECK_FALSE(newton_diagram(parse("x^2", 2)).convenient());
  CHECK_THROWS_AS(newton_diagram(Polynomial(2)), DomainError);
}

TEST_CASE("valuation and shifted valuation") {
  auto a = newton_diagram(parse("x^5+y^6", 2));
  CHECK(a.valuation(MultiIndex{5, 0}) == 1);
  CHECK(a.valuation(MultiIndex{0, 0}) == 0);

  auto b = newton_diagram(parse("x^6+x^3*y^2+y^5", 2));
  CHECK(b.valuation(MultiIndex{1, 1}) == q(2, 5));
  CHECK(b.shifted_valuation(MultiIndex{0, 0}) == q(2, 5));
  CHECK(b.shifted_valuation(MultiIndex{1, 5}) == q(8, 5));
  for (int k = 1; k <= 6; ++k) CHECK(b.shifted_valuation(MultiIndex{k, 0}) == q(2 * k + 5, 12));

  auto c = newton_diagram(parse("x^2", 2));
  CHECK_THROWS_AS(c.valuation(MultiIndex{1, 1}), DomainError);
}

TEST_CASE("non-degeneracy verdicts") {
  Polynomial f = parse("x^5+y^6", 2);
  CHECK(is_nondegenerate(f, newton_diagram(f)));
  Polynomial g = parse("x^6+x^3*y^2+y^5", 2);
  for (auto v : nondegeneracy_check(g, newton_diagram(g))) CHECK(v == FacetVerdict::Nondegenerate);
  Polynomial h = parse("x^2+2*x*y+y^2", 2);
  auto vs = nondegeneracy_check(h, newton_diagram(h));
  REQUIRE(vs.size() == 1);
  CHECK(vs[0] == FacetVerdict::Unknown);
}

TEST_CASE("make_convenient") {
  Polynomial a = parse("x^2+y^2", 2);
  CHECK(make_convenient(a) == a);

  Polynomial va = parse("x^5+x^2*y^2+x*z^2+y*z^2+y^5", 3);
  CHECK_FALSE(newton_diagram(va).convenient());
  Polynomial vc = make_convenient(va);
  CHECK(vc == va + parse("z^19", 3));
  CHECK(milnor_number(vc) == 17);

  Polynomial e7 = parse("x^3+x*y^3", 2);
  auto mu = oracle::truncated_colength(jacobian_generators(e7), 2, 12);
  CHECK(mu == 7);
  Polynomial e7c = make_convenient(e7);
  CHECK(e7c == e7 + parse("y^" + std::to_string(mu + 2), 2));
  CHECK(milnor_number(e7c) == mu);
}

TEST_CASE("make_convenient preserves mu on the corpus") {
  for (const auto& f : corpus()) {
    if (newton_diagram(f).convenient()) continue;
    CHECK(milnor_number(make_convenient(f)) == milnor_number(f));
  }
}

TEST_CASE("facet functionals") {
  for (const auto& f0 : corpus()) {
    Polynomial f = newton_diagram(f0).convenient() ? f0 : make_convenient(f0);
    auto d = newton_diagram(f);
    for (const auto& facet : d.facets()) {
      for (const auto& p : facet.points) CHECK(dot(facet.functional, p) == 1);
      for (const auto& s : d.support()) CHECK(dot(facet.functional, s) >= 1);
      for (const auto& a : facet.functional) CHECK(a >= 0);
    }
  }
}

TEST_CASE("valuation is monotone, homogeneous and agrees with the cone evaluation") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> e(0, 12), t(2, 5);
  for (const auto& f0 : corpus()) {
    Polynomial f = newton_diagram(f0).convenient() ? f0 : make_convenient(f0);
    auto d = newton_diagram(f);
    const int n = f.nvars();
    for (int i = 0; i < 20; ++i) {
      std::vector<int> v(static_cast<std::size_t>(n)), w(static_cast<std::size_t>(n)), tv(static_cast<std::size_t>(n));
      int k = t(rng);
      for (std::size_t j = 0; j < v.size(); ++j) {
        v[j] = e(rng);
        w[j] = v[j] + e(rng) % 3;
        tv[j] = k * v[j];
      }
      auto mv = MultiIndex::from_span(v), mw = MultiIndex::from_span(w), mt = MultiIndex::from_span(tv);
      CHECK(d.valuation(mv) <= d.valuation(mw));
      CHECK(d.valuation(mt) == k * d.valuation(mv));
      CHECK(d.valuation(mv) == d.valuation_by_cones(mv));
    }
  }
}
