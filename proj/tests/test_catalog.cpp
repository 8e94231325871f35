#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "oracles.hpp"
#include "singspec/catalog.hpp"
#include "singspec/errors.hpp"

using namespace singspec;
using oracle::q;

TEST_CASE("instantiate") {
  const auto& cat = Catalog::builtin();
  CHECK(instantiate(cat.find("NA_{r,0}"), {{"r", 1}}) == parse("x^6+x^3*y^2+y^5", 2));
  Polynomial nb = instantiate(cat.find("NB_{(-1)}^r"), {{"r", 1}});
  CHECK(nb == parse("x^6+x^3*y^2+y^6", 2));
  CHECK(milnor_number(nb) == 19);
  CHECK_THROWS_AS(instantiate(cat.find("NA_{r,s}"), {{"r", 1}, {"s", 0}}), DomainError);
  CHECK_THROWS_AS(instantiate(cat.find("NA_{r,s}"), {{"r", 1}}), DomainError);
  CHECK_THROWS_AS(instantiate(cat.find("NA_{r,0}"), {{"r", 1}, {"q", 2}}), DomainError);
  CHECK_THROWS_AS(instantiate(cat.find("Q_{10}"), {}), DomainError);
  CHECK_THROWS_AS(instantiate(cat.find("NA_{r,0}"), {{"r", 1}}, {{"b", q(0)}}), NotIsolatedError);
  auto bad = Catalog::parse("singspec-catalog 1\n[A_1]\nkind = germ\nvars = x,y\ntemplate = x^2+y^2\nmu = 2\nspectrum = 1 @2\n");
  CHECK_THROWS_AS(instantiate(bad.find("A_1"), {}), ConsistencyError);
  CHECK_THROWS_AS(cat.find("XX_{1}"), UnknownFamilyError);
  CHECK_FALSE(cat.contains("XX_{1}"));
}

TEST_CASE("closed forms") {
  const auto& cat = Catalog::builtin();
  const auto& na = cat.find("NA_{r,0}");
  CHECK(expected_mu(na, {{"r", 2}}) == 18);
  std::vector<Rational> want{q(2, 5), q(3, 5), q(4, 5), q(4, 5), q(1), q(1), q(1), q(6, 5), q(6, 5), q(7, 5), q(8, 5)};
  for (int k = 1; k <= 6; ++k) want.push_back(q(2 * k + 5, 12));
  CHECK(expected_spectrum_at(na, {{"r", 1}}).exponents() == oracle::sorted(want));
  CHECK(expected_rset_at(na, {{"r", 1}}) == std::vector<Rational>{q(17, 12), q(8, 5)});

  auto nc = expected_spectrum_at(cat.find("NC_{19}"), {});
  CHECK(nc.size() == 19);
  CHECK(nc.min() == q(3, 8));
  CHECK(nc.max() == q(13, 8));

  auto vb = expected_spectrum_at(cat.find("VB_{(0)}^s"), {{"s", 1}});
  CHECK(vb.size() == 19);
  CHECK(vb.dim() == 3);
  for (int v = 1; v <= 5; ++v) CHECK(vb.multiplicity(q(2 * v + 9, 10)) >= 1);
}

TEST_CASE("verify") {
  const auto& cat = Catalog::builtin();
  auto na = verify(cat.find("NA_{r,0}"), {{"r", 1}});
  CHECK(na.all_ok());
  CHECK(na.mu == 17);
  CHECK(na.tau == 15);

  auto bp = verify(cat.find("NF_{20}"), {});
  CHECK(bp.spectrum_ok);
  CHECK(bp.rset.empty());
  REQUIRE(bp.hertling.has_value());
  CHECK(bp.hertling->slack == 0);

  auto va = verify(cat.find("VA_{r,s}"), {{"r", 1}, {"s", 1}});
  CHECK(va.rset == std::vector<Rational>{q(19, 10), q(17, 8)});
  CHECK(va.ghcts_ok);
  CHECK(va.all_ok());

  auto q10 = verify(cat.find("Q_{10}"), {});
  CHECK(q10.all_ok());
  CHECK_THROWS_AS(verify(cat.find("NA_{r,0}"), {{"r", 0}}), DomainError);
}

TEST_CASE("parse errors and round trip") {
  const auto& cat = Catalog::builtin();
  CHECK(Catalog::parse(cat.serialize()) == cat);
  auto path = std::filesystem::temp_directory_path() / "singspec_catalog_roundtrip.txt";
  cat.save(path.string());
  CHECK(Catalog::load(path.string()) == cat);
  std::remove(path.string().c_str());

  CHECK_THROWS_AS(Catalog::parse("not a catalog\n"), ParseError);
  CHECK_THROWS_AS(Catalog::parse("singspec-catalog 1\n[A]\nkind = blob\n"), ParseError);
  CHECK_THROWS_AS(Catalog::parse("singspec-catalog 1\nkind = germ\n"), ParseError);
  auto one = Catalog::parse("singspec-catalog 1\n[A_1]\nkind = germ\nvars = x,y\ntemplate = x^2+y^2\nmu = 1\nspectrum = 1\n");
  REQUIRE(one.families().size() == 1);
  CHECK(verify(one.find("A_1"), {}).all_ok());
}

TEST_CASE("parameter grids and params text") {
  const auto& cat = Catalog::builtin();
  auto g = parameter_grid(cat.find("NA_{r,s}"), {{"r", 3}}, 2);
  CHECK(g.size() == 6);
  CHECK(g.front() == ParamMap{{"r", 1}, {"s", 1}});
  CHECK(g.back() == ParamMap{{"r", 3}, {"s", 2}});
  CHECK(parameter_grid(cat.find("NC_{19}"), {}, 5).size() == 1);
  CHECK(parse_params("r=2,s=3") == ParamMap{{"r", 2}, {"s", 3}});
  CHECK(parse_params("r=2 s=3") == ParamMap{{"r", 2}, {"s", 3}});
  CHECK(format_params({{"r", 2}, {"s", 3}}) == "r=2,s=3");
  CHECK_THROWS_AS(parse_params("r"), ParseError);
}

TEST_CASE("sweep keeps input order") {
  const auto& cat = Catalog::builtin();
  std::vector<SweepItem> items;
  for (const char* name : {"NA_{r,0}", "NB_{(0)}^r", "VB_{(0)}^s"})
    for (const auto& pm : parameter_grid(cat.find(name), {}, 2)) items.push_back({&cat.find(name), pm});
  auto a = sweep(items, 1), b = sweep(items, 4);
  REQUIRE(a.size() == items.size());
  REQUIRE(b.size() == items.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].family == items[i].family->name);
    CHECK(a[i].params == b[i].params);
    CHECK(a[i].spectrum == b[i].spectrum);
    CHECK(a[i].all_ok());
  }
}
