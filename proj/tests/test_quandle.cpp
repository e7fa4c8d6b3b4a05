#include "kq/catalog.hpp"
#include "kq/error.hpp"
#include "kq/quandle.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>

using namespace kq;

namespace {

std::vector<FiniteQuandle> small_quandles() {
  std::vector<FiniteQuandle> out;
  for (int n = 1; n <= 6; ++n) {
    out.push_back(dihedral(n));
    out.push_back(trivial_quandle(n));
    for (int t = 2; t < n; ++t)
      if (std::gcd(t, n) == 1) out.push_back(alexander_quandle(n, t));
  }
  return out;
}

} // namespace

TEST_CASE("axiom checks") {
  const auto triv = check_axioms(trivial_quandle(4).table());
  CHECK((triv.is_rack && triv.is_quandle && triv.is_kei));
  const auto d3 = check_axioms(dihedral(3).table());
  CHECK((d3.is_rack && d3.is_quandle && d3.is_kei));
  CHECK(d3.violations.empty());

  const auto bad = check_axioms({{0, 0}, {1, 1}});
  CHECK_FALSE(bad.is_rack);
  REQUIRE_FALSE(bad.violations.empty());
  CHECK(bad.violations[0].find("row 0") != std::string::npos);

  const auto rack = check_axioms({{1, 0}, {1, 0}});
  CHECK(rack.is_rack);
  CHECK_FALSE(rack.is_quandle);

  const auto a52 = check_axioms(alexander_quandle(5, 2).table());
  CHECK(a52.is_quandle);
  CHECK_FALSE(a52.is_kei);

  CHECK_THROWS_AS(check_axioms({{0, 1}}), ValidationError);
  CHECK_THROWS_AS(check_axioms({{0, 2}, {1, 0}}), ValidationError);
  CHECK_THROWS_AS(FiniteQuandle({{0, 0}, {1, 1}}), ValidationError);
}

TEST_CASE("standard constructions") {
  CHECK(dihedral(1).order() == 1);
  CHECK(dihedral(3).table()[0] == std::vector<int>{0, 2, 1});
  CHECK(orbit_count(dihedral(4)) == 2);
  CHECK(orbit_count(dihedral(3)) == 1);
  CHECK(alexander_quandle(3, 2) == dihedral(3));
  CHECK(alexander_quandle(6, 1) == trivial_quandle(6));
  CHECK(alexander_quandle(5, 2).order() == 5);
  CHECK(orbit_count(alexander_quandle(5, 2)) == 1);
  CHECK_THROWS_AS(alexander_quandle(6, 2), ValidationError);
  for (int n = 1; n <= 12; ++n) {
    CHECK(check_axioms(dihedral(n).table()).ok());
    for (int t = 1; t < n; ++t)
      if (std::gcd(t, n) == 1) CHECK(check_axioms(alexander_quandle(n, t).table()).ok());
  }
  CHECK(quandle_from_spec("dihedral:5") == dihedral(5));
  CHECK(quandle_from_spec("alexander:7:3") == alexander_quandle(7, 3));
  CHECK(quandle_from_spec("trivial:2") == trivial_quandle(2));
  CHECK_THROWS_AS(quandle_from_spec("dihedral"), ParseError);
  CHECK_THROWS_AS(quandle_from_spec("cyclic:3"), ParseError);
}

TEST_CASE("canonical automorphism") {
  for (const auto& q : small_quandles()) {
    std::vector<int> id(q.order());
    std::iota(id.begin(), id.end(), 0);
    CHECK(canonical_automorphism(q.table()) == id);
  }
  CHECK(canonical_automorphism({{1, 0}, {1, 0}}) == std::vector<int>{1, 0});
  CHECK_THROWS_AS(canonical_automorphism({{0, 0}, {1, 1}}), ValidationError);
}

TEST_CASE("coloring examples") {
  CHECK(colorings(catalog_get("unknot"), dihedral(5)).size() == 5);
  CHECK(colorings(catalog_get("trefoil"), dihedral(3)).size() == 9);
  CHECK(colorings(catalog_get("figure_eight"), dihedral(3)).size() == 3);
  CHECK(colorings(catalog_get("figure_eight"), dihedral(5)).size() == 25);
  const Diagram t = catalog_get("trefoil");
  for (const auto& c : colorings(t, dihedral(3))) CHECK(is_coloring(t, dihedral(3), c));
  CHECK_FALSE(is_coloring(t, dihedral(3), {0, 1, 1}));
  CHECK_THROWS_AS(colorings(t, FiniteQuandle({{1, 0}, {1, 0}})), ValidationError);
}

TEST_CASE("colorings agree with exhaustive enumeration") {
  for (const auto& e : load_catalog()) {
    const Diagram d = catalog_get(e.name);
    const oracle::Knot k = oracle::knot_from_pd(e.pd);
    for (const auto& q : small_quandles()) {
      if (std::pow(static_cast<double>(q.order()), d.arc_count) > 2e5) continue;
      CAPTURE(e.name);
      CAPTURE(q.order());
      const auto got = colorings(d, q);
      CHECK(got == oracle::all_colorings(k, q.table()));
      CHECK(got.size() >= q.order());
    }
  }
}

TEST_CASE("coloring counts agree across unknot diagrams") {
  for (const auto& q : small_quandles()) {
    const auto n = colorings(catalog_get("unknot"), q).size();
    CHECK(n == q.order());
    CHECK(colorings(catalog_get("unknot_r1"), q).size() == n);
    CHECK(colorings(catalog_get("unknot_r2"), q).size() == n);
  }
}
