#include "kq/abelian.hpp"
#include "kq/error.hpp"
#include "kq/matrix.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace kq;

namespace {

LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }

Integer int_det(const std::vector<std::vector<Integer>>& m) {
  if (m.empty()) return 1;
  Integer r = 0;
  for (std::size_t j = 0; j < m.size(); ++j) {
    std::vector<std::vector<Integer>> sub;
    for (std::size_t i = 1; i < m.size(); ++i) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < m.size(); ++k)
        if (k != j) row.push_back(m[i][k]);
      sub.push_back(row);
    }
    r += (j % 2 ? -1 : 1) * m[0][j] * int_det(sub);
  }
  return r;
}

void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out,
             std::vector<std::size_t> cur = {}, std::size_t from = 0) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, out, cur, i + 1);
    cur.pop_back();
  }
}

// gcd of all k x k minors
Integer minor_gcd(const IntMatrix& m, std::size_t k) {
  std::vector<std::vector<std::size_t>> rs, cs;
  subsets(m.rows(), k, rs);
  subsets(m.cols(), k, cs);
  Integer g = 0;
  for (const auto& r : rs)
    for (const auto& c : cs) {
      std::vector<std::vector<Integer>> sub;
      for (auto i : r) {
        std::vector<Integer> row;
        for (auto j : c) row.push_back(m(i, j));
        sub.push_back(row);
      }
      g = gcd(g, int_det(sub));
    }
  return g;
}

} // namespace

TEST_CASE("smith normal form examples") {
  CHECK(snf_int(IntMatrix{{2, 4}, {6, 8}}) == std::vector<Integer>{2, 4});
  CHECK(snf_int(IntMatrix::identity(4)) == std::vector<Integer>(4, 1));
  CHECK(snf_int(IntMatrix(3, 2)).empty());
  CHECK(snf_int(IntMatrix{{0, 0, 6}, {0, 4, 0}}) == std::vector<Integer>{2, 12});
}

TEST_CASE("smith normal form against minor gcds") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> dim(1, 4), entry(-9, 9);
  for (int trial = 0; trial < 300; ++trial) {
    IntMatrix m(static_cast<std::size_t>(dim(rng)), static_cast<std::size_t>(dim(rng)));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = trial % 3 == 0 ? entry(rng) % 3 : entry(rng);
    const auto d = snf_int(m);
    CHECK(d.size() == rank_int(m));
    Integer prod = 1;
    for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
      const Integer g = minor_gcd(m, k);
      if (k <= d.size()) {
        prod *= d[k - 1];
        CHECK(prod == g);
        if (k > 1) CHECK(d[k - 1] % d[k - 2] == 0);
      } else {
        CHECK(g == 0);
      }
    }
  }
}

TEST_CASE("integer kernel and lattice basis") {
  const IntMatrix m{{1, 2, 3}, {2, 4, 6}};
  const IntMatrix k = integer_kernel(m);
  CHECK(k.cols() == 2);
  CHECK(m * k == IntMatrix(2, 2));
  const IntMatrix b = column_basis(IntMatrix{{2, 4, 6}, {0, 3, 3}});
  CHECK(solve_in_lattice(b, {Integer(4), Integer(3)}).has_value());
  CHECK_FALSE(solve_in_lattice(b, {Integer(1), Integer(0)}).has_value());
}

TEST_CASE("finite abelian groups") {
  CHECK(FiniteAbGroup::from_cyclic_orders({2, 3}) == FiniteAbGroup::cyclic(6));
  CHECK(FiniteAbGroup::from_cyclic_orders({2, 4, 1}) == FiniteAbGroup({2, 4}));
  CHECK(FiniteAbGroup({2, 4}).order() == 8);
  CHECK(FiniteAbGroup({3, 3}).to_string() == "Z/3 + Z/3");
  CHECK_THROWS_AS(FiniteAbGroup({4, 2}), ValidationError);
  CHECK_THROWS_AS(FiniteAbGroup({1}), ValidationError);
  CHECK(FiniteAbGroup({2, 4}).reduce({Integer(-1), Integer(9)}) == std::vector<Integer>{1, 1});
}

TEST_CASE("solve_abelian examples") {
  const auto z = [](long n) { return FiniteAbGroup::cyclic(n); };
  CHECK(solve_abelian({}, {z(3)}) == z(3));
  CHECK(solve_abelian({{z(6), {{0, IntMatrix{{2}}}}}}, {z(6)}) == z(2));
  CHECK(solve_abelian({{z(5), {{0, IntMatrix{{1}}}, {1, IntMatrix{{-1}}}}}}, {z(5), z(5)}) == z(5));
  // x in Z/4 mapped to Z/2 by reduction, forced to vanish: {0, 2}
  CHECK(solve_abelian({{z(2), {{0, IntMatrix{{1}}}}}}, {z(4)}) == z(2));
  // not a homomorphism Z/3 -> Z/2
  CHECK_THROWS_AS(solve_abelian({{z(2), {{0, IntMatrix{{1}}}}}}, {z(3)}), ValidationError);
}

TEST_CASE("solve_abelian against enumeration") {
  std::mt19937 rng(12);
  const std::vector<std::vector<Integer>> shapes{{2}, {3}, {4}, {5}, {6}, {2, 2}, {2, 4}, {3, 3}, {8}, {9}, {12}};
  std::uniform_int_distribution<std::size_t> pick(0, shapes.size() - 1);
  std::uniform_int_distribution<int> coef(-3, 3), count(1, 3), neq(0, 3);
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<FiniteAbGroup> unknowns;
    long total = 1;
    for (int i = count(rng); i > 0; --i) {
      unknowns.emplace_back(shapes[pick(rng)]);
      total *= unknowns.back().order().get_si();
    }
    if (total > 10000) continue;
    std::vector<LinearEquation> eqs;
    for (int e = neq(rng); e > 0; --e) {
      LinearEquation eq{FiniteAbGroup(shapes[pick(rng)]), {}};
      const auto tord = oracle::orders(eq.target);
      for (std::size_t u = 0; u < unknowns.size(); ++u) {
        const auto sord = oracle::orders(unknowns[u]);
        IntMatrix c(tord.size(), sord.size());
        for (std::size_t i = 0; i < tord.size(); ++i)
          for (std::size_t j = 0; j < sord.size(); ++j) c(i, j) = coef(rng) * (tord[i] / std::gcd(tord[i], sord[j]));
        eq.terms.push_back({u, c});
      }
      eqs.push_back(eq);
    }
    const FiniteAbGroup g = solve_abelian(eqs, unknowns);

    std::vector<std::vector<std::vector<long>>> elems;
    for (const auto& u : unknowns) elems.push_back(oracle::elements(oracle::orders(u)));
    const auto ds = oracle::divisors_up_to(12);
    std::vector<long> counts(ds.size(), 0);
    std::vector<std::size_t> at(unknowns.size(), 0);
    while (true) {
      bool ok = true;
      for (const auto& eq : eqs) {
        const auto tord = oracle::orders(eq.target);
        std::vector<long> s(tord.size(), 0);
        for (const auto& [u, c] : eq.terms) {
          const auto v = oracle::act(c, elems[u][at[u]], tord);
          for (std::size_t i = 0; i < s.size(); ++i) s[i] = (s[i] + v[i]) % tord[i];
        }
        for (long x : s) ok = ok && x == 0;
      }
      if (ok)
        for (std::size_t i = 0; i < ds.size(); ++i) {
          bool killed = true;
          for (std::size_t u = 0; u < unknowns.size(); ++u) {
            const auto ord = oracle::orders(unknowns[u]);
            for (std::size_t k = 0; k < ord.size(); ++k) killed = killed && (ds[i] * elems[u][at[u]][k]) % ord[k] == 0;
          }
          if (killed) ++counts[i];
        }
      std::size_t p = 0;
      while (p < at.size() && ++at[p] == elems[p].size()) at[p++] = 0;
      if (p == at.size()) break;
    }
    CHECK(oracle::torsion_counts(g, ds) == counts);
  }
}

TEST_CASE("minors and determinants") {
  const LaurentMatrix t{{P("1 - A"), P("-1"), P("A")}, {P("A"), P("1 - A"), P("-1")}, {P("-1"), P("A"), P("1 - A")}};
  CHECK(minor(t, {0}, {2}) == P("A"));
  CHECK(minor(t, {0, 1}, {0, 1}) == P("1 - A + A^2"));
  CHECK(determinant(LaurentMatrix::identity(3)) == LaurentPoly{1});
  CHECK(determinant(t) == LaurentPoly{});
  CHECK_THROWS_AS(minor(t, {0, 1}, {0}), std::invalid_argument);
  CHECK_THROWS_AS(minor(t, {0}, {3}), std::out_of_range);
}

TEST_CASE("elementary ideals") {
  const LaurentMatrix t{{P("1 - A"), P("-1"), P("A")}, {P("A"), P("1 - A"), P("-1")}, {P("-1"), P("A"), P("1 - A")}};
  CHECK(elementary_ideal_gcd(t, 1) == P("1 - A + A^2"));
  CHECK(elementary_ideal_gcd(t, 2) == LaurentPoly{1});
  CHECK(elementary_ideal_gcd(t, 0) == LaurentPoly{});
  CHECK(elementary_ideal_gcd(LaurentMatrix(1, 1), 1) == LaurentPoly{1});
  CHECK(elementary_ideal_gcd(LaurentMatrix{{P("1 - A"), 0}, {0, P("1 - A")}}, 1) == P("1 - A"));
  CHECK(elementary_ideal_gcd(LaurentMatrix(0, 2), 1) == LaurentPoly{});
  // E_k is contained in E_{k+1}, so the corank k+1 gcd divides the corank k gcd
  const LaurentMatrix d{{P("1 - A"), 0, 0}, {0, P("1 - A"), 0}};
  CHECK(elementary_ideal_gcd(d, 1) == P("1 - 2*A + A^2"));
  CHECK(elementary_ideal_gcd(d, 2) == P("1 - A"));
  CHECK(laurent_divide_exact(elementary_ideal_gcd(d, 1), elementary_ideal_gcd(d, 2)).has_value());
}

TEST_CASE("rational invariant factors") {
  const LaurentMatrix t{{P("1 - A"), P("-1"), P("A")}, {P("A"), P("1 - A"), P("-1")}, {P("-1"), P("A"), P("1 - A")}};
  auto f = invariant_factors_rational(t);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].to_string() == "1");
  CHECK(f.factors[1].to_string() == "1 - A + A^2");
  CHECK(f.free_rank == 1);

  f = invariant_factors_rational(LaurentMatrix(0, 1));
  CHECK(f.factors.empty());
  CHECK(f.free_rank == 1);

  f = invariant_factors_rational(LaurentMatrix{{P("A - 1"), 0}, {0, P("1 - 2*A + A^2")}});
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].to_string() == "-1 + A");
  CHECK(f.factors[1].to_string() == "1 - 2*A + A^2");
  CHECK(f.free_rank == 0);

  f = invariant_factors_rational(LaurentMatrix{{P("2*A^-1 + 2"), P("A^2 - 1")}, {P("A^3"), 0}});
  for (std::size_t i = 1; i < f.factors.size(); ++i)
    CHECK(RationalPoly::divmod(f.factors[i], f.factors[i - 1]).second.is_zero());
}
