#include "kq/beck.hpp"

#include "kq/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace kq {

namespace {

constexpr std::size_t kMaxWitnesses = 5;

std::string pair_text(int x, int y) { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }

std::string triple_text(int x, int y, int z) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")";
}

// a == b as homomorphisms into `target`: rows compared modulo generator orders.
bool equal_in(const IntMatrix& a, const IntMatrix& b, const FiniteAbGroup& target) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const Integer order = target.generator_order(i);
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Integer diff = a(i, j) - b(i, j);
      if (order == 0 ? diff != 0 : !mpz_divisible_p(diff.get_mpz_t(), order.get_mpz_t())) return false;
    }
  }
  return true;
}

IntMatrix add(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  return c;
}

IntMatrix identity_minus(const IntMatrix& a) {
  IntMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = (i == j ? 1 : 0) - a(i, j);
  return c;
}

bool is_isomorphism(const IntMatrix& map, const FiniteAbGroup& source, const FiniteAbGroup& target) {
  if (source.order() != target.order()) return false;
  const std::vector<LinearEquation> eq{{target, {{0, map}}}};
  return solve_abelian(eq, {source}).is_trivial();
}

// Element codec for the fibres of an extension.
struct Fibre {
  std::vector<Integer> orders;
  long size = 1;

  std::vector<Integer> decode(long index) const {
    std::vector<Integer> v(orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) {
      const long o = orders[i].get_si();
      v[i] = index % o;
      index /= o;
    }
    return v;
  }
  long encode(const std::vector<Integer>& v) const {
    long index = 0;
    for (std::size_t i = orders.size(); i-- > 0;) index = index * orders[i].get_si() + v[i].get_si();
    return index;
  }
};

std::vector<Integer> apply_map(const IntMatrix& m, const std::vector<Integer>& v) {
  std::vector<Integer> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

} // namespace

void validate_module_structure(const QuandleModule& m) {
  const std::size_t n = m.base.order();
  if (m.groups.size() != n) throw ValidationError("module needs one group per base element");
  for (std::size_t x = 0; x < n; ++x)
    if (!m.groups[x].is_finite()) throw ValidationError("module groups must be finite");
  if (m.eps.size() != n || m.alpha.size() != n) throw ValidationError("eps and alpha need one row per base element");
  for (std::size_t x = 0; x < n; ++x) {
    if (m.eps[x].size() != n || m.alpha[x].size() != n)
      throw ValidationError("eps and alpha need one entry per pair of base elements");
    for (std::size_t y = 0; y < n; ++y) {
      const int xi = static_cast<int>(x), yi = static_cast<int>(y);
      const FiniteAbGroup& target = m.group(m.base.op(xi, yi));
      const IntMatrix& e = m.eps[x][y];
      const IntMatrix& a = m.alpha[x][y];
      if (e.rows() != target.generator_count() || e.cols() != m.groups[x].generator_count())
        throw ValidationError("eps" + pair_text(xi, yi) + " has the wrong shape");
      if (a.rows() != target.generator_count() || a.cols() != m.groups[y].generator_count())
        throw ValidationError("alpha" + pair_text(xi, yi) + " has the wrong shape");
      if (!is_homomorphism(e, m.groups[x], target))
        throw ValidationError("eps" + pair_text(xi, yi) + " is not a homomorphism");
      if (!is_homomorphism(a, m.groups[y], target))
        throw ValidationError("alpha" + pair_text(xi, yi) + " is not a homomorphism");
    }
  }
}

ModuleReport check_module(const QuandleModule& m) {
  validate_module_structure(m);
  ModuleReport r;
  std::size_t counts[5] = {0, 0, 0, 0, 0};
  const auto fail = [&](bool& flag, std::size_t slot, const std::string& msg) {
    flag = false;
    if (counts[slot]++ < kMaxWitnesses) r.violations.push_back(msg);
  };
  const FiniteQuandle& q = m.base;
  const int n = static_cast<int>(q.order());

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (!is_isomorphism(m.alpha_at(x, y), m.group(y), m.group(q.op(x, y))))
        fail(r.alpha_invertible, 0, "alpha" + pair_text(x, y) + " is not invertible");

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const int yz = q.op(y, z), xy = q.op(x, y), xz = q.op(x, z);
        const FiniteAbGroup& target = m.group(q.op(x, yz));
        const IntMatrix& a_x_yz = m.alpha_at(x, yz);
        const IntMatrix& a_xy_xz = m.alpha_at(xy, xz);
        const IntMatrix& e_xy_xz = m.eps_at(xy, xz);
        if (!equal_in(a_x_yz * m.alpha_at(y, z), a_xy_xz * m.alpha_at(x, z), target))
          fail(r.a1, 1, "A1 (alpha composition) fails at " + triple_text(x, y, z));
        if (!equal_in(a_x_yz * m.eps_at(y, z), e_xy_xz * m.alpha_at(x, y), target))
          fail(r.a2, 2, "A2 (alpha/eps commutation) fails at " + triple_text(x, y, z));
        if (!equal_in(m.eps_at(x, yz), add(e_xy_xz * m.eps_at(x, y), a_xy_xz * m.eps_at(x, z)), target))
          fail(r.a3, 3, "A3 (eps expansion) fails at " + triple_text(x, y, z));
      }

  if (q.is_quandle())
    for (int x = 0; x < n; ++x)
      if (!equal_in(m.eps_at(x, x), identity_minus(m.alpha_at(x, x)), m.group(x)))
        fail(r.a4, 4, "A4 (eps = id - alpha on the diagonal) fails at x = " + std::to_string(x));
  return r;
}

Extension extension(const QuandleModule& m) {
  const auto report = check_module(m);
  if (!report.ok())
    throw ValidationError("extension needs a valid module: " + report.violations.front());
  const std::size_t n = m.base.order();
  std::vector<Fibre> fibres(n);
  std::vector<long> offset(n + 1, 0);
  for (std::size_t x = 0; x < n; ++x) {
    fibres[x].orders = m.groups[x].invariant_factors();
    fibres[x].size = m.groups[x].order().get_si();
    offset[x + 1] = offset[x] + fibres[x].size;
  }
  const auto total = static_cast<std::size_t>(offset.back());
  OperationTable table(total, std::vector<int>(total));
  std::vector<int> projection(total);
  for (std::size_t x = 0; x < n; ++x)
    for (long i = 0; i < fibres[x].size; ++i) projection[static_cast<std::size_t>(offset[x] + i)] = static_cast<int>(x);

  for (std::size_t x = 0; x < n; ++x)
    for (long i = 0; i < fibres[x].size; ++i) {
      const auto mv = fibres[x].decode(i);
      for (std::size_t y = 0; y < n; ++y) {
        const int xi = static_cast<int>(x), yi = static_cast<int>(y);
        const auto xy = static_cast<std::size_t>(m.base.op(xi, yi));
        const auto em = apply_map(m.eps_at(xi, yi), mv);
        for (long j = 0; j < fibres[y].size; ++j) {
          auto sum = apply_map(m.alpha_at(xi, yi), fibres[y].decode(j));
          for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += em[k];
          sum = m.groups[xy].reduce(std::move(sum));
          table[static_cast<std::size_t>(offset[x] + i)][static_cast<std::size_t>(offset[y] + j)] =
              static_cast<int>(offset[xy] + fibres[xy].encode(sum));
        }
      }
    }
  return {FiniteQuandle(std::move(table)), std::move(projection)};
}

QuandleModule constant_module(const FiniteQuandle& q, int n, int t) {
  if (n < 1) throw ValidationError("module order must be >= 1");
  if (std::gcd(((t % n) + n) % n, n) != 1 && n > 1)
    throw ValidationError("t = " + std::to_string(t) + " is not invertible modulo " + std::to_string(n));
  const FiniteAbGroup g = FiniteAbGroup::cyclic(n);
  const std::size_t gens = g.generator_count();
  const auto scalar = [&](long s) {
    IntMatrix a(gens, gens);
    if (gens == 1) {
      Integer v = s;
      mpz_fdiv_r_ui(v.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(n));
      a(0, 0) = v;
    }
    return a;
  };
  const std::size_t k = q.order();
  QuandleModule m{q, std::vector<FiniteAbGroup>(k, g),
                  std::vector<std::vector<IntMatrix>>(k, std::vector<IntMatrix>(k, scalar(1 - t))),
                  std::vector<std::vector<IntMatrix>>(k, std::vector<IntMatrix>(k, scalar(t)))};
  return m;
}

std::vector<std::string> ABPresentation::relation_strings() const {
  std::vector<std::string> out;
  for (const auto& t : relations) {
    const std::string x = "a" + std::to_string(t.x), y = "a" + std::to_string(t.y), z = "a" + std::to_string(t.z);
    out.push_back("eps(" + x + "," + y + ")*" + x + " + alpha(" + x + "," + y + ")*" + y + " - " + z);
  }
  return out;
}

ABPresentation ab_presentation(const Diagram& d) { return {d.arc_count, d.resolved}; }

namespace {

void require_valid(const QuandleModule& m) {
  const auto report = check_module(m);
  if (!report.ok()) throw ValidationError("derivations need a valid module: " + report.violations.front());
}

DerivationGroup solve_derivations(const Diagram& d, const Coloring& c, const QuandleModule& m) {
  if (c.size() != static_cast<std::size_t>(d.arc_count))
    throw ValidationError("coloring has " + std::to_string(c.size()) + " entries for " +
                          std::to_string(d.arc_count) + " arcs");
  for (int v : c)
    if (v < 0 || static_cast<std::size_t>(v) >= m.base.order())
      throw ValidationError("coloring value " + std::to_string(v) + " is not an element of the base quandle");
  const auto color = [&](int arc) { return c[static_cast<std::size_t>(arc)]; };

  std::vector<FiniteAbGroup> unknowns;
  for (int a = 0; a < d.arc_count; ++a) unknowns.push_back(m.group(color(a)));

  std::vector<LinearEquation> equations;
  for (const auto& t : d.resolved) {
    const int cx = color(t.x), cy = color(t.y), cz = color(t.z);
    if (m.base.op(cx, cy) != cz)
      throw ValidationError("coloring violates crossing triple " + triple_text(t.x, t.y, t.z) + ": " +
                            std::to_string(cx) + " |> " + std::to_string(cy) + " != " + std::to_string(cz));
    const FiniteAbGroup& target = m.group(cz);
    IntMatrix minus_id(target.generator_count(), target.generator_count());
    for (std::size_t i = 0; i < target.generator_count(); ++i) minus_id(i, i) = -1;
    equations.push_back({target,
                         {{static_cast<std::size_t>(t.x), m.eps_at(cx, cy)},
                          {static_cast<std::size_t>(t.y), m.alpha_at(cx, cy)},
                          {static_cast<std::size_t>(t.z), minus_id}}});
  }
  return {solve_abelian(equations, unknowns)};
}

} // namespace

DerivationGroup derivations(const Diagram& d, const Coloring& c, const QuandleModule& m) {
  require_valid(m);
  return solve_derivations(d, c, m);
}

std::vector<DerivationGroup> derivation_spectrum(const Diagram& d, const QuandleModule& m) {
  require_valid(m);
  std::vector<DerivationGroup> out;
  for (const auto& c : colorings(d, m.base)) out.push_back(solve_derivations(d, c, m));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DerivationGroup> derivation_spectrum(const Diagram& d, const FiniteQuandle& q, const QuandleModule& m) {
  if (!(m.base == q)) throw ValidationError("module is not over the given quandle");
  return derivation_spectrum(d, m);
}

QuandleModule module_from_spec(const std::string& spec, const FiniteQuandle& base) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  const auto num = [&](std::size_t i) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(parts.at(i), &used);
      if (used != parts[i].size()) throw std::invalid_argument("trailing");
      return v;
    } catch (const std::exception&) {
      throw ParseError("bad module spec '" + spec + "'");
    }
  };
  if (parts.size() == 3 && parts[0] == "constant") return constant_module(base, num(1), num(2));
  if (parts.size() == 2 && parts[0] == "trivial") return constant_module(base, num(1), 1);
  throw ParseError("bad module spec '" + spec + "' (expected constant:n:t or trivial:n)");
}

} // namespace kq
