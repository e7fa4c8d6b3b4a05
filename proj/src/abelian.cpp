#include "kq/abelian.hpp"

#include "kq/error.hpp"

#include <algorithm>
#include <stdexcept>

namespace kq {

FiniteAbGroup::FiniteAbGroup(std::vector<Integer> invariant_factors, std::size_t free_rank)
    : factors_(std::move(invariant_factors)), free_rank_(free_rank) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2) throw ValidationError("invariant factors must be >= 2");
    if (i > 0 && !mpz_divisible_p(factors_[i].get_mpz_t(), factors_[i - 1].get_mpz_t()))
      throw ValidationError("invariant factors must form a divisibility chain");
  }
}

FiniteAbGroup FiniteAbGroup::cyclic(const Integer& n) {
  if (n == 0) return FiniteAbGroup({}, 1);
  if (n == 1) return FiniteAbGroup{};
  return FiniteAbGroup({abs(n)});
}

FiniteAbGroup FiniteAbGroup::from_cyclic_orders(const std::vector<Integer>& orders) {
  IntMatrix d(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) d(i, i) = orders[i];
  std::vector<Integer> factors;
  std::size_t nonzero = 0;
  for (auto& f : snf_int(d)) {
    ++nonzero;
    if (f != 1) factors.push_back(f);
  }
  return FiniteAbGroup(std::move(factors), orders.size() - nonzero);
}

Integer FiniteAbGroup::generator_order(std::size_t i) const {
  if (i >= generator_count()) throw std::out_of_range("generator index out of range");
  return i < factors_.size() ? factors_[i] : Integer(0);
}

Integer FiniteAbGroup::order() const {
  if (free_rank_ != 0) throw std::domain_error("order of an infinite group");
  Integer n = 1;
  for (const auto& f : factors_) n *= f;
  return n;
}

std::vector<Integer> FiniteAbGroup::reduce(std::vector<Integer> v) const {
  if (v.size() != generator_count()) throw std::invalid_argument("coordinate vector size mismatch");
  for (std::size_t i = 0; i < factors_.size(); ++i)
    mpz_fdiv_r(v[i].get_mpz_t(), v[i].get_mpz_t(), factors_[i].get_mpz_t());
  return v;
}

std::string FiniteAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::string out;
  for (const auto& f : factors_) out += (out.empty() ? "" : " + ") + ("Z/" + f.get_str());
  for (std::size_t i = 0; i < free_rank_; ++i) out += (out.empty() ? "" : " + ") + std::string("Z");
  return out;
}

std::strong_ordering operator<=>(const FiniteAbGroup& a, const FiniteAbGroup& b) {
  if (auto c = a.free_rank_ <=> b.free_rank_; c != 0) return c;
  if (auto c = a.factors_.size() <=> b.factors_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.factors_.size(); ++i) {
    const int c = cmp(a.factors_[i], b.factors_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

bool is_homomorphism(const IntMatrix& map, const FiniteAbGroup& source, const FiniteAbGroup& target) {
  if (map.rows() != target.generator_count() || map.cols() != source.generator_count()) return false;
  for (std::size_t j = 0; j < map.cols(); ++j) {
    const Integer oj = source.generator_order(j);
    for (std::size_t i = 0; i < map.rows(); ++i) {
      const Integer ti = target.generator_order(i);
      const Integer image = oj * map(i, j);
      if (ti == 0 ? image != 0 : !mpz_divisible_p(image.get_mpz_t(), ti.get_mpz_t())) return false;
    }
  }
  return true;
}

FiniteAbGroup solve_abelian(const std::vector<LinearEquation>& equations,
                            const std::vector<FiniteAbGroup>& unknowns) {
  // Solutions are the lattice L = { v in Z^N : C v lies in the target relation
  // lattice } modulo the relation lattice O = diag(orders) of the unknowns.
  std::vector<std::size_t> offset(unknowns.size() + 1, 0);
  for (std::size_t j = 0; j < unknowns.size(); ++j)
    offset[j + 1] = offset[j] + unknowns[j].generator_count();
  const std::size_t n = offset.back();

  std::size_t rows = 0, congruences = 0;
  for (const auto& eq : equations) {
    rows += eq.target.generator_count();
    congruences += eq.target.invariant_factors().size();
  }

  IntMatrix big(rows, n + congruences);
  std::size_t row0 = 0, cong = n;
  for (const auto& eq : equations) {
    const std::size_t tg = eq.target.generator_count();
    for (const auto& [u, c] : eq.terms) {
      if (u >= unknowns.size()) throw ValidationError("equation refers to an unknown that does not exist");
      if (c.rows() != tg || c.cols() != unknowns[u].generator_count())
        throw ValidationError("coefficient matrix shape does not match the groups");
      if (!is_homomorphism(c, unknowns[u], eq.target))
        throw ValidationError("coefficient matrix is not a well-defined homomorphism");
      for (std::size_t i = 0; i < tg; ++i)
        for (std::size_t k = 0; k < c.cols(); ++k) big(row0 + i, offset[u] + k) += c(i, k);
    }
    for (std::size_t i = 0; i < eq.target.invariant_factors().size(); ++i)
      big(row0 + i, cong++) = -eq.target.invariant_factors()[i];
    row0 += tg;
  }

  const IntMatrix kernel = integer_kernel(big);
  IntMatrix projected(n, kernel.cols());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < kernel.cols(); ++c) projected(r, c) = kernel(r, c);
  const IntMatrix basis = column_basis(projected);

  std::vector<std::size_t> finite;
  for (std::size_t j = 0; j < unknowns.size(); ++j)
    for (std::size_t k = 0; k < unknowns[j].generator_count(); ++k)
      if (unknowns[j].generator_order(k) != 0) finite.push_back(offset[j] + k);

  IntMatrix coords(basis.cols(), finite.size());
  for (std::size_t c = 0; c < finite.size(); ++c) {
    std::vector<Integer> col(n);
    const std::size_t g = finite[c];
    std::size_t u = 0;
    while (offset[u + 1] <= g) ++u;
    col[g] = unknowns[u].generator_order(g - offset[u]);
    auto x = solve_in_lattice(basis, col);
    if (!x) throw std::logic_error("relation lattice is not contained in the solution lattice");
    for (std::size_t r = 0; r < basis.cols(); ++r) coords(r, c) = (*x)[r];
  }

  std::vector<Integer> factors;
  std::size_t nonzero = 0;
  for (auto& f : snf_int(coords)) {
    ++nonzero;
    if (f != 1) factors.push_back(f);
  }
  return FiniteAbGroup(std::move(factors), basis.cols() - nonzero);
}

} // namespace kq
