#pragma once

#include "kq/matrix.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace kq {

/// Finitely generated abelian group Z/d1 + ... + Z/dk + Z^r with d1 | d2 | ...
/// and every di >= 2.
///
/// Elements are written in the standard generators: one per invariant factor,
/// then one per free summand. Homomorphisms between such groups are integer
/// matrices acting on these coordinate vectors.
class FiniteAbGroup {
public:
  FiniteAbGroup() = default;
  /// Throws ValidationError unless the factors form a divisibility chain of integers >= 2.
  FiniteAbGroup(std::vector<Integer> invariant_factors, std::size_t free_rank = 0);

  static FiniteAbGroup cyclic(const Integer& n);
  /// Isomorphism type of Z/o1 + ... + Z/ok for arbitrary orders (0 means Z, 1 is dropped).
  static FiniteAbGroup from_cyclic_orders(const std::vector<Integer>& orders);

  const std::vector<Integer>& invariant_factors() const { return factors_; }
  std::size_t free_rank() const { return free_rank_; }
  std::size_t generator_count() const { return factors_.size() + free_rank_; }
  /// Order of generator i, or 0 for a free generator.
  Integer generator_order(std::size_t i) const;
  bool is_finite() const { return free_rank_ == 0; }
  bool is_trivial() const { return factors_.empty() && free_rank_ == 0; }
  /// Group order; throws std::domain_error for infinite groups.
  Integer order() const;
  /// Reduces a coordinate vector to canonical representatives.
  std::vector<Integer> reduce(std::vector<Integer> v) const;

  std::string to_string() const;

  friend bool operator==(const FiniteAbGroup&, const FiniteAbGroup&) = default;
  friend std::strong_ordering operator<=>(const FiniteAbGroup& a, const FiniteAbGroup& b);

private:
  std::vector<Integer> factors_;
  std::size_t free_rank_ = 0;
};

/// One homogeneous equation  sum_j C_j x_j = 0  in the group `target`.
/// Each term pairs an unknown index with its coefficient matrix, shaped
/// target.generator_count() x unknown.generator_count(). Repeated unknowns add.
struct LinearEquation {
  FiniteAbGroup target;
  std::vector<std::pair<std::size_t, IntMatrix>> terms;
};

/// Isomorphism type of the subgroup of  prod_j unknowns[j]  cut out by the
/// equations. Throws ValidationError on shape mismatches and on coefficient
/// matrices that are not well-defined homomorphisms.
FiniteAbGroup solve_abelian(const std::vector<LinearEquation>& equations,
                            const std::vector<FiniteAbGroup>& unknowns);

/// True iff columns of `map` define a homomorphism source -> target.
bool is_homomorphism(const IntMatrix& map, const FiniteAbGroup& source, const FiniteAbGroup& target);

} // namespace kq
