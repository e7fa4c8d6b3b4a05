#pragma once

#include "kq/diagram.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace kq {

using OperationTable = std::vector<std::vector<int>>;

struct AxiomReport {
  bool is_rack = false;
  bool is_quandle = false;
  bool is_kei = false;
  std::vector<std::string> violations; // first witnesses, capped per axiom

  bool ok() const { return is_rack && is_quandle; }
};

/// Exhaustive check of the rack, quandle and kei axioms on table[x][y] = x |> y.
/// Throws ValidationError for non-square tables or entries outside 0..n-1.
AxiomReport check_axioms(const OperationTable& table);

/// Finite rack with validated operation table; elements are 0..n-1.
class FiniteQuandle {
public:
  /// Throws ValidationError unless the table is a rack.
  explicit FiniteQuandle(OperationTable table);

  std::size_t order() const { return table_.size(); }
  int op(int x, int y) const { return table_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]; }
  /// The unique w with x |> w = z.
  int op_inverse(int x, int z) const {
    return inverse_[static_cast<std::size_t>(x)][static_cast<std::size_t>(z)];
  }
  bool is_quandle() const { return quandle_; }
  const OperationTable& table() const { return table_; }

  friend bool operator==(const FiniteQuandle& a, const FiniteQuandle& b) { return a.table_ == b.table_; }

private:
  OperationTable table_;
  OperationTable inverse_;
  bool quandle_ = false;
};

/// x |> y = 2x - y mod n.
FiniteQuandle dihedral(int n);

/// x |> y = (1 - t)x + t y mod n; throws ValidationError unless gcd(t, n) = 1.
FiniteQuandle alexander_quandle(int n, int t);

/// x |> y = y.
FiniteQuandle trivial_quandle(int n);

/// x -> x |> x. Throws ValidationError when the table is not a rack.
std::vector<int> canonical_automorphism(const OperationTable& table);

/// Orbits under the group generated by the left multiplications y -> x |> y.
std::size_t orbit_count(const FiniteQuandle& q);

using Coloring = std::vector<int>; // arc id -> quandle element

/// All colorings of the diagram's arcs satisfying every resolved triple,
/// in lexicographic order. Throws ValidationError if q is not a quandle.
std::vector<Coloring> colorings(const Diagram& d, const FiniteQuandle& q);

/// True iff c satisfies every resolved triple of d.
bool is_coloring(const Diagram& d, const FiniteQuandle& q, const Coloring& c);

/// Parses `dihedral:n`, `alexander:n:t`, `trivial:n`.
FiniteQuandle quandle_from_spec(const std::string& spec);

} // namespace kq
