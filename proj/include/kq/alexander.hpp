#pragma once

#include "kq/diagram.hpp"
#include "kq/matrix.hpp"

namespace kq {

/// Presentation of the abelianized knot quandle: one row per crossing
/// triple (x, y, z) holding (1 - A) at column x, A at column y and -1 at
/// column z, summed where arcs coincide. Rows follow crossing order, columns
/// arc order (see Diagram).
LaurentMatrix presentation_matrix(const Diagram& d);

/// gcd of the corank-1 minors of the presentation matrix, normalized.
/// Throws std::logic_error if the result does not satisfy Delta(1) = +-1.
LaurentPoly alexander_polynomial(const Diagram& d);

struct ExtendedModule {
  RationalInvariantFactors rational; // over Q[A^+-1]
  LaurentPoly e1;                    // corank-1 minor gcd (Alexander polynomial)
  LaurentPoly e2;                    // corank-2 minor gcd

  /// Invariant factors that are not units.
  std::vector<RationalPoly> torsion() const;
};

ExtendedModule extended_module(const Diagram& d);

/// |Delta(-1)|; throws std::logic_error if it comes out even.
Integer knot_determinant(const Diagram& d);

/// Unreduced Burau matrix of one generator: identity outside rows and
/// columns i-1, i (1-based generator i), where sigma_i carries the block
///
///     [ 1 - A   A ]          sigma_i^-1:   [   0          1       ]
///     [   1     0 ]                        [ A^-1    1 - A^-1     ]
///
/// Row k lists the abelianized image of the free generator x_k under the
/// braid action x_i -> x_i |> x_{i+1}, x_{i+1} -> x_i.
LaurentMatrix burau_generator(int strands, int letter);

/// Product of the generator matrices in word order.
LaurentMatrix burau(const BraidWord& w);

} // namespace kq
