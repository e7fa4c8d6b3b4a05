#pragma once

#include "kq/abelian.hpp"
#include "kq/diagram.hpp"
#include "kq/quandle.hpp"

#include <string>
#include <vector>

namespace kq {

/// Beck module over a finite rack X: a finite abelian group M(x) per element
/// and structure maps
///
///     eps(x,y):   M(x) -> M(x |> y)
///     alpha(x,y): M(y) -> M(x |> y)
///
/// stored as integer matrices in the standard generators of the groups
/// (rows index target generators, columns source generators).
struct QuandleModule {
  FiniteQuandle base;
  std::vector<FiniteAbGroup> groups;
  std::vector<std::vector<IntMatrix>> eps;   // eps[x][y]
  std::vector<std::vector<IntMatrix>> alpha; // alpha[x][y]

  const FiniteAbGroup& group(int x) const { return groups[static_cast<std::size_t>(x)]; }
  const IntMatrix& eps_at(int x, int y) const { return eps[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]; }
  const IntMatrix& alpha_at(int x, int y) const {
    return alpha[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
  }
};

/// Result of check_module. The four coefficient identities are, for all x, y, z:
///   A1  alpha(x, y|>z) alpha(y,z) = alpha(x|>y, x|>z) alpha(x,z)
///   A2  alpha(x, y|>z) eps(y,z)   = eps(x|>y, x|>z) alpha(x,y)
///   A3  eps(x, y|>z)              = eps(x|>y, x|>z) eps(x,y) + alpha(x|>y, x|>z) eps(x,z)
///   A4  eps(x,x)                  = id - alpha(x,x)        (quandle bases only)
/// plus invertibility of every alpha(x,y).
struct ModuleReport {
  bool alpha_invertible = true;
  bool a1 = true;
  bool a2 = true;
  bool a3 = true;
  bool a4 = true;
  std::vector<std::string> violations;

  bool ok() const { return alpha_invertible && a1 && a2 && a3 && a4; }
};

/// Throws ValidationError on structural problems (wrong sizes or shapes,
/// infinite groups, matrices that are not homomorphisms).
void validate_module_structure(const QuandleModule& m);

ModuleReport check_module(const QuandleModule& m);

/// The rack on the disjoint union of the M(x) with
///   m |> n = eps(x,y) m + alpha(x,y) n      (m in M(x), n in M(y)).
/// Elements are numbered fibre by fibre; within M(x) by mixed radix over its
/// generators, first generator fastest. Throws ValidationError when the
/// module fails check_module.
struct Extension {
  FiniteQuandle quandle;
  std::vector<int> projection; // element -> base element
};
Extension extension(const QuandleModule& m);

/// All M(x) = Z/n, alpha = multiplication by t, eps = multiplication by 1 - t.
/// Throws ValidationError unless gcd(t, n) = 1.
QuandleModule constant_module(const FiniteQuandle& q, int n, int t);

/// Symbolic presentation of the Alexander-Beck module of a diagram: one
/// generator per arc, one relation eps(x,y) x + alpha(x,y) y - z per crossing.
struct ABPresentation {
  int generators = 0;
  std::vector<Triple> relations;

  std::vector<std::string> relation_strings() const;
};
ABPresentation ab_presentation(const Diagram& d);

struct DerivationGroup {
  FiniteAbGroup group;
  friend bool operator==(const DerivationGroup&, const DerivationGroup&) = default;
  friend auto operator<=>(const DerivationGroup& a, const DerivationGroup& b) { return a.group <=> b.group; }
};

/// Sections nu(a) in M(c(a)) with nu(z) = eps(c x, c y) nu(x) + alpha(c x, c y) nu(y)
/// for every crossing. Throws ValidationError for an invalid coloring (naming
/// the violated triple) or a module that fails check_module.
DerivationGroup derivations(const Diagram& d, const Coloring& c, const QuandleModule& m);

/// Derivation groups over all colorings into m.base, sorted.
std::vector<DerivationGroup> derivation_spectrum(const Diagram& d, const QuandleModule& m);
/// Same, checking that m lives over q.
std::vector<DerivationGroup> derivation_spectrum(const Diagram& d, const FiniteQuandle& q, const QuandleModule& m);

/// Parses `constant:n:t` over the given base.
QuandleModule module_from_spec(const std::string& spec, const FiniteQuandle& base);

} // namespace kq
