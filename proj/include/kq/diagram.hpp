#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace kq {

/// Planar diagram code. Each crossing lists four edge labels starting at the
/// incoming under-strand and proceeding counterclockwise, so the under-strand
/// runs from position 0 to position 2 and the over-strand joins positions 1
/// and 3.
struct PDCode {
  std::vector<std::array<long, 4>> crossings;

  std::string to_string() const;
};

/// A crossing of an oriented diagram in terms of arc ids.
struct Crossing {
  int over = 0;
  int under_in = 0;
  int under_out = 0;
  int sign = 1; // +1 right-handed, -1 left-handed
};

/// Quandle relation x |> y = z read off a crossing.
struct Triple {
  int x = 0;
  int y = 0;
  int z = 0;
  friend bool operator==(const Triple&, const Triple&) = default;
};

/// Oriented knot diagram with every crossing resolved into |>-form.
///
/// Arcs are numbered 0..arc_count-1 in increasing order of the smallest edge
/// label they contain; crossings keep their input order. A positive crossing
/// resolves to (over, under_in, under_out) and a negative one to
/// (over, under_out, under_in), so that z = x |> y always holds in the knot
/// quandle.
struct Diagram {
  int arc_count = 1;
  std::vector<Crossing> crossings;
  std::vector<Triple> resolved;

  std::size_t crossing_count() const { return crossings.size(); }
  int writhe() const;
  /// Same diagram with every crossing sign reversed.
  Diagram mirror() const;
};

/// Parses `X[a,b,c,d] X[...]`. Checks that each label occurs exactly twice and
/// that the labels form a single closed component. An empty string is the
/// crossingless unknot diagram.
PDCode parse_pd(std::string_view text);

/// Number of closed components traced by the strands of a PD code.
std::size_t pd_component_count(const PDCode& pd);

/// Walks the knot, orients every strand, assigns arcs and signs.
/// Throws ValidationError when the under-strand directions are inconsistent.
Diagram resolve_crossings(const PDCode& pd);

struct BraidWord {
  int strands = 1;
  std::vector<int> letters; // +-i means sigma_i^{+-1}, 1 <= i < strands
};

/// Accepts `s1 s2^-1 ...`, compact letters `aB` (uppercase inverse), or an
/// integer list `[1,-2,1]`. With strands <= 0 the count is max index + 1.
BraidWord parse_braid(std::string_view text, int strands = 0);
std::string format_braid(const BraidWord& w);

/// Number of components of the closure (cycles of the underlying permutation).
std::size_t braid_closure_components(const BraidWord& w);

/// PD code of the braid closure; throws ValidationError for links.
PDCode braid_closure_pd(const BraidWord& w);
Diagram braid_closure(const BraidWord& w);

struct WirtingerPresentation {
  int generators = 0;
  std::vector<Triple> relators; // x y x^-1 = z
};

WirtingerPresentation wirtinger(const Diagram& d);

} // namespace kq
