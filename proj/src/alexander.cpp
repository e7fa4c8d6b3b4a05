#include "kq/alexander.hpp"

#include "kq/error.hpp"

#include <cstdlib>
#include <stdexcept>

namespace kq {

LaurentMatrix presentation_matrix(const Diagram& d) {
  const LaurentPoly a = LaurentPoly::A();
  const LaurentPoly one_minus_a = LaurentPoly{1} - a;
  LaurentMatrix m(d.resolved.size(), static_cast<std::size_t>(d.arc_count));
  for (std::size_t r = 0; r < d.resolved.size(); ++r) {
    const Triple& t = d.resolved[r];
    m(r, static_cast<std::size_t>(t.x)) += one_minus_a;
    m(r, static_cast<std::size_t>(t.y)) += a;
    m(r, static_cast<std::size_t>(t.z)) -= LaurentPoly{1};
  }
  return m;
}

LaurentPoly alexander_polynomial(const Diagram& d) {
  const LaurentPoly delta = elementary_ideal_gcd(presentation_matrix(d), 1);
  if (abs(laurent_eval(delta, 1)) != 1)
    throw std::logic_error("Alexander polynomial " + delta.to_string() +
                           " has Delta(1) != +-1; the diagram encoding is inconsistent");
  return delta;
}

std::vector<RationalPoly> ExtendedModule::torsion() const {
  std::vector<RationalPoly> out;
  for (const auto& f : rational.factors)
    if (f.degree() > 0) out.push_back(f);
  return out;
}

ExtendedModule extended_module(const Diagram& d) {
  const LaurentMatrix m = presentation_matrix(d);
  return {invariant_factors_rational(m), elementary_ideal_gcd(m, 1), elementary_ideal_gcd(m, 2)};
}

Integer knot_determinant(const Diagram& d) {
  const Rational v = laurent_eval(alexander_polynomial(d), -1);
  if (v.get_den() != 1) throw std::logic_error("Delta(-1) is not an integer");
  const Integer det = abs(v.get_num());
  if (mpz_even_p(det.get_mpz_t())) throw std::logic_error("knot determinant " + det.get_str() + " is even");
  return det;
}

LaurentMatrix burau_generator(int strands, int letter) {
  if (letter == 0 || std::abs(letter) >= strands)
    throw ValidationError("braid letter " + std::to_string(letter) + " out of range for " +
                          std::to_string(strands) + " strands");
  LaurentMatrix m = LaurentMatrix::identity(static_cast<std::size_t>(strands));
  const auto i = static_cast<std::size_t>(std::abs(letter) - 1);
  const LaurentPoly a = LaurentPoly::A();
  if (letter > 0) {
    m(i, i) = LaurentPoly{1} - a;
    m(i, i + 1) = a;
    m(i + 1, i) = LaurentPoly{1};
    m(i + 1, i + 1) = LaurentPoly{};
  } else {
    const LaurentPoly inv = LaurentPoly::monomial(1, -1);
    m(i, i) = LaurentPoly{};
    m(i, i + 1) = LaurentPoly{1};
    m(i + 1, i) = inv;
    m(i + 1, i + 1) = LaurentPoly{1} - inv;
  }
  return m;
}

LaurentMatrix burau(const BraidWord& w) {
  LaurentMatrix m = LaurentMatrix::identity(static_cast<std::size_t>(w.strands));
  for (int l : w.letters) m = m * burau_generator(w.strands, l);
  return m;
}

} // namespace kq
