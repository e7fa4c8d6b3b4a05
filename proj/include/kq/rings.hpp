#pragma once

#include "kq/laurent.hpp"

#include <array>
#include <string>
#include <vector>

namespace kq {

/// Element p + qE of Z[A^+-1, E] / (E^2 - E(1 - A)), the ring whose modules
/// are the abelian racks. Every element has exactly one such (p, q) form.
struct RackRingElem {
  LaurentPoly p;
  LaurentPoly q;

  static RackRingElem E() { return {LaurentPoly{}, LaurentPoly{1}}; }
  static RackRingElem scalar(const LaurentPoly& p) { return {p, LaurentPoly{}}; }

  friend RackRingElem operator+(const RackRingElem& u, const RackRingElem& v) {
    return {u.p + v.p, u.q + v.q};
  }
  friend RackRingElem operator-(const RackRingElem& u, const RackRingElem& v) {
    return {u.p - v.p, u.q - v.q};
  }
  friend bool operator==(const RackRingElem&, const RackRingElem&) = default;

  /// Image in Z[A^+-1] under E -> 1 - A (the quandle quotient).
  LaurentPoly to_quandle_ring() const;
  std::string to_string() const;
};

/// (p1 + q1 E)(p2 + q2 E) = p1 p2 + (p1 q2 + q1 p2 + q1 q2 (1 - A)) E.
RackRingElem rackring_mul(const RackRingElem& u, const RackRingElem& v);
inline RackRingElem operator*(const RackRingElem& u, const RackRingElem& v) {
  return rackring_mul(u, v);
}

/// Elements of the involutary quotients where A^2 = 1:
///   Kei:         Z[A] / (A^2 - 1),                           a0 + a1 A
///   Involutary:  Z[A, E] / (E^2 - E(1 - A), A^2 - 1),         (p0 + p1 A) + (q0 + q1 A) E
/// For Kei the E part is always zero.
class KeiRingElem {
public:
  enum class Quotient { Kei, Involutary };

  explicit KeiRingElem(Quotient quotient = Quotient::Kei);
  /// Reduces a Laurent polynomial modulo A^2 - 1.
  static KeiRingElem from_laurent(Quotient quotient, const LaurentPoly& p,
                                  const LaurentPoly& e_part = LaurentPoly{});
  static KeiRingElem E(); // lives in the Involutary quotient

  Quotient quotient() const { return quotient_; }
  const std::array<Integer, 2>& scalar_part() const { return p_; }
  const std::array<Integer, 2>& e_part() const { return q_; }

  friend KeiRingElem operator+(const KeiRingElem& u, const KeiRingElem& v);
  friend KeiRingElem operator-(const KeiRingElem& u, const KeiRingElem& v);
  friend bool operator==(const KeiRingElem&, const KeiRingElem&) = default;
  friend KeiRingElem keiring_mul(const KeiRingElem& u, const KeiRingElem& v);

  std::string to_string() const;

private:
  Quotient quotient_;
  std::array<Integer, 2> p_{};
  std::array<Integer, 2> q_{};
};

/// Throws ValidationError when the operands live in different quotients.
KeiRingElem keiring_mul(const KeiRingElem& u, const KeiRingElem& v);
inline KeiRingElem operator*(const KeiRingElem& u, const KeiRingElem& v) {
  return keiring_mul(u, v);
}

/// Dense polynomial in Q[A] (ascending coefficients, no trailing zeros).
/// Used for diagonalization over the PID Q[A^+-1].
class RationalPoly {
public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs);
  /// Multiplies by A^-min_exponent first, so the result lies in Q[A].
  static RationalPoly from_laurent(const LaurentPoly& p);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
  const std::vector<Rational>& coefficients() const { return c_; }
  const Rational& leading() const { return c_.back(); }

  friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend bool operator==(const RationalPoly&, const RationalPoly&) = default;

  /// Quotient and remainder; divisor must be nonzero.
  static std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b);
  /// Monic, with all factors of A removed (A is a unit in Q[A^+-1]).
  RationalPoly normalized() const;
  /// Laurent form when every coefficient is an integer.
  std::optional<LaurentPoly> to_laurent() const;

  std::string to_string() const;

private:
  void trim();
  std::vector<Rational> c_;
};

} // namespace kq
