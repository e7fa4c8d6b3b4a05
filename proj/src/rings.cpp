#include "kq/rings.hpp"

#include "kq/error.hpp"

#include <stdexcept>

namespace kq {

namespace {

const LaurentPoly& one_minus_a() {
  static const LaurentPoly v = LaurentPoly{1} - LaurentPoly::A();
  return v;
}

std::array<Integer, 2> reduce_mod_a2(const LaurentPoly& p) {
  std::array<Integer, 2> r{};
  for (const auto& [e, c] : p.terms()) r[static_cast<std::size_t>(((e % 2) + 2) % 2)] += c;
  return r;
}

// (a0 + a1 A)(b0 + b1 A) with A^2 = 1.
std::array<Integer, 2> mul_mod_a2(const std::array<Integer, 2>& a, const std::array<Integer, 2>& b) {
  return {a[0] * b[0] + a[1] * b[1], a[0] * b[1] + a[1] * b[0]};
}

std::string format_mod_a2(const std::array<Integer, 2>& a) {
  return LaurentPoly::from_terms({{0, a[0]}, {1, a[1]}}).to_string();
}

std::string format_rational(const Rational& r) {
  return r.get_den() == 1 ? r.get_num().get_str() : r.get_str();
}

} // namespace

LaurentPoly RackRingElem::to_quandle_ring() const { return p + q * one_minus_a(); }

std::string RackRingElem::to_string() const {
  if (q.is_zero()) return p.to_string();
  const std::string e = q.is_one() ? "E" : q == LaurentPoly{-1} ? "-E" : "(" + q.to_string() + ")*E";
  return p.is_zero() ? e : p.to_string() + " + " + e;
}

RackRingElem rackring_mul(const RackRingElem& u, const RackRingElem& v) {
  return {u.p * v.p, u.p * v.q + u.q * v.p + u.q * v.q * one_minus_a()};
}

KeiRingElem::KeiRingElem(Quotient quotient) : quotient_(quotient) {}

KeiRingElem KeiRingElem::from_laurent(Quotient quotient, const LaurentPoly& p,
                                      const LaurentPoly& e_part) {
  if (quotient == Quotient::Kei && !e_part.is_zero())
    throw ValidationError("the kei ring has no E generator");
  KeiRingElem r(quotient);
  r.p_ = reduce_mod_a2(p);
  r.q_ = reduce_mod_a2(e_part);
  return r;
}

KeiRingElem KeiRingElem::E() {
  return from_laurent(Quotient::Involutary, LaurentPoly{}, LaurentPoly{1});
}

KeiRingElem operator+(const KeiRingElem& u, const KeiRingElem& v) {
  if (u.quotient_ != v.quotient_) throw ValidationError("mixed kei/involutary ring operands");
  KeiRingElem r(u.quotient_);
  for (std::size_t i = 0; i < 2; ++i) {
    r.p_[i] = u.p_[i] + v.p_[i];
    r.q_[i] = u.q_[i] + v.q_[i];
  }
  return r;
}

KeiRingElem operator-(const KeiRingElem& u, const KeiRingElem& v) {
  if (u.quotient_ != v.quotient_) throw ValidationError("mixed kei/involutary ring operands");
  KeiRingElem r(u.quotient_);
  for (std::size_t i = 0; i < 2; ++i) {
    r.p_[i] = u.p_[i] - v.p_[i];
    r.q_[i] = u.q_[i] - v.q_[i];
  }
  return r;
}

KeiRingElem keiring_mul(const KeiRingElem& u, const KeiRingElem& v) {
  if (u.quotient_ != v.quotient_) throw ValidationError("mixed kei/involutary ring operands");
  KeiRingElem r(u.quotient_);
  r.p_ = mul_mod_a2(u.p_, v.p_);
  if (u.quotient_ == KeiRingElem::Quotient::Involutary) {
    const std::array<Integer, 2> one_minus_a{1, -1};
    const auto a = mul_mod_a2(u.p_, v.q_);
    const auto b = mul_mod_a2(u.q_, v.p_);
    const auto c = mul_mod_a2(mul_mod_a2(u.q_, v.q_), one_minus_a);
    for (std::size_t i = 0; i < 2; ++i) r.q_[i] = a[i] + b[i] + c[i];
  }
  return r;
}

std::string KeiRingElem::to_string() const {
  if (q_[0] == 0 && q_[1] == 0) return format_mod_a2(p_);
  const std::string e = "(" + format_mod_a2(q_) + ")*E";
  return (p_[0] == 0 && p_[1] == 0) ? e : format_mod_a2(p_) + " + " + e;
}

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

RationalPoly RationalPoly::from_laurent(const LaurentPoly& p) {
  if (p.is_zero()) return {};
  const int lo = p.min_exponent();
  std::vector<Rational> c(static_cast<std::size_t>(p.max_exponent() - lo + 1));
  for (const auto& [e, v] : p.terms()) c[static_cast<std::size_t>(e - lo)] = Rational(v);
  return RationalPoly(std::move(c));
}

void RationalPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return RationalPoly(std::move(c));
}

RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return RationalPoly(std::move(c));
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return RationalPoly(std::move(c));
}

std::pair<RationalPoly, RationalPoly> RationalPoly::divmod(const RationalPoly& a,
                                                           const RationalPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  std::vector<Rational> rem = a.c_;
  if (rem.size() < b.c_.size()) return {RationalPoly{}, a};
  std::vector<Rational> quot(rem.size() - b.c_.size() + 1);
  const std::size_t db = b.c_.size() - 1;
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational q = rem[k + db] / b.c_.back();
    if (q == 0) continue;
    for (std::size_t i = 0; i <= db; ++i) rem[k + i] -= q * b.c_[i];
    quot[k] = q;
  }
  return {RationalPoly(std::move(quot)), RationalPoly(std::move(rem))};
}

RationalPoly RationalPoly::normalized() const {
  if (is_zero()) return {};
  std::size_t lo = 0;
  while (c_[lo] == 0) ++lo;
  std::vector<Rational> c(c_.begin() + static_cast<std::ptrdiff_t>(lo), c_.end());
  const Rational lead = c.back();
  for (auto& v : c) v /= lead;
  return RationalPoly(std::move(c));
}

std::optional<LaurentPoly> RationalPoly::to_laurent() const {
  LaurentPoly::Terms t;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].get_den() != 1) return std::nullopt;
    if (c_[i] != 0) t.emplace(static_cast<int>(i), c_[i].get_num());
  }
  return LaurentPoly::from_terms(t);
}

std::string RationalPoly::to_string() const {
  if (auto lp = to_laurent()) return lp->to_string();
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const bool negative = c_[i] < 0;
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    const Rational mag = abs(c_[i]);
    if (i == 0) {
      out += format_rational(mag);
    } else {
      if (mag != 1) out += format_rational(mag) + "*";
      out += "A";
      if (i != 1) out += "^" + std::to_string(i);
    }
    first = false;
  }
  return out;
}

} // namespace kq
