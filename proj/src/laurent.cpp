#include "kq/laurent.hpp"

#include "kq/error.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

namespace kq {

namespace {

// Dense ascending-coefficient polynomials in Z[A] used by gcd and division.
using Dense = std::vector<Integer>;

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Requires a nonzero polynomial; the result has a nonzero constant term.
Dense to_dense(const LaurentPoly& p) {
  const int lo = p.min_exponent();
  Dense d(static_cast<std::size_t>(p.max_exponent() - lo + 1));
  for (const auto& [e, c] : p.terms()) d[static_cast<std::size_t>(e - lo)] = c;
  return d;
}

LaurentPoly from_dense(const Dense& d, int shift = 0) {
  LaurentPoly::Terms t;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] != 0) t.emplace(static_cast<int>(i) + shift, d[i]);
  return LaurentPoly::from_terms(t);
}

Integer dense_content(const Dense& p) {
  Integer g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(Dense& p) {
  const Integer g = dense_content(p);
  if (g > 1)
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  if (!p.empty() && p.back() < 0)
    for (auto& c : p) c = -c;
}

// lc(b)^k * a mod b, computed by repeated leading-term cancellation.
Dense pseudo_remainder(Dense a, const Dense& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const Integer la = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim(a);
  }
  return a;
}

Dense primitive_gcd(Dense a, Dense b) {
  make_primitive(a);
  make_primitive(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    if (b.size() == 1) return Dense{1};
    Dense r = pseudo_remainder(a, b);
    make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

class PolyParser {
public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  LaurentPoly parse() {
    LaurentPoly result;
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      result += parse_term(sign);
      first = false;
      skip_ws();
    }
    return result;
  }

private:
  LaurentPoly parse_term(int sign) {
    Integer coeff = 1;
    bool have_coeff = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_digits();
      have_coeff = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end() || (peek() != 'A' && peek() != 'a')) fail("expected 'A' after '*'");
      }
    }
    int exponent = 0;
    if (!at_end() && (peek() == 'A' || peek() == 'a')) {
      ++pos_;
      exponent = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        bool paren = false;
        if (!at_end() && peek() == '(') {
          paren = true;
          ++pos_;
          skip_ws();
        }
        int esign = 1;
        if (!at_end() && (peek() == '-' || peek() == '+')) {
          esign = peek() == '-' ? -1 : 1;
          ++pos_;
        }
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
        const Integer e = parse_digits();
        if (!e.fits_sint_p()) fail("exponent out of range");
        exponent = esign * static_cast<int>(e.get_si());
        skip_ws();
        if (paren) {
          if (at_end() || peek() != ')') fail("expected ')'");
          ++pos_;
        }
      }
    } else if (!have_coeff) {
      fail("expected a term");
    }
    return LaurentPoly::monomial(sign * coeff, exponent);
  }

  Integer parse_digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial '" + std::string(s_) + "': " + what + " at offset " +
                     std::to_string(pos_));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

} // namespace

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_.emplace(0, Integer(constant));
}

LaurentPoly::LaurentPoly(const Integer& constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

LaurentPoly LaurentPoly::monomial(const Integer& coeff, int exponent) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.emplace(exponent, coeff);
  return p;
}

LaurentPoly LaurentPoly::from_terms(const Terms& terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms)
    if (c != 0) p.terms_.emplace(e, c);
  return p;
}

LaurentPoly LaurentPoly::from_coefficients(const std::vector<long>& coeffs, int lowest_exponent) {
  LaurentPoly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    p.add_term(lowest_exponent + static_cast<int>(i), Integer(coeffs[i]));
  return p;
}

LaurentPoly LaurentPoly::parse(std::string_view text) { return PolyParser(text).parse(); }

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

bool LaurentPoly::is_unit() const {
  return terms_.size() == 1 && abs(terms_.begin()->second) == 1;
}

Integer LaurentPoly::coeff(int exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw std::domain_error("min_exponent of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw std::domain_error("max_exponent of zero polynomial");
  return terms_.rbegin()->first;
}

Integer LaurentPoly::leading_coeff() const {
  if (terms_.empty()) throw std::domain_error("leading_coeff of zero polynomial");
  return terms_.rbegin()->second;
}

Integer LaurentPoly::lowest_coeff() const {
  if (terms_.empty()) throw std::domain_error("lowest_coeff of zero polynomial");
  return terms_.begin()->second;
}

Integer LaurentPoly::content() const {
  Integer g = 0;
  for (const auto& [e, c] : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace_hint(p.terms_.end(), e + k, c);
  return p;
}

LaurentPoly LaurentPoly::divided_by(const Integer& d) const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    p.terms_.emplace_hint(p.terms_.end(), e, q);
  }
  return p;
}

void LaurentPoly::add_term(int exponent, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  LaurentPoly p;
  for (const auto& [e1, c1] : lhs.terms_)
    for (const auto& [e2, c2] : rhs.terms_) p.add_term(e1 + e2, c1 * c2);
  return p;
}

LaurentPoly operator-(const LaurentPoly& p) {
  LaurentPoly q;
  for (const auto& [e, c] : p.terms_) q.terms_.emplace_hint(q.terms_.end(), e, -c);
  return q;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const Integer mag = abs(c);
    if (e == 0) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += "A";
      if (e != 1) out += "^" + std::to_string(e);
    }
    first = false;
  }
  return out;
}

LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

LaurentPoly laurent_normalize(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  LaurentPoly q = p.shifted(-p.min_exponent());
  return q.lowest_coeff() < 0 ? -q : q;
}

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return laurent_normalize(b);
  if (b.is_zero()) return laurent_normalize(a);
  Integer g;
  const Integer ca = a.content(), cb = b.content();
  mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  const Dense prim = primitive_gcd(to_dense(a), to_dense(b));
  return laurent_normalize(from_dense(prim) * LaurentPoly(g));
}

std::optional<LaurentPoly> laurent_divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return LaurentPoly{};
  // Both shifted to nonzero constant term, so the quotient lies in Z[A].
  Dense num = to_dense(a);
  const Dense den = to_dense(b);
  if (num.size() < den.size()) return std::nullopt;
  const std::size_t dd = den.size() - 1;
  Dense quot(num.size() - dd);
  for (std::size_t k = quot.size(); k-- > 0;) {
    Integer& top = num[k + dd];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), den.back().get_mpz_t())) return std::nullopt;
    Integer q;
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), den.back().get_mpz_t());
    for (std::size_t i = 0; i <= dd; ++i) num[k + i] -= q * den[i];
    quot[k] = q;
  }
  for (const auto& c : num)
    if (c != 0) return std::nullopt;
  return from_dense(quot, a.min_exponent() - b.min_exponent());
}

bool unit_equivalent(const LaurentPoly& a, const LaurentPoly& b) {
  return laurent_normalize(a) == laurent_normalize(b);
}

Rational laurent_eval(const LaurentPoly& p, const Rational& a) {
  if (a == 0) throw std::domain_error("A is invertible; cannot evaluate at 0");
  Rational sum = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational power = 1;
    const Rational base = e >= 0 ? a : Rational(1) / a;
    for (int i = 0; i < std::abs(e); ++i) power *= base;
    sum += Rational(c) * power;
  }
  sum.canonicalize();
  return sum;
}

LaurentPoly laurent_mirror(const LaurentPoly& p) {
  LaurentPoly::Terms t;
  for (const auto& [e, c] : p.terms()) t.emplace(-e, c);
  return LaurentPoly::from_terms(t);
}

} // namespace kq
