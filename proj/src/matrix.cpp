#include "kq/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kq {

namespace {

// g = s*a + t*b with g >= 0.
void extended_gcd(const Integer& a, const Integer& b, Integer& g, Integer& s, Integer& t) {
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

// Replaces columns (p, j) by the unimodular combination that puts gcd(m(row,p), m(row,j))
// into column p and 0 into column j. Applied to every matrix in `targets`.
void combine_columns(std::vector<IntMatrix*> targets, std::size_t row, std::size_t p, std::size_t j) {
  IntMatrix& m = *targets.front();
  const Integer x = m(row, p);
  const Integer y = m(row, j);
  Integer g, s, t;
  extended_gcd(x, y, g, s, t);
  Integer xg, yg;
  mpz_divexact(xg.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(yg.get_mpz_t(), y.get_mpz_t(), g.get_mpz_t());
  for (IntMatrix* tm : targets) {
    for (std::size_t r = 0; r < tm->rows(); ++r) {
      const Integer a = (*tm)(r, p);
      const Integer b = (*tm)(r, j);
      (*tm)(r, p) = s * a + t * b;
      (*tm)(r, j) = xg * b - yg * a;
    }
  }
}

// Column echelon reduction of h, mirrored on u (may be null). Returns the
// number of nonzero (pivot) columns, which come first.
std::size_t column_echelon(IntMatrix& h, IntMatrix* u) {
  std::size_t p = 0;
  for (std::size_t row = 0; row < h.rows() && p < h.cols(); ++row) {
    std::size_t first = h.cols();
    for (std::size_t j = p; j < h.cols(); ++j)
      if (h(row, j) != 0) {
        first = j;
        break;
      }
    if (first == h.cols()) continue;
    h.swap_cols(p, first);
    if (u) u->swap_cols(p, first);
    for (std::size_t j = p + 1; j < h.cols(); ++j) {
      if (h(row, j) == 0) continue;
      std::vector<IntMatrix*> targets{&h};
      if (u) targets.push_back(u);
      combine_columns(targets, row, p, j);
    }
    ++p;
  }
  return p;
}

struct Position {
  std::size_t row;
  std::size_t col;
};

template <class Less>
std::optional<Position> best_nonzero(const IntMatrix& m, std::size_t t, Less less) {
  std::optional<Position> best;
  for (std::size_t i = t; i < m.rows(); ++i)
    for (std::size_t j = t; j < m.cols(); ++j) {
      if (m(i, j) == 0) continue;
      if (!best || less(m(i, j), m(best->row, best->col))) best = Position{i, j};
    }
  return best;
}

void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) += f * m(src, c);
}
void add_col_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) += f * m(r, src);
}

using RMatrix = Matrix<RationalPoly>;

void rows_axpy(RMatrix& m, std::size_t dst, std::size_t src, const RationalPoly& f) {
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!m(src, c).is_zero()) m(dst, c) = m(dst, c) - f * m(src, c);
}
void cols_axpy(RMatrix& m, std::size_t dst, std::size_t src, const RationalPoly& f) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (!m(r, src).is_zero()) m(r, dst) = m(r, dst) - f * m(r, src);
}

RationalPoly rational_at_zero(const LaurentPoly& p) {
  if (p.is_zero()) return {};
  std::vector<Rational> c(static_cast<std::size_t>(p.max_exponent() + 1));
  for (const auto& [e, v] : p.terms()) c[static_cast<std::size_t>(e)] = Rational(v);
  return RationalPoly(std::move(c));
}

} // namespace

std::vector<Integer> snf_int(IntMatrix m) {
  const auto abs_less = [](const Integer& a, const Integer& b) { return abs(a) < abs(b); };
  std::vector<Integer> factors;
  const std::size_t n = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < n; ++t) {
    auto piv = best_nonzero(m, t, abs_less);
    if (!piv) break;
    m.swap_rows(t, piv->row);
    m.swap_cols(t, piv->col);
    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m.rows(); ++i) {
        if (m(i, t) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), m(i, t).get_mpz_t(), m(t, t).get_mpz_t());
        add_row_multiple(m, i, t, -q);
        if (m(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < m.cols(); ++j) {
        if (m(t, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), m(t, j).get_mpz_t(), m(t, t).get_mpz_t());
        add_col_multiple(m, j, t, -q);
        if (m(t, j) != 0) dirty = true;
      }
      if (dirty) {
        // A smaller remainder sits in row or column t; make it the pivot.
        for (std::size_t i = t + 1; i < m.rows(); ++i)
          if (m(i, t) != 0 && abs(m(i, t)) < abs(m(t, t))) m.swap_rows(t, i);
        for (std::size_t j = t + 1; j < m.cols(); ++j)
          if (m(t, j) != 0 && abs(m(t, j)) < abs(m(t, t))) m.swap_cols(t, j);
        continue;
      }
      bool divides = true;
      for (std::size_t i = t + 1; i < m.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < m.cols(); ++j)
          if (!mpz_divisible_p(m(i, j).get_mpz_t(), m(t, t).get_mpz_t())) {
            add_row_multiple(m, t, i, Integer(1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    factors.push_back(abs(m(t, t)));
  }
  return factors;
}

std::size_t rank_int(IntMatrix m) { return column_echelon(m, nullptr); }

IntMatrix integer_kernel(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.cols());
  const std::size_t p = column_echelon(h, &u);
  IntMatrix k(m.cols(), m.cols() - p);
  for (std::size_t r = 0; r < m.cols(); ++r)
    for (std::size_t c = p; c < m.cols(); ++c) k(r, c - p) = u(r, c);
  return k;
}

IntMatrix column_basis(IntMatrix m) {
  const std::size_t p = column_echelon(m, nullptr);
  IntMatrix b(m.rows(), p);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < p; ++c) b(r, c) = m(r, c);
  return b;
}

std::optional<std::vector<Integer>> solve_in_lattice(const IntMatrix& basis,
                                                     const std::vector<Integer>& target) {
  if (target.size() != basis.rows()) throw std::invalid_argument("lattice target size mismatch");
  std::vector<Integer> v = target;
  std::vector<Integer> x(basis.cols());
  std::size_t row = 0;
  for (std::size_t k = 0; k < basis.cols(); ++k) {
    while (row < basis.rows() && basis(row, k) == 0) {
      if (v[row] != 0) return std::nullopt;
      ++row;
    }
    if (row == basis.rows()) break;
    if (!mpz_divisible_p(v[row].get_mpz_t(), basis(row, k).get_mpz_t())) return std::nullopt;
    mpz_divexact(x[k].get_mpz_t(), v[row].get_mpz_t(), basis(row, k).get_mpz_t());
    for (std::size_t r = row; r < basis.rows(); ++r) v[r] -= x[k] * basis(r, k);
    ++row;
  }
  for (const auto& c : v)
    if (c != 0) return std::nullopt;
  return x;
}

LaurentPoly minor(const LaurentMatrix& m, const std::vector<std::size_t>& row_set,
                  const std::vector<std::size_t>& col_set) {
  if (row_set.size() != col_set.size())
    throw std::invalid_argument("minor needs equally many rows and columns");
  for (auto r : row_set)
    if (r >= m.rows()) throw std::out_of_range("minor row index out of range");
  for (auto c : col_set)
    if (c >= m.cols()) throw std::out_of_range("minor column index out of range");
  const std::size_t k = row_set.size();
  if (k == 0) return LaurentPoly{1};
  LaurentMatrix a(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) a(i, j) = m(row_set[i], col_set[j]);

  // Bareiss: every intermediate entry is itself a minor, so the divisions are exact.
  bool negate = false;
  LaurentPoly prev{1};
  for (std::size_t s = 0; s < k; ++s) {
    std::size_t piv = s;
    while (piv < k && a(piv, s).is_zero()) ++piv;
    if (piv == k) return LaurentPoly{};
    if (piv != s) {
      a.swap_rows(piv, s);
      negate = !negate;
    }
    for (std::size_t i = s + 1; i < k; ++i) {
      for (std::size_t j = s + 1; j < k; ++j) {
        LaurentPoly v = a(i, j) * a(s, s) - a(i, s) * a(s, j);
        auto q = laurent_divide_exact(v, prev);
        if (!q) throw std::logic_error("Bareiss division was not exact");
        a(i, j) = std::move(*q);
      }
      a(i, s) = LaurentPoly{};
    }
    prev = a(s, s);
  }
  return negate ? -a(k - 1, k - 1) : a(k - 1, k - 1);
}

LaurentPoly determinant(const LaurentMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  std::vector<std::size_t> idx(m.rows());
  std::iota(idx.begin(), idx.end(), 0);
  return minor(m, idx, idx);
}

namespace {

// Calls f on every size-k subset of {0..n-1} in lexicographic order until f returns false.
template <class F>
bool for_each_subset(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    if (!f(idx)) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

} // namespace

LaurentPoly elementary_ideal_gcd(const LaurentMatrix& m, std::size_t k) {
  if (k >= m.cols()) return LaurentPoly{1};
  const std::size_t size = m.cols() - k;
  if (size > m.rows()) return LaurentPoly{};
  LaurentPoly g;
  for_each_subset(m.rows(), size, [&](const std::vector<std::size_t>& rows) {
    return for_each_subset(m.cols(), size, [&](const std::vector<std::size_t>& cols) {
      g = laurent_gcd(g, minor(m, rows, cols));
      return !g.is_one();
    });
  });
  return g;
}

RationalInvariantFactors invariant_factors_rational(const LaurentMatrix& lm) {
  // Each row is multiplied by a unit A^-k so all entries are honest polynomials.
  RMatrix m(lm.rows(), lm.cols());
  for (std::size_t i = 0; i < lm.rows(); ++i) {
    std::optional<int> lo;
    for (std::size_t j = 0; j < lm.cols(); ++j)
      if (!lm(i, j).is_zero()) lo = std::min(lo.value_or(lm(i, j).min_exponent()), lm(i, j).min_exponent());
    for (std::size_t j = 0; j < lm.cols(); ++j)
      m(i, j) = rational_at_zero(lo ? lm(i, j).shifted(-*lo) : lm(i, j));
  }

  const auto smallest = [&](std::size_t t) {
    std::optional<Position> best;
    for (std::size_t i = t; i < m.rows(); ++i)
      for (std::size_t j = t; j < m.cols(); ++j)
        if (!m(i, j).is_zero() && (!best || m(i, j).degree() < m(best->row, best->col).degree()))
          best = Position{i, j};
    return best;
  };

  RationalInvariantFactors out;
  const std::size_t n = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < n; ++t) {
    auto piv = smallest(t);
    if (!piv) break;
    m.swap_rows(t, piv->row);
    m.swap_cols(t, piv->col);
    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m.rows(); ++i) {
        if (m(i, t).is_zero()) continue;
        rows_axpy(m, i, t, RationalPoly::divmod(m(i, t), m(t, t)).first);
        if (!m(i, t).is_zero()) dirty = true;
      }
      for (std::size_t j = t + 1; j < m.cols(); ++j) {
        if (m(t, j).is_zero()) continue;
        cols_axpy(m, j, t, RationalPoly::divmod(m(t, j), m(t, t)).first);
        if (!m(t, j).is_zero()) dirty = true;
      }
      if (dirty) {
        for (std::size_t i = t + 1; i < m.rows(); ++i)
          if (!m(i, t).is_zero() && m(i, t).degree() < m(t, t).degree()) m.swap_rows(t, i);
        for (std::size_t j = t + 1; j < m.cols(); ++j)
          if (!m(t, j).is_zero() && m(t, j).degree() < m(t, t).degree()) m.swap_cols(t, j);
        continue;
      }
      bool divides = true;
      for (std::size_t i = t + 1; i < m.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < m.cols(); ++j)
          if (!m(i, j).is_zero() && !RationalPoly::divmod(m(i, j), m(t, t)).second.is_zero()) {
            rows_axpy(m, t, i, RationalPoly(std::vector<Rational>{Rational(-1)}));
            divides = false;
            break;
          }
      if (divides) break;
    }
    out.factors.push_back(m(t, t).normalized());
  }
  out.free_rank = lm.cols() - out.factors.size();
  return out;
}

} // namespace kq
