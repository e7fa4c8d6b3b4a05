#pragma once

#include "kq/laurent.hpp"
#include "kq/rings.hpp"

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace kq {

/// Dense row-major matrix with value semantics.
template <class T>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n, const T& one = T{1}) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const T& at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
    return (*this)(r, c);
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == T{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

using IntMatrix = Matrix<Integer>;
using LaurentMatrix = Matrix<LaurentPoly>;

/// Nonzero invariant factors d1 | d2 | ... of an integer matrix (all positive).
std::vector<Integer> snf_int(IntMatrix m);

/// Rank over Q.
std::size_t rank_int(IntMatrix m);

/// Integer basis of the lattice { v in Z^cols : m v = 0 }, as columns.
IntMatrix integer_kernel(const IntMatrix& m);

/// Column-style Hermite reduction: returns a matrix whose columns form a
/// basis of the lattice spanned by the columns of m, in column echelon form
/// (pivot rows strictly increasing).
IntMatrix column_basis(IntMatrix m);

/// Solves basis * x = target for integer x, where basis comes from
/// column_basis. Returns nullopt when target is outside the lattice.
std::optional<std::vector<Integer>> solve_in_lattice(const IntMatrix& basis,
                                                     const std::vector<Integer>& target);

/// Exact determinant of the submatrix on the given rows and columns
/// (fraction-free elimination). Throws std::out_of_range on bad indices and
/// std::invalid_argument when the index sets differ in size.
LaurentPoly minor(const LaurentMatrix& m, const std::vector<std::size_t>& row_set,
                  const std::vector<std::size_t>& col_set);

LaurentPoly determinant(const LaurentMatrix& m);

/// gcd of all (cols - k) x (cols - k) minors, normalized. Minor size <= 0
/// gives 1; a minor size larger than the row count gives 0.
LaurentPoly elementary_ideal_gcd(const LaurentMatrix& m, std::size_t k);

struct RationalInvariantFactors {
  std::vector<RationalPoly> factors; // nonzero diagonal entries, each divides the next
  std::size_t free_rank = 0;         // cols - rank
};

/// Diagonal form of the cokernel presentation over the PID Q[A^+-1].
RationalInvariantFactors invariant_factors_rational(const LaurentMatrix& m);

} // namespace kq
