#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace matchlat {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Dense row-major matrix.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw std::invalid_argument("from_rows: ragged rows");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<T> row_vector(std::size_t r) const { return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_), data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)}; }

  void append_row(std::span<const T> values) {
    if (rows_ == 0 && cols_ == 0) cols_ = values.size();
    if (values.size() != cols_) throw std::invalid_argument("append_row: width mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

IntMatrix identity_matrix(std::size_t n);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

std::size_t rank(const IntMatrix& m);
std::size_t rank(const RatMatrix& m);

/// Some x with m·x = b, or nullopt when the system is inconsistent.
std::optional<RatVector> solve(const RatMatrix& m, std::span<const Rational> b);

/// Incrementally built row space over Q, kept in fraction-free echelon form.
class RowSpace {
 public:
  explicit RowSpace(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  /// Adds v if it is independent of the current rows; returns whether it was.
  bool add(std::span<const Integer> v);
  bool contains(std::span<const Integer> v) const;

 private:
  IntVector reduce(std::span<const Integer> v) const;

  std::size_t dim_;
  std::vector<IntVector> rows_;
  std::vector<std::size_t> pivots_;
};

/// A full-rank integer row basis in canonical Hermite normal form: pivots are
/// positive and entries above a pivot lie in [0, pivot).
class Lattice {
 public:
  Lattice() = default;
  Lattice(std::size_t ambient_dim, IntMatrix basis);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t rank() const { return basis_.rows(); }
  const IntMatrix& basis() const { return basis_; }
  /// Column of each basis row's pivot.
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_dim_ = 0;
  IntMatrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Row lattice of m, in canonical form.
Lattice hnf(const IntMatrix& m);

/// U·m·V = D with U, V unimodular; `divisors` holds the nonzero diagonal of D
/// (d1 | d2 | ...). `v_inverse` is V⁻¹.
struct SmithForm {
  IntMatrix u;
  IntMatrix v;
  IntMatrix v_inverse;
  IntMatrix d;
  std::vector<Integer> divisors;
};
SmithForm smith(const IntMatrix& m);
std::vector<Integer> snf(const IntMatrix& m);

/// All integer points of the rational row span of m.
Lattice saturation(const IntMatrix& m);

/// Integer coefficients c with Σ c_i·basis_i = z, if z is in the lattice.
std::optional<IntVector> lattice_member(const Lattice& l, std::span<const Integer> z);
bool lattice_equal(const Lattice& a, const Lattice& b);
/// [super : sub]; nullopt means infinite index. Throws if sub ⊄ super.
std::optional<Integer> lattice_index(const Lattice& sub, const Lattice& super);

/// Lattice basis (rows) of {z ∈ Zⁿ : m·z = 0}.
IntMatrix integer_kernel(const IntMatrix& m);

IntVector combine(const IntMatrix& rows, std::span<const Integer> coefficients);

}  // namespace matchlat
