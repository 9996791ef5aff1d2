#include "matchlat/linalg.hpp"

#include <algorithm>
#include <utility>

namespace matchlat {

namespace {

void divide_by_content(std::span<Integer> v) {
  Integer g = 0;
  for (const auto& x : v) {
    if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

template <typename T>
void swap_rows(Matrix<T>& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

template <typename T>
void swap_cols(Matrix<T>& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

// row[target] -= q * row[source]
void row_axpy(IntMatrix& m, std::size_t target, std::size_t source, const Integer& q) {
  if (q == 0) return;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (m(source, c) != 0) m(target, c) -= q * m(source, c);
  }
}

// col[target] -= q * col[source]
void col_axpy(IntMatrix& m, std::size_t target, std::size_t source, const Integer& q) {
  if (q == 0) return;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (m(r, source) != 0) m(r, target) -= q * m(r, source);
  }
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: dimension mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

std::size_t rank(const IntMatrix& m) {
  IntMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    swap_rows(a, r, p);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      Integer f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = a(r, c) * a(i, j) - f * a(r, j);
      divide_by_content(a.row(i));
    }
    ++r;
  }
  return r;
}

std::size_t rank(const RatMatrix& m) {
  IntMatrix a(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) a(r, c) = m(r, c).get_num() * (l / m(r, c).get_den());
  }
  return rank(a);
}

std::optional<RatVector> solve(const RatMatrix& m, std::span<const Rational> b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side length differs from row count");
  const std::size_t rows = m.rows(), cols = m.cols();
  RatMatrix a(rows, cols + 1);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) a(r, c) = m(r, c);
    a(r, cols) = b[r];
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    swap_rows(a, r, p);
    Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j <= cols; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = c; j <= cols; ++j) a(i, j) -= f * a(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (a(i, cols) != 0) return std::nullopt;
  RatVector x(cols, Rational(0));
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = a(i, cols);
  return x;
}

IntVector RowSpace::reduce(std::span<const Integer> v) const {
  if (v.size() != dim_) throw std::invalid_argument("RowSpace: vector length mismatch");
  IntVector w(v.begin(), v.end());
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (w[p] == 0) continue;
    Integer f = w[p];
    const auto& row = rows_[k];
    for (std::size_t j = 0; j < dim_; ++j) w[j] = row[p] * w[j] - f * row[j];
    divide_by_content(w);
  }
  return w;
}

bool RowSpace::add(std::span<const Integer> v) {
  IntVector w = reduce(v);
  auto it = std::find_if(w.begin(), w.end(), [](const Integer& x) { return x != 0; });
  if (it == w.end()) return false;
  pivots_.push_back(static_cast<std::size_t>(it - w.begin()));
  rows_.push_back(std::move(w));
  return true;
}

bool RowSpace::contains(std::span<const Integer> v) const {
  IntVector w = reduce(v);
  return std::all_of(w.begin(), w.end(), [](const Integer& x) { return x == 0; });
}

Lattice::Lattice(std::size_t ambient_dim, IntMatrix basis) : ambient_dim_(ambient_dim), basis_(std::move(basis)) {
  if (basis_.rows() > 0 && basis_.cols() != ambient_dim_) throw std::invalid_argument("Lattice: basis width differs from ambient dimension");
  if (basis_.rows() == 0) basis_ = IntMatrix(0, ambient_dim_);
  std::size_t last = 0;
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    std::size_t p = 0;
    while (p < ambient_dim_ && basis_(r, p) == 0) ++p;
    if (p == ambient_dim_ || (r > 0 && p <= last) || basis_(r, p) <= 0) {
      throw std::invalid_argument("Lattice: basis is not in Hermite normal form");
    }
    for (std::size_t i = 0; i < r; ++i) {
      if (basis_(i, p) < 0 || basis_(i, p) >= basis_(r, p)) throw std::invalid_argument("Lattice: entries above a pivot are not reduced");
    }
    pivots_.push_back(p);
    last = p;
  }
}

Lattice hnf(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    bool found = false;
    while (true) {
      std::size_t p = rows;
      for (std::size_t i = r; i < rows; ++i) {
        if (a(i, c) != 0 && (p == rows || abs(a(i, c)) < abs(a(p, c)))) p = i;
      }
      if (p == rows) break;
      found = true;
      swap_rows(a, r, p);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (a(i, c) == 0) continue;
        row_axpy(a, i, r, floor_div(a(i, c), a(r, c)));
        if (a(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (!found) continue;
    if (a(r, c) < 0) negate_row(a, r);
    for (std::size_t i = 0; i < r; ++i) row_axpy(a, i, r, floor_div(a(i, c), a(r, c)));
    ++r;
  }
  IntMatrix basis(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t c = 0; c < cols; ++c) basis(i, c) = a(i, c);
  return Lattice(cols, std::move(basis));
}

SmithForm smith(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  SmithForm s{identity_matrix(rows), identity_matrix(cols), identity_matrix(cols), m, {}};
  IntMatrix& a = s.d;

  auto row_op = [&](std::size_t target, std::size_t source, const Integer& q) {
    row_axpy(a, target, source, q);
    row_axpy(s.u, target, source, q);
  };
  auto col_op = [&](std::size_t target, std::size_t source, const Integer& q) {
    col_axpy(a, target, source, q);
    col_axpy(s.v, target, source, q);
    row_axpy(s.v_inverse, source, target, -q);
  };
  auto row_swap = [&](std::size_t i, std::size_t j) {
    swap_rows(a, i, j);
    swap_rows(s.u, i, j);
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    swap_cols(a, i, j);
    swap_cols(s.v, i, j);
    swap_rows(s.v_inverse, i, j);
  };

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a(i, j) != 0 && (pr == rows || abs(a(i, j)) < abs(a(pr, pc)))) {
          pr = i;
          pc = j;
        }
    if (pr == rows) break;
    row_swap(t, pr);
    col_swap(t, pc);

    while (true) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        row_op(i, t, floor_div(a(i, t), a(t, t)));
        dirty = dirty || a(i, t) != 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        col_op(j, t, floor_div(a(t, j), a(t, t)));
        dirty = dirty || a(t, j) != 0;
      }
      if (dirty) {
        std::size_t best_r = t, best_c = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (a(i, t) != 0 && abs(a(i, t)) < abs(a(best_r, best_c))) {
            best_r = i;
            best_c = t;
          }
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(t, j) != 0 && abs(a(t, j)) < abs(a(best_r, best_c))) {
            best_r = t;
            best_c = j;
          }
        row_swap(t, best_r);
        col_swap(t, best_c);
        continue;
      }
      // Row and column t are clear; enforce divisibility of the trailing block.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      row_op(t, bad, Integer(-1));
    }
    if (a(t, t) < 0) {
      negate_row(a, t);
      negate_row(s.u, t);
    }
    s.divisors.push_back(a(t, t));
  }
  return s;
}

std::vector<Integer> snf(const IntMatrix& m) { return smith(m).divisors; }

Lattice saturation(const IntMatrix& m) {
  Lattice h = hnf(m);
  const std::size_t r = h.rank();
  const std::size_t n = m.cols();
  if (r == 0) return h;
  SmithForm s = smith(h.basis());
  IntMatrix rows(r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t c = 0; c < n; ++c) rows(i, c) = s.v_inverse(i, c);
  return hnf(rows);
}

std::optional<IntVector> lattice_member(const Lattice& l, std::span<const Integer> z) {
  if (z.size() != l.ambient_dim()) throw std::invalid_argument("lattice_member: dimension mismatch");
  IntVector residual(z.begin(), z.end());
  IntVector coefficients(l.rank());
  const auto& b = l.basis();
  for (std::size_t i = 0; i < l.rank(); ++i) {
    const std::size_t p = l.pivots()[i];
    for (std::size_t c = 0; c < p; ++c)
      if (residual[c] != 0) return std::nullopt;
    if (residual[p] % b(i, p) != 0) return std::nullopt;
    coefficients[i] = residual[p] / b(i, p);
    for (std::size_t c = p; c < l.ambient_dim(); ++c) residual[c] -= coefficients[i] * b(i, c);
  }
  for (const auto& x : residual)
    if (x != 0) return std::nullopt;
  return coefficients;
}

bool lattice_equal(const Lattice& a, const Lattice& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("lattice_equal: dimension mismatch");
  return a == b;
}

std::optional<Integer> lattice_index(const Lattice& sub, const Lattice& super) {
  if (sub.ambient_dim() != super.ambient_dim()) throw std::invalid_argument("lattice_index: dimension mismatch");
  IntMatrix coords(sub.rank(), super.rank());
  for (std::size_t i = 0; i < sub.rank(); ++i) {
    auto c = lattice_member(super, sub.basis().row(i));
    if (!c) throw std::invalid_argument("lattice_index: first lattice is not contained in the second");
    for (std::size_t j = 0; j < super.rank(); ++j) coords(i, j) = (*c)[j];
  }
  if (sub.rank() < super.rank()) return std::nullopt;
  Integer index = 1;
  for (const auto& d : snf(coords)) index *= d;
  return index;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  const std::size_t p = m.rows(), n = m.cols();
  IntMatrix t(n, p + n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < p; ++j) t(i, j) = m(j, i);
    t(i, p + i) = 1;
  }
  Lattice h = hnf(t);
  IntMatrix kernel(0, n);
  for (std::size_t r = 0; r < h.rank(); ++r) {
    if (h.pivots()[r] < p) continue;
    std::vector<Integer> row(h.basis().row(r).begin() + static_cast<std::ptrdiff_t>(p), h.basis().row(r).end());
    kernel.append_row(row);
  }
  return kernel;
}

IntVector combine(const IntMatrix& rows, std::span<const Integer> coefficients) {
  if (coefficients.size() != rows.rows()) throw std::invalid_argument("combine: coefficient count mismatch");
  IntVector out(rows.cols());
  for (std::size_t r = 0; r < rows.rows(); ++r) {
    if (coefficients[r] == 0) continue;
    for (std::size_t c = 0; c < rows.cols(); ++c) out[c] += coefficients[r] * rows(r, c);
  }
  return out;
}

}  // namespace matchlat
