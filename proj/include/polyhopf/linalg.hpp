#ifndef POLYHOPF_LINALG_HPP
#define POLYHOPF_LINALG_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cyclotomic.hpp"
#include "prime_field.hpp"

namespace polyhopf {

template <class F>
struct FieldOf;
template <>
struct FieldOf<CycNumber> {
  using type = CycField;
};
template <>
struct FieldOf<Fq> {
  using type = PrimeField;
};
template <class F>
using FieldFor = typename FieldOf<F>::type;

template <class F>
using Vec = std::vector<F>;

template <class F>
bool is_zero_vec(const Vec<F>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

/// v += c * w, skipping structural zeros of w.
template <class F>
void axpy(Vec<F>& v, const F& c, const Vec<F>& w) {
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (!w[i].is_zero()) v[i] += c * w[i];
}

/// Row space kept in fully reduced echelon form. Pivot entries are 1 and
/// every pivot column is zero in all other rows.
template <class F>
class Subspace {
public:
  using Field = FieldFor<F>;

  Subspace() = default;
  Subspace(std::size_t ambient, Field field) : ambient_(ambient), field_(field) {}

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const Field& field() const { return field_; }
  const std::vector<Vec<F>>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Reduce v against the current basis in place.
  void reduce(Vec<F>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const F c = v[pivots_[r]];
      if (!c.is_zero()) axpy(v, -c, rows_[r]);
    }
  }

  /// Adds v to the span; returns true when the dimension grew.
  bool insert(Vec<F> v) {
    if (v.size() != ambient_) throw std::invalid_argument("Subspace::insert: dimension mismatch");
    reduce(v);
    std::size_t p = 0;
    while (p < v.size() && v[p].is_zero()) ++p;
    if (p == v.size()) return false;
    const F inv = v[p].inverse();
    for (auto& x : v)
      if (!x.is_zero()) x = x * inv;
    for (auto& row : rows_) {
      const F c = row[p];
      if (!c.is_zero()) axpy(row, -c, v);
    }
    // Keep rows sorted by pivot column.
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, p);
    return true;
  }

  bool contains(Vec<F> v) const {
    reduce(v);
    return is_zero_vec(v);
  }

  /// Coordinates of v in the echelon basis, or nullopt when v is outside.
  std::optional<Vec<F>> coords(const Vec<F>& v) const {
    Vec<F> c(rows_.size(), field_.zero());
    Vec<F> rest = v;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      c[r] = v[pivots_[r]];
      if (!c[r].is_zero()) axpy(rest, -c[r], rows_[r]);
    }
    if (!is_zero_vec(rest)) return std::nullopt;
    return c;
  }

  bool contains_all(const Subspace& other) const {
    for (const auto& r : other.rows_)
      if (!contains(r)) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_ || a.rows_.size() != b.rows_.size()) return false;
    if (a.pivots_ != b.pivots_) return false;
    for (std::size_t r = 0; r < a.rows_.size(); ++r)
      for (std::size_t i = 0; i < a.ambient_; ++i)
        if (!(a.rows_[r][i] == b.rows_[r][i])) return false;
    return true;
  }

  /// Basis of the solution space {x : <row, x> = 0 for every row}.
  std::vector<Vec<F>> annihilator() const {
    std::vector<bool> is_pivot(ambient_, false);
    for (auto p : pivots_) is_pivot[p] = true;
    std::vector<Vec<F>> out;
    for (std::size_t f = 0; f < ambient_; ++f) {
      if (is_pivot[f]) continue;
      Vec<F> x(ambient_, field_.zero());
      x[f] = field_.one();
      for (std::size_t r = 0; r < rows_.size(); ++r)
        if (!rows_[r][f].is_zero()) x[pivots_[r]] = -rows_[r][f];
      out.push_back(std::move(x));
    }
    return out;
  }

private:
  std::size_t ambient_ = 0;
  Field field_{};
  std::vector<Vec<F>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Incrementally fed homogeneous linear system in n unknowns.
template <class F>
class LinearSystem {
public:
  using Field = FieldFor<F>;
  LinearSystem(std::size_t unknowns, Field field) : rows_(unknowns, field) {}

  bool add(Vec<F> equation) { return rows_.insert(std::move(equation)); }
  std::size_t rank() const { return rows_.dim(); }
  std::size_t unknowns() const { return rows_.ambient(); }
  std::vector<Vec<F>> solutions() const { return rows_.annihilator(); }

private:
  Subspace<F> rows_;
};

/// Dense matrix with row-major storage.
template <class F>
struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<F> a;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, const F& zero) : rows(r), cols(c), a(r * c, zero) {}

  F& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  static Matrix identity(std::size_t n, const F& zero, const F& one) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  Matrix operator*(const Matrix& b) const {
    if (cols != b.rows) throw std::invalid_argument("Matrix: shape mismatch");
    Matrix c(rows, b.cols, zero_like());
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t k = 0; k < cols; ++k) {
        const F& x = (*this)(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols; ++j) {
          const F& y = b(k, j);
          if (!y.is_zero()) c(i, j) += x * y;
        }
      }
    return c;
  }

  Vec<F> apply(const Vec<F>& v) const {
    Vec<F> out(rows, zero_like());
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols, rows, zero_like());
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    if (x.rows != y.rows || x.cols != y.cols) return false;
    for (std::size_t i = 0; i < x.a.size(); ++i)
      if (!(x.a[i] == y.a[i])) return false;
    return true;
  }

private:
  F zero_like() const { return a.empty() ? F() : a[0] - a[0]; }
};

/// Rank of a list of vectors.
template <class F>
std::size_t rank_of(const std::vector<Vec<F>>& vs, std::size_t ambient, FieldFor<F> field) {
  Subspace<F> s(ambient, field);
  for (const auto& v : vs) s.insert(v);
  return s.dim();
}

/// Inverse of a square matrix, or nullopt when singular.
template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m, FieldFor<F> field) {
  const std::size_t n = m.rows;
  Matrix<F> a = m;
  Matrix<F> inv = Matrix<F>::identity(n, field.zero(), field.one());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col).is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a(piv, j), a(col, j));
      std::swap(inv(piv, j), inv(col, j));
    }
    const F s = a(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) = a(col, j) * s;
      inv(col, j) = inv(col, j) * s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col).is_zero()) continue;
      const F f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) = a(i, j) - f * a(col, j);
        inv(i, j) = inv(i, j) - f * inv(col, j);
      }
    }
  }
  return inv;
}

/// Coefficients c with sum_i c_i vs[i] = target, or nullopt. The vectors
/// must be linearly independent.
template <class F>
std::optional<Vec<F>> solve_combination(const std::vector<Vec<F>>& vs, const Vec<F>& target, FieldFor<F> field) {
  const std::size_t n = vs.size();
  const std::size_t len = target.size();
  // Augmented rows: [v_i | e_i]; reduce target against them tracking coefficients.
  Subspace<F> s(len + n, field);
  for (std::size_t i = 0; i < n; ++i) {
    Vec<F> row(len + n, field.zero());
    for (std::size_t k = 0; k < len; ++k) row[k] = vs[i][k];
    row[len + i] = field.one();
    s.insert(std::move(row));
  }
  Vec<F> t(len + n, field.zero());
  for (std::size_t k = 0; k < len; ++k) t[k] = target[k];
  s.reduce(t);
  for (std::size_t k = 0; k < len; ++k)
    if (!t[k].is_zero()) return std::nullopt;
  // t = target - sum c_i v_i reduced to zero in the first block, so the tail is -c.
  Vec<F> c(n, field.zero());
  for (std::size_t i = 0; i < n; ++i) c[i] = -t[len + i];
  return c;
}

}  // namespace polyhopf

#endif  // POLYHOPF_LINALG_HPP
