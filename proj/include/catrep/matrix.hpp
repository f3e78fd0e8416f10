#pragma once

// Dense matrices over an exact field and the elimination primitives built on
// them. Vectors are columns; a linear map V -> W is stored as a
// dim(W) x dim(V) matrix.

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "catrep/field.hpp"

namespace catrep {

template <class F>
using Vec = std::vector<typename F::Element>;

template <class F>
class Mat {
 public:
  using Element = typename F::Element;

  Mat() = default;
  Mat(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static Mat identity(const F& field, std::size_t n) {
    Mat m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  /// Matrix whose columns are the given vectors, each of length rows.
  static Mat from_columns(const F& field, std::size_t rows, std::span<const Vec<F>> columns) {
    Mat m(field, rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows) throw std::invalid_argument("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Element& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Element& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Element> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Element> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  Vec<F> column(std::size_t j) const {
    Vec<F> v(rows_, field_.zero());
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [&](const Element& e) { return field_.is_zero(e); });
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  F field_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Element> data_;
};

template <class F>
Mat<F> transpose(const Mat<F>& a) {
  Mat<F> t(a.field(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

template <class F>
Mat<F> multiply(const Mat<F>& a, const Mat<F>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape mismatch");
  const F& f = a.field();
  Mat<F> c(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto crow = c.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& aik = a(i, k);
      if (f.is_zero(aik)) continue;
      auto brow = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!f.is_zero(brow[j])) crow[j] = f.add(crow[j], f.mul(aik, brow[j]));
    }
  }
  return c;
}

template <class F>
Vec<F> mul_vec(const Mat<F>& a, const Vec<F>& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("apply: shape mismatch");
  const F& f = a.field();
  Vec<F> out(a.rows(), f.zero());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto r = a.row(i);
    auto acc = f.zero();
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!f.is_zero(r[j]) && !f.is_zero(v[j])) acc = f.add(acc, f.mul(r[j], v[j]));
    out[i] = acc;
  }
  return out;
}

/// [a | b]
template <class F>
Mat<F> hstack(const Mat<F>& a, const Mat<F>& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
  Mat<F> c(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

template <class F>
Mat<F> select_columns(const Mat<F>& a, std::span<const std::size_t> cols) {
  Mat<F> c(a.field(), a.rows(), cols.size());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < cols.size(); ++k) c(i, k) = a(i, cols[k]);
  return c;
}

template <class F>
Mat<F> select_rows(const Mat<F>& a, std::span<const std::size_t> rows) {
  Mat<F> c(a.field(), rows.size(), a.cols());
  for (std::size_t k = 0; k < rows.size(); ++k)
    for (std::size_t j = 0; j < a.cols(); ++j) c(k, j) = a(rows[k], j);
  return c;
}

template <class F>
struct Echelon {
  Mat<F> reduced;                   // reduced row-echelon form, zero rows last
  std::vector<std::size_t> pivots;  // strictly increasing pivot columns
  std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination to reduced row-echelon form.
template <class F>
Echelon<F> row_reduce(Mat<F> a) {
  const F& f = a.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && f.is_zero(a(p, c))) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(p, r);
    auto prow = a.row(r);
    if (!f.is_one(prow[c])) {
      auto inv = f.inv(prow[c]);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (!f.is_zero(prow[j])) prow[j] = f.mul(prow[j], inv);
    }
    // Nonzero tail of the pivot row, so sparse rows eliminate cheaply.
    std::vector<std::size_t> support;
    for (std::size_t j = c; j < a.cols(); ++j)
      if (!f.is_zero(prow[j])) support.push_back(j);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      auto irow = a.row(i);
      if (f.is_zero(irow[c])) continue;
      auto factor = irow[c];
      for (std::size_t j : support) f.sub_mul(irow[j], factor, prow[j]);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

template <class F>
std::size_t rank(const Mat<F>& a) {
  if (a.empty()) return 0;
  // Eliminate along the shorter side.
  if (a.rows() > a.cols()) return row_reduce(transpose(a)).rank();
  return row_reduce(a).rank();
}

/// Columns form a basis of ker(a), one per free column, in free-column order.
template <class F>
Mat<F> kernel_basis(const Mat<F>& a) {
  const F& f = a.field();
  auto ech = row_reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  Mat<F> k(f, a.cols(), free_cols.size());
  for (std::size_t idx = 0; idx < free_cols.size(); ++idx) {
    std::size_t fc = free_cols[idx];
    k(fc, idx) = f.one();
    for (std::size_t i = 0; i < ech.pivots.size(); ++i)
      k(ech.pivots[i], idx) = f.neg(ech.reduced(i, fc));
  }
  return k;
}

/// Solves a x = b; nullopt when b is not in the column span of a.
template <class F>
std::optional<Vec<F>> solve(const Mat<F>& a, const Vec<F>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: rhs length mismatch");
  const F& f = a.field();
  Mat<F> aug(f, a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto ech = row_reduce(std::move(aug));
  if (!ech.pivots.empty() && ech.pivots.back() == a.cols()) return std::nullopt;
  Vec<F> x(a.cols(), f.zero());
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) x[ech.pivots[i]] = ech.reduced(i, a.cols());
  return x;
}

/// Solves a X = b column by column in one elimination.
template <class F>
std::optional<Mat<F>> solve(const Mat<F>& a, const Mat<F>& b) {
  if (b.rows() != a.rows()) throw std::invalid_argument("solve: rhs row mismatch");
  const F& f = a.field();
  auto ech = row_reduce(hstack(a, b));
  Mat<F> x(f, a.cols(), b.cols());
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
    if (ech.pivots[i] >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(ech.pivots[i], j) = ech.reduced(i, a.cols() + j);
  }
  return x;
}

/// Canonical basis of the column span of s: the transposed nonzero rows of
/// rref(s^T). Equal subspaces give bit-identical matrices.
template <class F>
Mat<F> span_basis(const Mat<F>& s) {
  auto ech = row_reduce(transpose(s));
  Mat<F> basis(s.field(), s.rows(), ech.rank());
  for (std::size_t k = 0; k < ech.rank(); ++k)
    for (std::size_t i = 0; i < s.rows(); ++i) basis(i, k) = ech.reduced(k, i);
  return basis;
}

/// Standard basis vectors completing span(s) to the whole space.
template <class F>
Mat<F> complement_basis(const Mat<F>& s) {
  const F& f = s.field();
  auto ech = row_reduce(transpose(s));
  std::vector<bool> is_pivot(s.rows(), false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::size_t n = s.rows() - ech.rank();
  Mat<F> c(f, s.rows(), n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < s.rows(); ++i)
    if (!is_pivot[i]) c(i, k++) = f.one();
  return c;
}

/// Incrementally built subspace of F^n kept in echelon form.
template <class F>
class EchelonSpace {
 public:
  EchelonSpace(F field, std::size_t ambient) : field_(std::move(field)), ambient_(ambient) {}

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  bool full() const { return rows_.size() == ambient_; }

  /// Reduces v against the stored rows; returns the residue.
  Vec<F> reduce(Vec<F> v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const auto& c = v[pivots_[k]];
      if (field_.is_zero(c)) continue;
      auto factor = c;
      for (std::size_t j : supports_[k]) field_.sub_mul(v[j], factor, rows_[k][j]);
    }
    return v;
  }

  bool contains(const Vec<F>& v) const {
    auto r = reduce(v);
    return std::all_of(r.begin(), r.end(), [&](const auto& e) { return field_.is_zero(e); });
  }

  /// Adds v; returns false when v was already in the span.
  bool insert(const Vec<F>& v) {
    if (v.size() != ambient_) throw std::invalid_argument("EchelonSpace: vector length mismatch");
    if (full()) return false;
    auto r = reduce(v);
    std::size_t p = 0;
    while (p < r.size() && field_.is_zero(r[p])) ++p;
    if (p == r.size()) return false;
    auto inv = field_.inv(r[p]);
    std::vector<std::size_t> support;
    for (std::size_t j = p; j < r.size(); ++j) {
      if (field_.is_zero(r[j])) continue;
      r[j] = field_.mul(r[j], inv);
      support.push_back(j);
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    supports_.push_back(std::move(support));
    return true;
  }

  /// Columns spanning the space (echelon, not canonical).
  Mat<F> basis() const { return Mat<F>::from_columns(field_, ambient_, rows_); }

  /// Reduced row-echelon form of the stored rows; canonical for the subspace.
  Echelon<F> rref() const {
    const std::size_t n = rows_.size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return pivots_[a] < pivots_[b]; });
    Mat<F> m(field_, n, ambient_);
    std::vector<std::size_t> piv(n);
    for (std::size_t i = 0; i < n; ++i) {
      piv[i] = pivots_[order[i]];
      for (std::size_t j : supports_[order[i]]) m(i, j) = rows_[order[i]][j];
    }
    for (std::size_t i = n; i-- > 0;) {
      std::vector<std::size_t> support;
      for (std::size_t j = piv[i]; j < ambient_; ++j)
        if (!field_.is_zero(m(i, j))) support.push_back(j);
      for (std::size_t k = 0; k < i; ++k) {
        if (field_.is_zero(m(k, piv[i]))) continue;
        auto factor = m(k, piv[i]);
        for (std::size_t j : support) field_.sub_mul(m(k, j), factor, m(i, j));
      }
    }
    return {std::move(m), std::move(piv)};
  }

 private:
  F field_;
  std::size_t ambient_;
  std::vector<Vec<F>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<std::size_t>> supports_;
};

}  // namespace catrep
